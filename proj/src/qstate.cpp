// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qstate.hpp"

#include <cmath>
#include <sstream>

namespace certlab {

namespace {

void require_dim(int dim) {
    if (dim < 2) fail(ErrorCode::invalid_dimension, "dimension must be >= 2, got " + std::to_string(dim));
}

CVector gaussian_vector(int dim, Rng& rng) {
    CVector v(dim);
    for (int i = 0; i < dim; ++i) {
        double re = rng.normal();
        double im = rng.normal();
        v(i) = Complex(re, im);
    }
    return v;
}

}  // namespace

double unitarity_residual(const CMatrix& m) {
    if (m.rows() != m.cols()) return INFINITY;
    CMatrix d = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::shape, "max_abs_diff: shape mismatch");
    return (a - b).cwiseAbs().maxCoeff();
}

PureState::PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
    require_dim(dim());
    double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kStateNormTol) {
        std::ostringstream os;
        os << "state norm^2 = " << n2 << " deviates from 1";
        fail(ErrorCode::domain, os.str());
    }
}

PureState PureState::normalized(const CVector& v) {
    require_dim(static_cast<int>(v.size()));
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) fail(ErrorCode::domain, "cannot normalize a zero or non-finite vector");
    return PureState(v / n, Trusted{});
}

PureState PureState::basis(int dim, int index) {
    require_dim(dim);
    if (index < 0 || index >= dim) fail(ErrorCode::invalid_argument, "basis index out of range");
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return PureState(std::move(v), Trusted{});
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries, double tol) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) fail(ErrorCode::shape, "unitary must be square");
    require_dim(dim());
    double r = unitarity_residual(m_);
    if (!(r <= tol)) {
        std::ostringstream os;
        os << "matrix is not unitary: residual max|U^dag U - 1| = " << r;
        fail(ErrorCode::not_unitary, os.str());
    }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
    require_dim(dim);
    return UnitaryMatrix(CMatrix::Identity(dim, dim));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& other) const {
    if (dim() != other.dim()) fail(ErrorCode::shape, "unitary product: dimension mismatch");
    return UnitaryMatrix(m_ * other.m_);
}

ProbabilityVector::ProbabilityVector(RVector probs) : p_(std::move(probs)) {
    if (p_.size() == 0) fail(ErrorCode::domain, "empty probability vector");
    for (Eigen::Index i = 0; i < p_.size(); ++i) {
        if (!std::isfinite(p_(i)) || p_(i) < -1e-14)
            fail(ErrorCode::domain, "probability entry " + std::to_string(p_(i)) + " is negative");
        if (p_(i) < 0.0) p_(i) = 0.0;
    }
    double s = p_.sum();
    if (std::abs(s - 1.0) > 1e-12) fail(ErrorCode::domain, "probabilities sum to " + std::to_string(s));
    p_ /= s;
}

PureState haar_state(int dim, Rng& rng) {
    require_dim(dim);
    return PureState::normalized(gaussian_vector(dim, rng));
}

UnitaryMatrix haar_unitary(int dim, Rng& rng) {
    require_dim(dim);
    CMatrix g(dim, dim);
    for (int c = 0; c < dim; ++c) g.col(c) = gaussian_vector(dim, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Phase fix: Q * diag(r_ii / |r_ii|) is exactly Haar distributed.
    for (int c = 0; c < dim; ++c) {
        Complex d = r(c, c);
        double a = std::abs(d);
        q.col(c) *= (a > 0.0 ? d / a : Complex(1.0));
    }
    return UnitaryMatrix(std::move(q));
}

HermitianBasis su_generators(int dim) {
    require_dim(dim);
    HermitianBasis out;
    out.dim = dim;
    out.generators.reserve(static_cast<std::size_t>(dim * dim - 1));
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            CMatrix s = CMatrix::Zero(dim, dim);
            s(j, k) = 1.0;
            s(k, j) = 1.0;
            out.generators.push_back(std::move(s));
        }
    const Complex i(0.0, 1.0);
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            CMatrix s = CMatrix::Zero(dim, dim);
            s(j, k) = -i;
            s(k, j) = i;
            out.generators.push_back(std::move(s));
        }
    for (int l = 1; l < dim; ++l) {
        CMatrix s = CMatrix::Zero(dim, dim);
        double c = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int m = 0; m < l; ++m) s(m, m) = c;
        s(l, l) = -c * l;
        out.generators.push_back(std::move(s));
    }
    return out;
}

BlochVector bloch_vector(const PureState& state) {
    return bloch_vector(state, su_generators(state.dim()));
}

BlochVector bloch_vector(const PureState& state, const HermitianBasis& basis) {
    const int n = state.dim();
    if (basis.dim != n) fail(ErrorCode::shape, "bloch_vector: generator dimension mismatch");
    const CVector& psi = state.amplitudes();
    const double scale = std::sqrt(2.0 * (n - 1.0) / n);
    BlochVector b;
    b.dim = n;
    b.x.resize(static_cast<Eigen::Index>(basis.generators.size()));
    for (std::size_t k = 0; k < basis.generators.size(); ++k) {
        Complex e = psi.dot(basis.generators[k] * psi);
        b.x(static_cast<Eigen::Index>(k)) = e.real() / scale;
    }
    return b;
}

CMatrix density_from_bloch(const BlochVector& b, const HermitianBasis& basis) {
    const int n = b.dim;
    CMatrix rho = CMatrix::Identity(n, n);
    const double c = std::sqrt(n * (n - 1.0) / 2.0);
    for (std::size_t k = 0; k < basis.generators.size(); ++k)
        rho += c * b.x(static_cast<Eigen::Index>(k)) * basis.generators[k];
    return rho / static_cast<double>(n);
}

double bloch_constraint_residual(const BlochVector& b, const HermitianBasis& basis) {
    const int n = b.dim;
    CMatrix xs = CMatrix::Zero(n, n);
    for (std::size_t k = 0; k < basis.generators.size(); ++k)
        xs += b.x(static_cast<Eigen::Index>(k)) * basis.generators[k];
    CMatrix xs2 = xs * xs;
    const double c = std::sqrt(n * (n - 1.0) / 2.0);
    double worst = 0.0;
    for (std::size_t k = 0; k < basis.generators.size(); ++k) {
        double rhs = c * (xs2 * basis.generators[k]).trace().real();
        double lhs = 2.0 * (n - 2.0) * b.x(static_cast<Eigen::Index>(k));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

CVector amplitudes_in(const PureState& state, const UnitaryMatrix& basis) {
    if (state.dim() != basis.dim()) fail(ErrorCode::shape, "state/basis dimension mismatch");
    return basis.matrix().adjoint() * state.amplitudes();
}

ProbabilityVector measurement_probs(const PureState& state, const UnitaryMatrix& basis) {
    CVector a = amplitudes_in(state, basis);
    RVector p = a.cwiseAbs2();
    // Round-off can leave the sum a few ulps from 1 for large N.
    p /= p.sum();
    return ProbabilityVector(std::move(p));
}

}  // namespace certlab
