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

#include "entangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace certlab {

namespace {

const Complex kI(0.0, 1.0);

void require_square(int total, int local_dim) {
    if (local_dim < 2) fail(ErrorCode::invalid_dimension, "local dimension must be >= 2");
    if (total != local_dim * local_dim)
        fail(ErrorCode::shape, "dimension " + std::to_string(total) + " is not " + std::to_string(local_dim) + "^2");
}

double entropy_of(const RVector& lambda) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        if (lambda(i) > 1e-15) s -= lambda(i) * std::log(lambda(i));
    return s;
}

}  // namespace

namespace detail {

double entanglement_raw(const CVector& psi, int n) {
    Eigen::Map<const CMatrix> m(psi.data(), n, n);
    Eigen::JacobiSVD<CMatrix> svd(m);
    RVector lambda = svd.singularValues().cwiseAbs2();
    return entropy_of(lambda / lambda.sum());
}

double entanglement_gradient(const CVector& psi, int n, CVector& grad) {
    Eigen::Map<const CMatrix> m(psi.data(), n, n);
    CMatrix rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
    RVector lambda = es.eigenvalues().cwiseMax(0.0);
    RVector hp(n);
    for (int k = 0; k < n; ++k) hp(k) = lambda(k) > 1e-300 ? -(std::log(lambda(k)) + 1.0) : 0.0;
    const CMatrix& v = es.eigenvectors();
    CMatrix g = 2.0 * v * hp.asDiagonal() * (v.adjoint() * m);
    grad = Eigen::Map<const CVector>(g.data(), n * n);
    return entropy_of(lambda);
}

}  // namespace detail

SplittingSet::SplittingSet(int local_dim, std::vector<UnitaryMatrix> gates) : n_(local_dim), gates_(std::move(gates)) {
    if (gates_.empty()) fail(ErrorCode::invalid_argument, "splitting set is empty");
    for (const auto& g : gates_) require_square(g.dim(), n_);
    const int d = n_ * n_;
    if (max_abs_diff(gates_.front().matrix(), CMatrix::Identity(d, d)) > 1e-12)
        fail(ErrorCode::precondition, "first gate of a splitting set must be the identity");
}

double entanglement_entropy(const PureState& state, int local_dim) {
    require_square(state.dim(), local_dim);
    return detail::entanglement_raw(state.amplitudes(), local_dim);
}

double average_entanglement(const PureState& state, const SplittingSet& ss) {
    require_square(state.dim(), ss.local_dim());
    double total = 0.0;
    for (const auto& w : ss.gates())
        total += detail::entanglement_raw(w.matrix().adjoint() * state.amplitudes(), ss.local_dim());
    return total / ss.size();
}

double min_column_entanglement(const UnitaryMatrix& w, int local_dim) {
    require_square(w.dim(), local_dim);
    double lo = std::log(double(local_dim));
    for (int c = 0; c < w.dim(); ++c) lo = std::min(lo, detail::entanglement_raw(w.matrix().col(c), local_dim));
    return lo;
}

bool is_entangling_gate(const UnitaryMatrix& w, int local_dim, double tol) {
    return min_column_entanglement(w, local_dim) >= std::log(double(local_dim)) - tol;
}

std::vector<MebPairCheck> meb_pair_checks(const std::vector<UnitaryMatrix>& ws, int local_dim, double tol) {
    if (ws.size() < 2) fail(ErrorCode::invalid_argument, "need at least two gates");
    std::vector<MebPairCheck> out;
    const double target = std::log(double(local_dim));
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
            if (i == j) continue;
            UnitaryMatrix rel(ws[i].matrix().adjoint() * ws[j].matrix(), 1e-8);
            double e = min_column_entanglement(rel, local_dim);
            out.push_back({static_cast<int>(i), static_cast<int>(j), e, e >= target - tol});
        }
    return out;
}

bool is_mutually_entangled_set(const std::vector<UnitaryMatrix>& ws, int local_dim, double tol) {
    for (const auto& c : meb_pair_checks(ws, local_dim, tol))
        if (!c.pass) return false;
    return true;
}

CMatrix canonical_gate(double b1, double b2, double b3) {
    const Complex ep = std::polar(1.0, b3), em = std::polar(1.0, -b3);
    const double c1 = std::cos(b1), s1 = std::sin(b1), c2 = std::cos(b2), s2 = std::sin(b2);
    CMatrix w = CMatrix::Zero(4, 4);
    w(0, 0) = ep * c1;
    w(0, 3) = kI * ep * s1;
    w(1, 1) = em * c2;
    w(1, 2) = kI * em * s2;
    w(2, 1) = kI * em * s2;
    w(2, 2) = em * c2;
    w(3, 0) = kI * ep * s1;
    w(3, 3) = ep * c1;
    return w;
}

CMatrix reconstruct(const CanonicalTwoQubit& k) {
    return std::polar(1.0, k.phase) * kron(k.a, k.b) * canonical_gate(k.b1, k.b2, k.b3) * kron(k.c, k.d);
}

namespace {

CMatrix magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix q(4, 4);
    q << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return s * q;
}

CMatrix pauli(char p) {
    CMatrix m(2, 2);
    switch (p) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -kI, kI, 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        default: m = CMatrix::Identity(2, 2);
    }
    return m;
}

// exp(-i t P) for a Pauli P.
CMatrix pauli_rotation(char p, double t) {
    return std::cos(t) * CMatrix::Identity(2, 2) - kI * std::sin(t) * pauli(p);
}

// Splits K = A (x) B with det A = 1.
std::pair<CMatrix, CMatrix> factor_local(const CMatrix& k) {
    CMatrix r(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp) r(a * 2 + ap, b * 2 + bp) = k(a * 2 + b, ap * 2 + bp);
    Eigen::JacobiSVD<CMatrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double s = std::sqrt(svd.singularValues()(0));
    CMatrix a(2, 2), b(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a(i, j) = s * svd.matrixU()(i * 2 + j, 0);
            b(i, j) = s * std::conj(svd.matrixV()(i * 2 + j, 0));
        }
    Complex rt = std::sqrt(a.determinant());
    return {a / rt, b * rt};
}

// Real orthogonal P (det +1) with P^T M P diagonal for a complex symmetric
// unitary M, via a generic real combination of its commuting Re and Im parts.
bool orthogonal_diagonalize(const CMatrix& m, RMatrix& p, CVector& d) {
    const RMatrix re = 0.5 * (m.real() + m.real().transpose());
    const RMatrix im = 0.5 * (m.imag() + m.imag().transpose());
    for (double r : {0.5772156649015329, 1.4142135623730951, 2.718281828459045, 0.3183098861837907, 7.389056098930650}) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(re + r * im);
        p = es.eigenvectors();
        if (p.determinant() < 0) p.col(0) = -p.col(0);
        CMatrix diag = p.transpose() * m * p;
        d = diag.diagonal();
        CMatrix off = diag;
        off.diagonal().setZero();
        if (off.cwiseAbs().maxCoeff() < 1e-9) return true;
    }
    return false;
}

struct Frame {
    CMatrix left;
    CMatrix right;
    double x, y, z;  // coefficients of XX, YY, ZZ
    double phase;
};

void shift(Frame& f, double& coord, char p) {
    const double k = std::round(coord / (kPi / 2.0));
    if (k == 0.0) return;
    coord -= k * kPi / 2.0;
    // exp(i k pi/2 PP) = (i PP)^k
    const CMatrix pp = kron(pauli(p), pauli(p));
    const int km = static_cast<int>(((static_cast<long long>(k) % 4) + 4) % 4);
    for (int i = 0; i < km; ++i) f.right = pp * f.right;
    f.phase += k * kPi / 2.0;
}

// W(x,y,z) = V W(x',y',z') V^dag with V local.
void conjugate(Frame& f, const CMatrix& v) {
    f.left = f.left * v;
    f.right = v.adjoint() * f.right;
}

void flip(Frame& f, char keep) {
    const CMatrix id = CMatrix::Identity(2, 2);
    conjugate(f, kron(pauli(keep), id));
    if (keep != 'x') f.x = -f.x;
    if (keep != 'y') f.y = -f.y;
    if (keep != 'z') f.z = -f.z;
}

void swap_xy(Frame& f) {
    CMatrix s(2, 2);
    s << 1, 0, 0, kI;
    // (S(x)S) W(y,x,z) (S(x)S)^dag = W(x,y,z)
    conjugate(f, kron(s, s).adjoint());
    std::swap(f.x, f.y);
}

void swap_xz(Frame& f) {
    CMatrix r = pauli_rotation('y', kPi / 4.0);
    conjugate(f, kron(r, r).adjoint());
    std::swap(f.x, f.z);
}

void swap_yz(Frame& f) {
    CMatrix r = pauli_rotation('x', kPi / 4.0);
    conjugate(f, kron(r, r).adjoint());
    std::swap(f.y, f.z);
}

void canonicalize(Frame& f) {
    shift(f, f.x, 'x');
    shift(f, f.y, 'y');
    shift(f, f.z, 'z');
    // Half-open interval (-pi/4, pi/4].
    auto fold = [&](double& c, char p) {
        if (c <= -kPi / 4.0 + 1e-13) {
            c += kPi / 2.0;
            const CMatrix pp = kron(pauli(p), pauli(p));
            for (int i = 0; i < 3; ++i) f.right = pp * f.right;
            f.phase -= kPi / 2.0;
        }
    };
    fold(f.x, 'x');
    fold(f.y, 'y');
    fold(f.z, 'z');
    // Order |x| >= |z| >= |y|.
    if (std::abs(f.z) > std::abs(f.x) + 1e-14) swap_xz(f);
    if (std::abs(f.y) > std::abs(f.x) + 1e-14) swap_xy(f);
    if (std::abs(f.y) > std::abs(f.z) + 1e-14) swap_yz(f);
    if (f.x < 0.0) flip(f, 'y');
    if (f.y > 0.0) flip(f, 'x');
    if (std::abs(f.x - kPi / 4.0) < 1e-12 && f.z < 0.0) {
        // W(pi/4, y, z) = W(-pi/4, y, z) (i XX), then flip the (x, z) pair.
        const CMatrix xx = kron(pauli('x'), pauli('x'));
        f.right = xx * f.right;
        f.phase += kPi / 2.0;
        f.x = -kPi / 4.0;
        flip(f, 'y');
    }
}

}  // namespace

CanonicalTwoQubit canonical_two_qubit(const UnitaryMatrix& w) {
    if (w.dim() != 4) fail(ErrorCode::shape, "canonical_two_qubit needs a 4x4 unitary");
    const CMatrix& u = w.matrix();
    const double phase0 = std::arg(u.determinant()) / 4.0;
    const CMatrix us = std::polar(1.0, -phase0) * u;
    const CMatrix q = magic_basis();
    const CMatrix um = q.adjoint() * us * q;
    const CMatrix m2 = um.transpose() * um;
    RMatrix p;
    CVector d;
    if (!orthogonal_diagonalize(m2, p, d))
        fail(ErrorCode::decomposition_failed, "could not diagonalize U_m^T U_m by a real rotation");
    RVector theta(4);
    for (int k = 0; k < 4; ++k) theta(k) = std::arg(d(k)) / 2.0;
    CMatrix dinv = CMatrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) dinv(k, k) = std::polar(1.0, -theta(k));
    CMatrix o1 = um * p.cast<Complex>() * dinv;
    if (o1.real().determinant() < 0.0) {
        theta(0) += kPi;
        o1.col(0) = -o1.col(0);
    }
    // theta_k = g + s_k . (x, y, z) with s_k the XX, YY, ZZ eigenvalues on the magic columns.
    static const std::array<std::array<double, 3>, 4> s = {{{1, -1, 1}, {1, 1, -1}, {-1, -1, -1}, {-1, 1, 1}}};
    Frame f;
    f.x = f.y = f.z = 0.0;
    double g = 0.0;
    for (int k = 0; k < 4; ++k) {
        g += theta(k) / 4.0;
        f.x += s[k][0] * theta(k) / 4.0;
        f.y += s[k][1] * theta(k) / 4.0;
        f.z += s[k][2] * theta(k) / 4.0;
    }
    f.left = q * o1.real().cast<Complex>() * q.adjoint();
    f.right = q * p.transpose().cast<Complex>() * q.adjoint();
    f.phase = phase0 + g;
    canonicalize(f);

    CanonicalTwoQubit out;
    std::tie(out.a, out.b) = factor_local(f.left);
    std::tie(out.c, out.d) = factor_local(f.right);
    out.b1 = f.x - f.y;
    out.b2 = f.x + f.y;
    out.b3 = f.z;
    // Absorb the determinant conventions of the factors into the phase.
    CMatrix rec = kron(out.a, out.b) * canonical_gate(out.b1, out.b2, out.b3) * kron(out.c, out.d);
    Complex ratio = (rec.adjoint() * u).trace() / 4.0;
    out.phase = std::arg(ratio);
    out.residual = max_abs_diff(reconstruct(out), u);
    if (!(out.residual <= 1e-8))
        fail(ErrorCode::decomposition_failed,
             "canonical decomposition residual " + std::to_string(out.residual) + " exceeds 1e-8");
    return out;
}

namespace {

constexpr double kWitnessTol = 1e-8;

TwoBasisState measure(const CVector& x, const UnitaryMatrix& w, bool fallback) {
    PureState st = PureState::normalized(x);
    return {st, detail::entanglement_raw(st.amplitudes(), 2),
            detail::entanglement_raw(w.matrix() * st.amplitudes(), 2), fallback};
}

OptimizationResult two_basis_search(const UnitaryMatrix& w, Direction dir, const SearchOptions& opt) {
    SphereObjective obj;
    obj.dim = 4;
    obj.value = [&w](const CVector& psi) {
        return detail::entanglement_raw(psi, 2) + detail::entanglement_raw(w.matrix() * psi, 2);
    };
    obj.gradient = [&w](const CVector& psi, CVector& g) {
        CVector g1, g2;
        double e = detail::entanglement_gradient(psi, 2, g1) + detail::entanglement_gradient(w.matrix() * psi, 2, g2);
        g = g1 + w.matrix().adjoint() * g2;
        return e;
    };
    return optimize_on_sphere(obj, dir, opt);
}

}  // namespace

TwoBasisState mutually_separable_state(const UnitaryMatrix& w, const SearchOptions& fallback) {
    if (w.dim() != 4) fail(ErrorCode::shape, "mutually_separable_state needs a 4x4 unitary");
    try {
        CanonicalTwoQubit k = canonical_two_qubit(w);
        CVector xc = CVector::Zero(4);
        const double s2c2 = std::sin(k.b2) * std::cos(k.b2);
        const double s1c1 = std::sin(k.b1) * std::cos(k.b1);
        if (std::abs(s2c2) < 1e-12) {
            xc(1) = 1.0;
        } else if (s1c1 / s2c2 >= 0.0) {
            xc(0) = 1.0;
            xc(1) = std::polar(std::sqrt(s1c1 / s2c2), 2.0 * k.b3);
        }
        if (xc.squaredNorm() > 0.0) {
            TwoBasisState st = measure(kron(k.c, k.d).adjoint() * xc.normalized(), w, false);
            if (st.entropy_before <= kWitnessTol && st.entropy_after <= kWitnessTol) return st;
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::decomposition_failed) throw;
    }
    OptimizationResult r = two_basis_search(w, Direction::min, fallback);
    TwoBasisState st = measure(r.state.amplitudes(), w, true);
    if (st.entropy_before > kWitnessTol || st.entropy_after > kWitnessTol)
        fail(ErrorCode::not_found, "no mutually separable state found");
    return st;
}

TwoBasisState mutually_entangled_state(const UnitaryMatrix& w, const SearchOptions& fallback) {
    if (w.dim() != 4) fail(ErrorCode::shape, "mutually_entangled_state needs a 4x4 unitary");
    const double target = std::log(2.0) - kWitnessTol;
    try {
        CanonicalTwoQubit k = canonical_two_qubit(w);
        CVector bell = CVector::Zero(4);
        bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
        TwoBasisState st = measure(kron(k.c, k.d).adjoint() * bell, w, false);
        if (st.entropy_before >= target && st.entropy_after >= target) return st;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::decomposition_failed) throw;
    }
    OptimizationResult r = two_basis_search(w, Direction::max, fallback);
    TwoBasisState st = measure(r.state.amplitudes(), w, true);
    if (st.entropy_before < target || st.entropy_after < target)
        fail(ErrorCode::not_found, "no mutually entangled state found");
    return st;
}

RmsEstimate entanglement_rms(const SplittingSet& ss, int samples, std::uint64_t seed, int workers) {
    const int d = ss.local_dim() * ss.local_dim();
    return detail::haar_rms(d, samples, seed, workers,
                            [&ss](const CVector& psi) { return average_entanglement(PureState(psi), ss); });
}

OptimizationResult extremize_average_entanglement(const SplittingSet& ss, Direction dir, const SearchOptions& opt) {
    if (opt.starts < 0) fail(ErrorCode::invalid_argument, "starts must be >= 1");
    const int n = ss.local_dim();
    std::vector<CMatrix> adj;
    for (const auto& w : ss.gates()) adj.push_back(w.matrix().adjoint());
    SphereObjective obj;
    obj.dim = n * n;
    obj.value = [&adj, n](const CVector& psi) {
        double t = 0.0;
        for (const auto& a : adj) t += detail::entanglement_raw(a * psi, n);
        return t / adj.size();
    };
    obj.gradient = [&adj, n](const CVector& psi, CVector& g) {
        double t = 0.0;
        g = CVector::Zero(psi.size());
        CVector gj;
        for (const auto& a : adj) {
            t += detail::entanglement_gradient(a * psi, n, gj);
            g.noalias() += a.adjoint() * gj;
        }
        g /= double(adj.size());
        return t / adj.size();
    };
    return optimize_on_sphere(obj, dir, opt);
}

}  // namespace certlab
