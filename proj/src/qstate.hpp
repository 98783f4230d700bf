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

#pragma once

// Dense complex linear algebra for pure states and unitaries: validated
// value types, Haar sampling, generalized Gell-Mann generators and the
// Bloch representation.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "rng.hpp"

namespace certlab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kStateNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

/// max-norm of U^dag U - 1.
double unitarity_residual(const CMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Unit-norm vector in C^dim, dim >= 2.
class PureState {
public:
    /// Validates the norm to within kStateNormTol.
    explicit PureState(CVector amplitudes);

    /// Rescales any nonzero vector onto the unit sphere.
    static PureState normalized(const CVector& v);
    static PureState basis(int dim, int index);

    int dim() const noexcept { return static_cast<int>(amps_.size()); }
    const CVector& amplitudes() const noexcept { return amps_; }
    Complex operator[](int i) const { return amps_(i); }

private:
    struct Trusted {};
    PureState(CVector amplitudes, Trusted) : amps_(std::move(amplitudes)) {}

    CVector amps_;
};

/// Square complex matrix whose columns form an orthonormal basis.
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(CMatrix entries, double tol = kUnitaryTol);

    static UnitaryMatrix identity(int dim);

    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const CMatrix& matrix() const noexcept { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }
    UnitaryMatrix adjoint() const;
    UnitaryMatrix operator*(const UnitaryMatrix& other) const;

private:
    CMatrix m_;
};

/// Nonnegative reals summing to one.
class ProbabilityVector {
public:
    /// Entries in [-1e-14, 0) are clamped to zero and the vector renormalized;
    /// anything more negative, or a sum off by more than 1e-12, is a domain error.
    explicit ProbabilityVector(RVector probs);

    int size() const noexcept { return static_cast<int>(p_.size()); }
    const RVector& values() const noexcept { return p_; }
    double operator[](int i) const { return p_(i); }

private:
    RVector p_;
};

struct HermitianBasis {
    int dim = 0;
    std::vector<CMatrix> generators;
};

struct BlochVector {
    int dim = 0;
    RVector x;
};

PureState haar_state(int dim, Rng& rng);
UnitaryMatrix haar_unitary(int dim, Rng& rng);

/// Generalized Gell-Mann matrices normalized to Tr(s_i s_j) = 2 delta_ij.
/// Order: symmetric (j<k lexicographic), antisymmetric (same order), diagonal.
HermitianBasis su_generators(int dim);

BlochVector bloch_vector(const PureState& state);
BlochVector bloch_vector(const PureState& state, const HermitianBasis& basis);

/// (1/N)(1 + sqrt(N(N-1)/2) sum_i x_i s_i).
CMatrix density_from_bloch(const BlochVector& b, const HermitianBasis& basis);

/// Max-norm residual of the pure-state constraint
/// 2(N-2) x = sqrt(N(N-1)/2) Tr((x.s)^2 s).
double bloch_constraint_residual(const BlochVector& b, const HermitianBasis& basis);

/// p_i = |<u_i|psi>|^2 where u_i is column i of the basis matrix.
ProbabilityVector measurement_probs(const PureState& state, const UnitaryMatrix& basis);

/// Raw amplitudes <u_i|psi> in the basis given by the columns of U.
CVector amplitudes_in(const PureState& state, const UnitaryMatrix& basis);

}  // namespace certlab
