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

// Bipartite entanglement on H_N (x) H_N: Schmidt entropies, averages over
// splittings, entangling-gate checks and the two-qubit canonical form.

#include <vector>

#include "optimize.hpp"

namespace certlab {

/// Ordered gates W_1 = 1, ..., W_L on H_N (x) H_N. The columns of W_j define
/// the j-th splitting.
class SplittingSet {
public:
    SplittingSet(int local_dim, std::vector<UnitaryMatrix> gates);

    int local_dim() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(gates_.size()); }
    const UnitaryMatrix& operator[](int j) const { return gates_.at(static_cast<std::size_t>(j)); }
    const std::vector<UnitaryMatrix>& gates() const noexcept { return gates_; }

private:
    int n_ = 0;
    std::vector<UnitaryMatrix> gates_;
};

/// Von Neumann entropy of either reduced state, from the Schmidt spectrum.
double entanglement_entropy(const PureState& state, int local_dim);

/// (1/L) sum_j E(W_j^dag psi): entanglement of psi in the product basis
/// given by the columns of W_j.
double average_entanglement(const PureState& state, const SplittingSet& ss);

/// Every column has E >= ln N - tol.
bool is_entangling_gate(const UnitaryMatrix& w, int local_dim, double tol);

/// Smallest column entanglement of W_i^dag W_j.
double min_column_entanglement(const UnitaryMatrix& w, int local_dim);

struct MebPairCheck {
    int i = 0;
    int j = 0;
    double min_entropy = 0.0;
    bool pass = false;
};

/// All ordered pairs i != j.
std::vector<MebPairCheck> meb_pair_checks(const std::vector<UnitaryMatrix>& ws, int local_dim, double tol);
bool is_mutually_entangled_set(const std::vector<UnitaryMatrix>& ws, int local_dim, double tol);

/// W = e^{i phase} (A (x) B) W_can(b1, b2, b3) (C (x) D).
struct CanonicalTwoQubit {
    CMatrix a, b, c, d;
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double phase = 0.0;
    double residual = 0.0;
};

/// exp(i(x XX + y YY + z ZZ)) written in the (b1, b2, b3) = (x - y, x + y, z)
/// parametrization.
CMatrix canonical_gate(double b1, double b2, double b3);

CMatrix reconstruct(const CanonicalTwoQubit& k);

/// Magic-basis decomposition reduced to b1 in [0, pi/2], b2 in [0, pi/4],
/// b3 in [-pi/4, pi/4] with b1 >= b2 and b1 + b2 <= pi/2 (b1 - b2 <= 2|b3|
/// <= b1 + b2). Throws decomposition_failed when the residual exceeds 1e-8.
CanonicalTwoQubit canonical_two_qubit(const UnitaryMatrix& w);

struct TwoBasisState {
    PureState state;
    double entropy_before = 0.0;  // E(x)
    double entropy_after = 0.0;   // E(W x)
    bool fallback = false;
};

/// x with E(x) and E(Wx) both ~ 0.
TwoBasisState mutually_separable_state(const UnitaryMatrix& w, const SearchOptions& fallback = {});
/// y with E(y) and E(Wy) both ~ ln 2.
TwoBasisState mutually_entangled_state(const UnitaryMatrix& w, const SearchOptions& fallback = {});

/// Haar Monte Carlo of the average entanglement.
RmsEstimate entanglement_rms(const SplittingSet& ss, int samples, std::uint64_t seed, int workers = 1);

OptimizationResult extremize_average_entanglement(const SplittingSet& ss, Direction dir,
                                                  const SearchOptions& opt = {});

namespace detail {

double entanglement_raw(const CVector& psi, int local_dim);
/// E and G = dE/dRe + i dE/dIm.
double entanglement_gradient(const CVector& psi, int local_dim, CVector& grad);

}  // namespace detail

}  // namespace certlab
