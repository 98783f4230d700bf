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

#include <vector>

#include "entropy.hpp"

namespace certlab {

/// N x N array over symbols 1..N, each symbol once per row and column.
class LatinSquare {
public:
    /// cells[j][k] = lambda(j+1, k+1); validated.
    explicit LatinSquare(std::vector<std::vector<int>> cells);

    int size() const noexcept { return static_cast<int>(cells_.size()); }
    /// 1-based access, matching the usual lambda(j, k) notation.
    int operator()(int j, int k) const { return cells_.at(j - 1).at(k - 1); }
    const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }

private:
    std::vector<std::vector<int>> cells_;
};

UnitaryMatrix fourier(int n);
/// Complete set of p+1 mutually unbiased bases for prime p.
MeasurementSet mub_prime(int p);
bool is_prime(int n);

MeasurementSet qubit_triple(double theta);
/// {1, F^t, D F^t, D^2 F^t} with t = 4 theta / pi, D = diag(1, w, w).
MeasurementSet qutrit_quadruple(double theta);
MeasurementSet rotation_pair(double theta);

/// Principal-branch power of the Fourier matrix (eigenphases in (-pi, pi]).
CMatrix fourier_power(int n, double t);

LatinSquare cyclic_latin_square(int n);
/// P = sum_{k,l} |lambda(l,k), k><l, k| with |a,b> at row (a-1) N + (b-1).
UnitaryMatrix latin_permutation(const LatinSquare& ls);

/// W_i = P (1 (x) M_i) P^T. Throws precondition if the M_i are not pairwise unbiased.
std::vector<UnitaryMatrix> meb_from_mubs(const LatinSquare& ls, const std::vector<UnitaryMatrix>& mubs);

/// Mutually entangled bases printed for 2x2 (three gates) and 3x3 (four gates).
std::vector<UnitaryMatrix> meb_fixture(int n);

/// {1_4, W_1(alpha), W_2(alpha)}; mutually entangled at alpha = pi/4.
std::vector<UnitaryMatrix> meb_family_alpha(double alpha);

/// Every ||(U^dag V)_kl|^2 - 1/N| <= tol.
bool is_unbiased_pair(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol);

/// Unitary with eigenvectors of sigma_y as columns ((1, i), (1, -i)) / sqrt 2.
UnitaryMatrix sigma_y_basis();
UnitaryMatrix hadamard();

}  // namespace certlab
