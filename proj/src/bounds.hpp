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

#include <optional>
#include <utility>

#include "entropy.hpp"

namespace certlab {

/// Analytic bounds for one measurement set, all entropies in nats.
struct BoundsReport {
    int L = 0;
    int N = 0;
    std::optional<double> maassen_uffink;  // L == 2 only
    double m_min = 0.0;
    double m_max = 0.0;
    double p_min = 0.0;
    double p_max = 0.0;
    double b_min = 0.0;
    double b_max = 0.0;
    double r = 0.0;
    std::optional<double> sr_min;  // complete MUB configurations only
    std::optional<double> sr_max;
};

/// -ln max_ij |(U_2 U_1^dag)_ij|, a lower bound on (S_1 + S_2)/2.
double maassen_uffink_bound(const MeasurementSet& ms);

/// M_{ab} = sum_k sum_i <u^k_i|s_a|u^k_i><u^k_i|s_b|u^k_i> over the
/// generalized Gell-Mann generators.
RMatrix m_matrix(const MeasurementSet& ms);
RMatrix m_matrix(const MeasurementSet& ms, const HermitianBasis& basis);

/// Extreme eigenvalues of a real symmetric matrix (symmetrized first).
std::pair<double, double> extreme_eigenvalues(const RMatrix& m);

std::pair<double, double> purity_bounds(const MeasurementSet& ms);

/// Purity-optimized uncertainty (b_min) and certainty (b_max) bounds.
/// sr_* are filled in when the set is a complete collection of N+1
/// pairwise unbiased bases.
BoundsReport certainty_uncertainty_bounds(const MeasurementSet& ms);

/// Sanchez-Ruiz bounds on the average entropy of a complete MUB set.
std::pair<double, double> sanchez_ruiz_bounds(int n);

/// Haar average of the measurement entropy: Psi(N+1) - Psi(2) = H_N - 1.
double haar_mean_entropy(int n);

/// B_min from a purity maximum: L P_max [a (K+1) ln(K+1) + (1-a) K ln K].
double bmin_from_purity(int L, double p_max);
/// B_max = S(Q) - ln L from a purity minimum; also returns r.
std::pair<double, double> bmax_from_purity(int L, int N, double p_min);

}  // namespace certlab
