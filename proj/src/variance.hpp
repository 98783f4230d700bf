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

// Second moments of the linear (Tsallis-2) entropy over Haar states.

#include <cstdint>

#include "entropy.hpp"

namespace certlab {

struct MomentReport {
    double mc_estimate = 0.0;
    double mc_se = 0.0;
    double closed_form = 0.0;
    int samples = 0;
};

struct VarianceEstimate {
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
    double se = 0.0;        // standard error of the variance estimate
    int samples = 0;
};

/// sum_ij |u_ij|^4; >= 1 with equality iff U is unbiased to the identity.
double sum_abs4(const UnitaryMatrix& u);

/// Haar average of (sum_i p_i^2)(sum_i q_i^2) with p, q the distributions in
/// the standard basis and in the basis of U:
/// (N-1)! 4!/(N+3)! [(1/6) sum |u_ij|^4 + (1 + (N-2)/6) N].
double pq_moment_closed_form(const UnitaryMatrix& u);

MomentReport pq_moment_mc(const UnitaryMatrix& u, int samples, std::uint64_t seed, int workers = 1);

/// Exact var of (1/L) sum_j T_2(p^(j)) over Haar states.
double tsallis_variance_closed_form(const MeasurementSet& ms);

VarianceEstimate tsallis_variance_mc(const MeasurementSet& ms, int samples, std::uint64_t seed, int workers = 1);

}  // namespace certlab
