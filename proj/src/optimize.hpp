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

// Multi-start extremization on the unit sphere of C^N and the phase-torus
// search for mutually coherent states.

#include <cstdint>
#include <functional>
#include <tuple>

#include "entropy.hpp"

namespace certlab {

enum class Direction { min, max };

struct SearchOptions {
    int starts = 0;  // 0 selects the default budget for the dimension
    std::uint64_t seed = 0;
    int workers = 1;
    double tol = 1e-12;
    int max_iterations = 10000;
};

/// 32 starts for N <= 4, 128 beyond.
int default_starts(int dim);

struct OptimizationResult {
    PureState state;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;
    int best_start = 0;
};

/// Smooth function of a unit vector. `gradient`, when set, returns the value
/// and writes G = df/dRe(psi) + i df/dIm(psi); otherwise central differences
/// are used.
struct SphereObjective {
    int dim = 0;
    std::function<double(const CVector&)> value;
    std::function<double(const CVector&, CVector&)> gradient;
};

/// Central-difference G with step h on the 2N real coordinates, evaluated
/// on normalize(psi + h e_k).
CVector finite_difference_gradient(const SphereObjective& obj, const CVector& psi, double h = 1e-7);

/// Nelder-Mead on the 2N real parameters then projected-gradient polish,
/// repeated from `starts` Haar-random points; best value wins, ties go to the
/// lower start index.
OptimizationResult optimize_on_sphere(const SphereObjective& obj, Direction dir, const SearchOptions& opt);

OptimizationResult extremize_average_entropy(const MeasurementSet& ms, Direction dir, const SearchOptions& opt = {});

/// Value and G of the average entropy for a unit vector.
double average_entropy_gradient(const CVector& psi, const MeasurementSet& ms, CVector& grad);

/// Searches equal-modulus states e^{i phi}/sqrt N (phi_1 = 0) for one whose
/// probabilities are flat in every basis of ms. Converged iff the sum of
/// squared deviations is <= tol (1e-12 unless overridden).
OptimizationResult find_mutually_coherent(const MeasurementSet& ms, const SearchOptions& opt = {});

struct CoherentPhases {
    RVector phi;
    RVector omega;
    double residual = 0.0;  // max_j ||(U psi)_j| - 1/sqrt N|
};

/// Phases with U|psi^phi> = |psi^omega>. Throws not_converged when no
/// certified pair is found.
CoherentPhases coherent_phases(const UnitaryMatrix& u, const SearchOptions& opt = {});

struct RmsEstimate {
    double mean = 0.0;
    double rms = 0.0;
    double se = 0.0;  // standard error of the mean
    int samples = 0;
};

/// Haar Monte Carlo of the average entropy. Samples are drawn in fixed
/// blocks with their own streams, so the estimate does not depend on workers.
RmsEstimate entropy_rms(const MeasurementSet& ms, int samples, std::uint64_t seed, int workers = 1);

namespace detail {

/// Runs f(i) for i in [0, n) on up to `workers` threads.
void parallel_for(int n, int workers, const std::function<void(int)>& f);

/// Block-streamed Haar Monte Carlo of f(psi); see entropy_rms.
RmsEstimate haar_rms(int dim, int samples, std::uint64_t seed, int workers,
                     const std::function<double(const CVector&)>& f);

}  // namespace detail

}  // namespace certlab
