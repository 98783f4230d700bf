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

#include "qstate.hpp"

namespace certlab {

/// Ordered collection of same-dimension measurement bases with U_1 = 1.
class MeasurementSet {
public:
    explicit MeasurementSet(std::vector<UnitaryMatrix> unitaries);

    /// Rewrites {U_1, ..., U_L} as {1, U_1^dag U_2, ...}; average entropies
    /// transform by the state substitution psi -> U_1 psi.
    static MeasurementSet rebased(const std::vector<UnitaryMatrix>& unitaries);

    int dim() const noexcept { return dim_; }
    int size() const noexcept { return static_cast<int>(us_.size()); }
    const UnitaryMatrix& operator[](int k) const { return us_.at(static_cast<std::size_t>(k)); }
    const std::vector<UnitaryMatrix>& unitaries() const noexcept { return us_; }

private:
    int dim_ = 0;
    std::vector<UnitaryMatrix> us_;
};

enum class CoherenceErrorKind { overlap, phase };

/// -sum p ln p in nats; entries below 1e-15 count as exact zeros.
double shannon_entropy(const ProbabilityVector& p);
double tsallis_entropy(const ProbabilityVector& p, double beta);
double average_entropy(const PureState& state, const MeasurementSet& ms);
double purity_coefficient(const PureState& state, const MeasurementSet& ms);
double l1_coherence(const PureState& state);

/// Lower bound on the l1-coherence of a state that is eps away from a
/// maximally coherent one: overlap error (|<coh|xi>|^2 = 1 - eps) or
/// phase error (|chi_j| <= eps radians). Clamped at zero.
double coherence_error_bound(int n, double eps, CoherenceErrorKind kind);

namespace detail {

// Unchecked kernels used inside optimizer loops. psi must be normalized.
double shannon_raw(const RVector& p);
double average_entropy_raw(const CVector& psi, const MeasurementSet& ms);

}  // namespace detail

}  // namespace certlab
