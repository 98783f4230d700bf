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

#include "entropy.hpp"

#include <cmath>

namespace certlab {

MeasurementSet::MeasurementSet(std::vector<UnitaryMatrix> unitaries) : us_(std::move(unitaries)) {
    if (us_.empty()) fail(ErrorCode::invalid_argument, "measurement set is empty");
    dim_ = us_.front().dim();
    for (const auto& u : us_)
        if (u.dim() != dim_) fail(ErrorCode::shape, "measurement set mixes dimensions");
    double r = max_abs_diff(us_.front().matrix(), CMatrix::Identity(dim_, dim_));
    if (r > 1e-12) fail(ErrorCode::precondition, "first unitary of a measurement set must be the identity");
}

MeasurementSet MeasurementSet::rebased(const std::vector<UnitaryMatrix>& unitaries) {
    if (unitaries.empty()) fail(ErrorCode::invalid_argument, "measurement set is empty");
    const CMatrix first_inv = unitaries.front().matrix().adjoint();
    std::vector<UnitaryMatrix> out;
    out.reserve(unitaries.size());
    out.push_back(UnitaryMatrix::identity(unitaries.front().dim()));
    for (std::size_t k = 1; k < unitaries.size(); ++k) {
        if (unitaries[k].dim() != unitaries.front().dim()) fail(ErrorCode::shape, "measurement set mixes dimensions");
        out.emplace_back(first_inv * unitaries[k].matrix());
    }
    return MeasurementSet(std::move(out));
}

namespace detail {

double shannon_raw(const RVector& p) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        double v = p(i);
        if (v > 1e-15) s -= v * std::log(v);
    }
    return s;
}

double average_entropy_raw(const CVector& psi, const MeasurementSet& ms) {
    double total = 0.0;
    for (const auto& u : ms.unitaries()) {
        RVector p = (u.matrix().adjoint() * psi).cwiseAbs2();
        total += shannon_raw(p);
    }
    return total / ms.size();
}

}  // namespace detail

double shannon_entropy(const ProbabilityVector& p) { return detail::shannon_raw(p.values()); }

double tsallis_entropy(const ProbabilityVector& p, double beta) {
    if (!(beta > 0.0) || beta == 1.0)
        fail(ErrorCode::domain, "Tsallis order must be positive and != 1 (use shannon_entropy for the limit)");
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) s += std::pow(p[static_cast<int>(i)], beta);
    return (1.0 - s) / (beta - 1.0);
}

double average_entropy(const PureState& state, const MeasurementSet& ms) {
    if (state.dim() != ms.dim()) fail(ErrorCode::shape, "state/measurement-set dimension mismatch");
    double total = 0.0;
    for (const auto& u : ms.unitaries()) total += shannon_entropy(measurement_probs(state, u));
    return total / ms.size();
}

double purity_coefficient(const PureState& state, const MeasurementSet& ms) {
    if (state.dim() != ms.dim()) fail(ErrorCode::shape, "state/measurement-set dimension mismatch");
    const double l = ms.size();
    double total = 0.0;
    for (const auto& u : ms.unitaries()) {
        total += measurement_probs(state, u).values().squaredNorm();
    }
    return total / (l * l);
}

double l1_coherence(const PureState& state) {
    double s = state.amplitudes().cwiseAbs().sum();
    return s * s - 1.0;
}

double coherence_error_bound(int n, double eps, CoherenceErrorKind kind) {
    if (n < 2) fail(ErrorCode::invalid_dimension, "dimension must be >= 2");
    if (!std::isfinite(eps) || eps < 0.0) fail(ErrorCode::domain, "error must be a nonnegative number");
    if (kind == CoherenceErrorKind::overlap) {
        if (eps > 1.0) fail(ErrorCode::domain, "overlap error must lie in [0, 1]");
        return (n - 1.0) - eps * n;
    }
    double s2 = std::sin(eps) * std::sin(eps);
    double c = (n % 2 == 0) ? 1.0 : 1.0 - 1.0 / (double(n) * n);
    return std::max((n - 1.0) - n * c * s2, 0.0);
}

}  // namespace certlab
