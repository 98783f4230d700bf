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

#include "bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bases.hpp"

namespace certlab {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

bool is_complete_mub_set(const MeasurementSet& ms) {
    if (ms.size() != ms.dim() + 1) return false;
    for (int i = 0; i < ms.size(); ++i)
        for (int j = i + 1; j < ms.size(); ++j)
            if (!is_unbiased_pair(ms[i], ms[j], 1e-10)) return false;
    return true;
}

}  // namespace

double maassen_uffink_bound(const MeasurementSet& ms) {
    if (ms.size() != 2) fail(ErrorCode::unsupported, "Maassen-Uffink bound needs exactly two measurements");
    CMatrix overlap = ms[1].matrix() * ms[0].matrix().adjoint();
    return -std::log(overlap.cwiseAbs().maxCoeff());
}

RMatrix m_matrix(const MeasurementSet& ms) { return m_matrix(ms, su_generators(ms.dim())); }

RMatrix m_matrix(const MeasurementSet& ms, const HermitianBasis& basis) {
    if (basis.dim != ms.dim()) fail(ErrorCode::shape, "m_matrix: generator dimension mismatch");
    const int n = ms.dim();
    const int g = static_cast<int>(basis.generators.size());
    RMatrix m = RMatrix::Zero(g, g);
    RVector t(g);
    for (const auto& u : ms.unitaries()) {
        for (int i = 0; i < n; ++i) {
            CVector col = u.matrix().col(i);
            for (int a = 0; a < g; ++a) t(a) = col.dot(basis.generators[static_cast<std::size_t>(a)] * col).real();
            m.noalias() += t * t.transpose();
        }
    }
    return m;
}

std::pair<double, double> extreme_eigenvalues(const RMatrix& m) {
    RMatrix sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<RMatrix> es(sym, Eigen::EigenvaluesOnly);
    const RVector& ev = es.eigenvalues();
    return {ev.minCoeff(), ev.maxCoeff()};
}

std::pair<double, double> purity_bounds(const MeasurementSet& ms) {
    const double l = ms.size();
    const double n = ms.dim();
    auto [mmin, mmax] = extreme_eigenvalues(m_matrix(ms));
    const double base = 1.0 / (l * n);
    const double scale = (n - 1.0) / (2.0 * n * l * l);
    return {base + scale * mmin, base + scale * mmax};
}

double bmin_from_purity(int L, double p_max) {
    const double inv = 1.0 / (L * p_max);
    // Guard against inv = 2 - 1e-16 flooring to 1.
    double k = std::floor(inv + 1e-12);
    double a = std::max(inv - k, 0.0);
    return L * p_max * (a * xlogx(k + 1.0) + (1.0 - a) * xlogx(k));
}

std::pair<double, double> bmax_from_purity(int L, int N, double p_min) {
    const double ln = double(L) * N;
    double r = (ln * p_min - 1.0) / (ln - 1.0);
    r = std::clamp(r, 0.0, 1.0);
    const double sr = std::sqrt(r);
    const double q0 = (1.0 + (ln - 1.0) * sr) / ln;
    const double q1 = (1.0 - sr) / ln;
    double s = -xlogx(q0) - (ln - 1.0) * xlogx(q1);
    return {s - std::log(double(L)), r};
}

BoundsReport certainty_uncertainty_bounds(const MeasurementSet& ms) {
    BoundsReport rep;
    rep.L = ms.size();
    rep.N = ms.dim();
    if (rep.L == 2) rep.maassen_uffink = maassen_uffink_bound(ms);
    auto [mmin, mmax] = extreme_eigenvalues(m_matrix(ms));
    rep.m_min = mmin;
    rep.m_max = mmax;
    const double base = 1.0 / (double(rep.L) * rep.N);
    const double scale = (rep.N - 1.0) / (2.0 * rep.N * double(rep.L) * rep.L);
    rep.p_min = base + scale * mmin;
    rep.p_max = base + scale * mmax;
    rep.b_min = bmin_from_purity(rep.L, rep.p_max);
    auto [bmax, r] = bmax_from_purity(rep.L, rep.N, rep.p_min);
    rep.b_max = bmax;
    rep.r = r;
    if (is_complete_mub_set(ms)) {
        auto [lo, hi] = sanchez_ruiz_bounds(rep.N);
        rep.sr_min = lo;
        rep.sr_max = hi;
    }
    return rep;
}

std::pair<double, double> sanchez_ruiz_bounds(int n) {
    if (n < 2) fail(ErrorCode::domain, "Sanchez-Ruiz bounds need N >= 2");
    const double N = n;
    if (n == 2) {
        return {2.0 / 3.0 * std::log(2.0),
                0.5 * std::log(6.0) - std::log(2.0 + std::sqrt(3.0)) / (2.0 * std::sqrt(3.0))};
    }
    double lo;
    if (n % 2 == 1) {
        lo = std::log((N + 1.0) / 2.0);
    } else {
        const double h = N / 2.0;
        lo = N / (2.0 * (N + 1.0)) * std::log(h) + (h + 1.0) / (N + 1.0) * std::log(h + 1.0);
    }
    double hi = std::log(N) - (N - 1.0) * (N - 1.0) * std::log(N - 1.0) / ((N + 1.0) * N * (N - 2.0));
    return {lo, hi};
}

double haar_mean_entropy(int n) {
    if (n < 2) fail(ErrorCode::invalid_dimension, "dimension must be >= 2");
    double h = 0.0;
    for (int k = 1; k <= n; ++k) h += 1.0 / k;
    return h - 1.0;
}

}  // namespace certlab
