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

#include "variance.hpp"

#include <cmath>
#include <vector>

#include "optimize.hpp"

namespace certlab {

namespace {

constexpr int kBlock = 4096;

// Streaming central moments up to fourth order, mergeable in a fixed order.
struct Moments4 {
    double n = 0.0, mean = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;

    void add(double x) {
        Moments4 one;
        one.n = 1.0;
        one.mean = x;
        merge(one);
    }

    void merge(const Moments4& o) {
        if (o.n == 0.0) return;
        if (n == 0.0) {
            *this = o;
            return;
        }
        const double na = n, nb = o.n, nt = na + nb;
        const double d = o.mean - mean, d2 = d * d;
        const double m2n = m2 + o.m2 + d2 * na * nb / nt;
        const double m3n = m3 + o.m3 + d * d2 * na * nb * (na - nb) / (nt * nt) + 3.0 * d * (na * o.m2 - nb * m2) / nt;
        const double m4n = m4 + o.m4 + d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (nt * nt * nt) +
                           6.0 * d2 * (na * na * o.m2 + nb * nb * m2) / (nt * nt) + 4.0 * d * (na * o.m3 - nb * m3) / nt;
        mean += d * nb / nt;
        m2 = m2n;
        m3 = m3n;
        m4 = m4n;
        n = nt;
    }

    double variance() const { return m2 / (n - 1.0); }
    double se_mean() const { return std::sqrt(variance() / n); }
    double se_variance() const {
        const double mu2 = m2 / n, mu4 = m4 / n;
        return std::sqrt(std::max(mu4 - mu2 * mu2, 0.0) / n);
    }
};

template <typename F>
Moments4 sample_blocks(int samples, std::uint64_t seed, int workers, F draw) {
    const int blocks = (samples + kBlock - 1) / kBlock;
    std::vector<Moments4> parts(static_cast<std::size_t>(blocks));
    detail::parallel_for(blocks, workers, [&](int b) {
        Rng rng = Rng(seed).split(static_cast<std::uint64_t>(b));
        const int count = std::min(kBlock, samples - b * kBlock);
        for (int i = 0; i < count; ++i) parts[b].add(draw(rng));
    });
    Moments4 total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

double moment_prefactor(int n) {
    return 24.0 * std::exp(std::lgamma(double(n)) - std::lgamma(double(n) + 4.0));
}

}  // namespace

double sum_abs4(const UnitaryMatrix& u) { return u.matrix().cwiseAbs2().cwiseAbs2().sum(); }

double pq_moment_closed_form(const UnitaryMatrix& u) {
    const double n = u.dim();
    return moment_prefactor(u.dim()) * (sum_abs4(u) / 6.0 + (1.0 + (n - 2.0) / 6.0) * n);
}

MomentReport pq_moment_mc(const UnitaryMatrix& u, int samples, std::uint64_t seed, int workers) {
    if (samples < 100) fail(ErrorCode::invalid_argument, "pq_moment_mc needs at least 100 samples");
    const CMatrix ud = u.matrix().adjoint();
    Moments4 m = sample_blocks(samples, seed, workers, [&](Rng& rng) {
        CVector psi = haar_state(u.dim(), rng).amplitudes();
        return psi.cwiseAbs2().squaredNorm() * (ud * psi).cwiseAbs2().squaredNorm();
    });
    return {m.mean, m.se_mean(), pq_moment_closed_form(u), samples};
}

double tsallis_variance_closed_form(const MeasurementSet& ms) {
    const double n = ms.dim();
    const double l = ms.size();
    const double mean_t = (n - 1.0) / (n + 1.0);
    double total = 0.0;
    for (int j = 0; j < ms.size(); ++j)
        for (int k = 0; k < ms.size(); ++k) {
            UnitaryMatrix rel(ms[j].matrix().adjoint() * ms[k].matrix(), 1e-8);
            total += 1.0 - 4.0 / (n + 1.0) + pq_moment_closed_form(rel) - mean_t * mean_t;
        }
    return total / (l * l);
}

VarianceEstimate tsallis_variance_mc(const MeasurementSet& ms, int samples, std::uint64_t seed, int workers) {
    if (samples < 100) fail(ErrorCode::invalid_argument, "tsallis_variance_mc needs at least 100 samples");
    Moments4 m = sample_blocks(samples, seed, workers, [&](Rng& rng) {
        CVector psi = haar_state(ms.dim(), rng).amplitudes();
        double t = 0.0;
        for (const auto& u : ms.unitaries()) t += 1.0 - (u.matrix().adjoint() * psi).cwiseAbs2().squaredNorm();
        return t / ms.size();
    });
    return {m.mean, m.variance(), m.se_variance(), samples};
}

}  // namespace certlab
