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

#include <cmath>
#include <vector>

#include "bases.hpp"
#include "bounds.hpp"
#include "doctest.h"
#include "optimize.hpp"

using namespace certlab;

namespace {

const double ln2 = std::log(2.0);

MeasurementSet random_set(int n, int l, Rng& rng) {
    std::vector<UnitaryMatrix> us{UnitaryMatrix::identity(n)};
    for (int k = 1; k < l; ++k) us.push_back(haar_unitary(n, rng));
    return MeasurementSet(us);
}

SearchOptions opts(std::uint64_t seed, int starts = 0) {
    SearchOptions o;
    o.seed = seed;
    o.starts = starts;
    return o;
}

}  // namespace

TEST_CASE("analytic gradient matches finite differences") {
    Rng rng(31);
    for (int n : {2, 3, 5}) {
        MeasurementSet ms = random_set(n, 3, rng);
        SphereObjective obj;
        obj.dim = n;
        obj.value = [&](const CVector& v) { return detail::average_entropy_raw(v, ms); };
        CVector psi = haar_state(n, rng).amplitudes();
        CVector g;
        double f = average_entropy_gradient(psi, ms, g);
        CHECK(std::abs(f - detail::average_entropy_raw(psi, ms)) < 1e-14);
        CVector fd = finite_difference_gradient(obj, psi);
        // Only the tangential part is defined by values on the sphere.
        CVector gt = g - psi * (psi.dot(g)).real();
        CVector ft = fd - psi * (psi.dot(fd)).real();
        CHECK((gt - ft).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("extremize_average_entropy examples") {
    MeasurementSet ih({UnitaryMatrix::identity(2), hadamard()});
    OptimizationResult mx = extremize_average_entropy(ih, Direction::max, opts(1));
    CHECK(std::abs(mx.value - ln2) < 1e-6);
    CHECK(mx.converged);
    MeasurementSet tri = qubit_triple(kPi / 4);
    OptimizationResult lo = extremize_average_entropy(tri, Direction::min, opts(1));
    OptimizationResult hi = extremize_average_entropy(tri, Direction::max, opts(1));
    CHECK(std::abs(lo.value - 2.0 / 3.0 * ln2) < 1e-4);
    CHECK(std::abs(hi.value - sanchez_ruiz_bounds(2).second) < 1e-4);
    CHECK(std::abs(average_entropy(lo.state, tri) - lo.value) < 1e-12);
    CHECK(lo.value >= 0.0);
    CHECK(hi.value <= ln2 + 1e-12);
}

TEST_CASE("optimizer result is deterministic and worker independent") {
    Rng rng(32);
    MeasurementSet ms = random_set(3, 3, rng);
    SearchOptions a = opts(7, 8), b = opts(7, 8);
    b.workers = 3;
    OptimizationResult r1 = extremize_average_entropy(ms, Direction::max, a);
    OptimizationResult r2 = extremize_average_entropy(ms, Direction::max, a);
    OptimizationResult r3 = extremize_average_entropy(ms, Direction::max, b);
    CHECK(r1.value == r2.value);
    CHECK(r1.value == r3.value);
    CHECK(r1.best_start == r3.best_start);
    CHECK((r1.state.amplitudes() - r3.state.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("extremes sandwich Haar probes and lie within the analytic bounds") {
    Rng rng(33);
    for (int t = 0; t < 24; ++t) {
        int n = 2 + t % 3, l = 2 + (t / 3) % 3;
        MeasurementSet ms = random_set(n, l, rng);
        SearchOptions o = opts(100 + t, 8);
        OptimizationResult lo = extremize_average_entropy(ms, Direction::min, o);
        OptimizationResult hi = extremize_average_entropy(ms, Direction::max, o);
        BoundsReport b = certainty_uncertainty_bounds(ms);
        CHECK(lo.value >= b.b_min - 1e-6);
        CHECK(hi.value <= b.b_max + 1e-6);
        for (int k = 0; k < 100; ++k) {
            double s = average_entropy(haar_state(n, rng), ms);
            CHECK(lo.value <= s + 1e-6);
            CHECK(s <= hi.value + 1e-6);
        }
    }
}

TEST_CASE("find_mutually_coherent on two bases") {
    Rng rng(34);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 5; ++t) {
            MeasurementSet ms({UnitaryMatrix::identity(n), haar_unitary(n, rng)});
            OptimizationResult r = find_mutually_coherent(ms, opts(n * 10 + t));
            REQUIRE(r.converged);
            CHECK(r.residual <= 1e-12);
            CHECK(std::abs(average_entropy(r.state, ms) - std::log(double(n))) < 1e-6);
            for (const auto& u : ms.unitaries()) {
                PureState image(u.matrix().adjoint() * r.state.amplitudes());
                CHECK(std::abs(l1_coherence(image) - (n - 1)) < 1e-8);
            }
        }
    }
}

TEST_CASE("find_mutually_coherent reports absence and trivial cases") {
    OptimizationResult r = find_mutually_coherent(qubit_triple(kPi / 4), opts(1, 16));
    CHECK(!r.converged);
    CHECK(r.residual > 1e-3);
    MeasurementSet ii({UnitaryMatrix::identity(2), UnitaryMatrix::identity(2)});
    r = find_mutually_coherent(ii, opts(1));
    CHECK(r.converged);
    CHECK(r.residual < 1e-28);
}

TEST_CASE("coherent_phases") {
    CoherentPhases id = coherent_phases(UnitaryMatrix::identity(3));
    CHECK(id.phi.cwiseAbs().maxCoeff() < 1e-12);
    CHECK((id.phi - id.omega).cwiseAbs().maxCoeff() < 1e-12);

    auto check = [](const UnitaryMatrix& u, const CoherentPhases& c) {
        const int n = u.dim();
        CVector a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a(i) = std::polar(1.0 / std::sqrt(double(n)), c.phi(i));
            b(i) = std::polar(1.0 / std::sqrt(double(n)), c.omega(i));
        }
        return (u.matrix() * a - b).cwiseAbs().maxCoeff();
    };
    // Hand-checked pair for the Hadamard gate.
    CVector a(2), b(2);
    a << 1.0, Complex(0, 1);
    b << std::polar(1.0, kPi / 4), std::polar(1.0, -kPi / 4);
    CHECK((hadamard().matrix() * a - b).cwiseAbs().maxCoeff() < 1e-15);

    CoherentPhases h = coherent_phases(hadamard());
    CHECK(h.residual < 1e-6);
    CHECK(check(hadamard(), h) < 1e-6);
    Rng rng(35);
    UnitaryMatrix u = haar_unitary(4, rng);
    CoherentPhases c = coherent_phases(u, opts(3));
    CHECK(c.residual < 1e-6);
    CHECK(check(u, c) < 1e-6);
    CHECK(std::abs(c.phi(0)) < 1e-15);
}

TEST_CASE("entropy_rms") {
    for (int n : {2, 3, 4}) {
        RmsEstimate e = entropy_rms(MeasurementSet({UnitaryMatrix::identity(n)}), 20000, 5);
        CHECK(std::abs(e.mean - haar_mean_entropy(n)) < 3 * e.se);
        CHECK(e.samples == 20000);
        CHECK(e.rms > 0.0);
    }
    RmsEstimate m = entropy_rms(mub_prime(3), 20000, 6);
    CHECK(std::abs(m.mean - 5.0 / 6.0) < 3 * m.se);
    // A complete MUB set averages out fluctuations.
    RmsEstimate single = entropy_rms(MeasurementSet({UnitaryMatrix::identity(3)}), 20000, 6);
    CHECK(m.rms < single.rms);

    RmsEstimate one = entropy_rms(MeasurementSet({UnitaryMatrix::identity(2)}), 5000, 9);
    RmsEstimate two = entropy_rms(MeasurementSet({UnitaryMatrix::identity(2), UnitaryMatrix::identity(2)}), 5000, 9);
    CHECK(std::abs(one.rms - two.rms) < 1e-12);
    CHECK(std::abs(one.mean - two.mean) < 1e-12);

    RmsEstimate w1 = entropy_rms(mub_prime(2), 3000, 4, 1);
    RmsEstimate w3 = entropy_rms(mub_prime(2), 3000, 4, 3);
    CHECK(w1.mean == w3.mean);
    CHECK(w1.rms == w3.rms);
}

TEST_CASE("default budgets") {
    CHECK(default_starts(2) == 32);
    CHECK(default_starts(4) == 32);
    CHECK(default_starts(5) == 128);
}
