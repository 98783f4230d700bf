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
#include "doctest.h"
#include "geometry.hpp"

using namespace certlab;

namespace {

UnitaryMatrix real_rotation(double t) {
    CMatrix m(2, 2);
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return UnitaryMatrix(m);
}

MeasurementSet conjugated(const MeasurementSet& ms, const UnitaryMatrix& v) {
    std::vector<UnitaryMatrix> us;
    for (const auto& u : ms.unitaries()) us.emplace_back(v.matrix() * u.matrix());
    return MeasurementSet::rebased(us);
}

bool near(const Axis& a, const Axis& b) {
    return std::abs(a[0] - b[0]) < 1e-15 && std::abs(a[1] - b[1]) < 1e-15 && std::abs(a[2] - b[2]) < 1e-15;
}

}  // namespace

TEST_CASE("basis_axis examples") {
    CHECK(near(basis_axis(UnitaryMatrix::identity(2)), {0, 0, 1}));
    CHECK(near(basis_axis(hadamard()), {1, 0, 0}));
    Axis y = basis_axis(sigma_y_basis());
    CHECK(std::abs(std::abs(y[1]) - 1.0) < 1e-15);
}

TEST_CASE("arc_length and spherical_area") {
    CHECK(arc_length({0, 0, 1}, {1, 0, 0}) == doctest::Approx(kPi / 2));
    CHECK(arc_length({0, 0, 1}, {0, 0, -1}) == doctest::Approx(kPi));
    CHECK(arc_length({0, 0, 1}, {0, 0, 1}) == 0.0);
    CHECK(spherical_area({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == doctest::Approx(kPi / 2));
    CHECK(spherical_area({1, 0, 0}, {1, 0, 0}, {0, 0, 1}) == doctest::Approx(0.0));
}

TEST_CASE("min_triangle examples") {
    TriangleInvariants m = min_triangle(qubit_triple(kPi / 4));
    CHECK(std::abs(m.area - kPi / 2) < 1e-9);
    CHECK(std::abs(m.perimeter - 3 * kPi / 2) < 1e-9);
    CHECK(std::abs(m.xi - 1.0) < 1e-12);
    TriangleInvariants z = min_triangle(MeasurementSet(
        {UnitaryMatrix::identity(2), UnitaryMatrix::identity(2), UnitaryMatrix::identity(2)}));
    CHECK(z.area == doctest::Approx(0.0));
    CHECK(z.perimeter == doctest::Approx(0.0));
    CHECK(z.xi == doctest::Approx(0.0));
    TriangleInvariants c = min_triangle(MeasurementSet({UnitaryMatrix::identity(2), hadamard(), real_rotation(kPi / 8)}));
    CHECK(c.area == doctest::Approx(0.0));
    CHECK(c.perimeter == doctest::Approx(kPi));
    CHECK_THROWS_AS(min_triangle(mub_prime(3)), Error);
}

TEST_CASE("triangle invariants: ranges, rotation invariance, monotonicity") {
    Rng rng(51);
    for (int t = 0; t < 200; ++t) {
        MeasurementSet ms({UnitaryMatrix::identity(2), haar_unitary(2, rng), haar_unitary(2, rng)});
        TriangleInvariants a = min_triangle(ms);
        CHECK(a.area >= 0.0);
        CHECK(a.area <= kPi / 2 + 1e-9);
        CHECK(a.perimeter >= 0.0);
        CHECK(a.perimeter <= 3 * kPi / 2 + 1e-9);
        CHECK(a.xi >= 0.0);
        CHECK(a.xi <= 1.0 + 1e-9);
        TriangleInvariants b = min_triangle(conjugated(ms, haar_unitary(2, rng)));
        CHECK(std::abs(a.area - b.area) < 1e-9);
        CHECK(std::abs(a.perimeter - b.perimeter) < 1e-9);
        TriangleInvariants c = min_triangle(MeasurementSet({ms[0], ms[1], ms[1]}));
        CHECK(c.area <= a.area + 1e-12);
        CHECK(c.perimeter <= a.perimeter + 1e-12);
    }
}

TEST_CASE("xi_parameter examples") {
    UnitaryMatrix id = UnitaryMatrix::identity(2);
    CHECK(xi_parameter(id, id) == doctest::Approx(0.0));
    MeasurementSet m = qubit_triple(kPi / 4);
    CHECK(std::abs(xi_parameter(m[1], m[2]) - 1.0) < 1e-12);
    CHECK(xi_parameter(rotation_pair(kPi / 6)[1], id) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("spearman_correlation") {
    std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 6, 8, 100}, z{5, 4, 3, 2, 1};
    CHECK(spearman_correlation(x, y) == doctest::Approx(1.0));
    CHECK(spearman_correlation(x, z) == doctest::Approx(-1.0));
    std::vector<double> t{1, 1, 2, 2, 3};
    // Average ranks (1.5, 1.5, 3.5, 3.5, 5) against (1..5).
    CHECK(spearman_correlation(x, t) == doctest::Approx(0.9486832980505138));
    CHECK_THROWS_AS(spearman_correlation(x, {1, 2}), Error);
}
