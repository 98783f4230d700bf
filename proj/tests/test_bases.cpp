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
#include "entangle.hpp"

using namespace certlab;

namespace {

bool pairwise_unbiased(const MeasurementSet& ms, double tol) {
    for (int i = 0; i < ms.size(); ++i)
        for (int j = i + 1; j < ms.size(); ++j)
            if (!is_unbiased_pair(ms[i], ms[j], tol)) return false;
    return true;
}

bool is_diagonal(const CMatrix& m) {
    CMatrix off = m;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() < 1e-15;
}

std::vector<UnitaryMatrix> first_mubs(int p, int count) {
    MeasurementSet ms = mub_prime(p);
    std::vector<UnitaryMatrix> out;
    for (int k = 0; k < count; ++k) out.push_back(ms[k]);
    return out;
}

}  // namespace

TEST_CASE("fourier matrices") {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    CHECK(max_abs_diff(fourier(2).matrix(), h / std::sqrt(2.0)) < 1e-15);
    CHECK(max_abs_diff(fourier(2).matrix(), hadamard().matrix()) < 1e-15);
    CHECK((fourier(3).matrix().cwiseAbs().array() - 1.0 / std::sqrt(3.0)).abs().maxCoeff() < 1e-15);
    CMatrix f4 = fourier(4).matrix();
    CHECK(max_abs_diff(f4 * f4 * f4 * f4, CMatrix::Identity(4, 4)) < 1e-12);
    for (int n = 2; n <= 16; ++n) CHECK(is_unbiased_pair(UnitaryMatrix::identity(n), fourier(n), 1e-12));
}

TEST_CASE("mub_prime builds complete unbiased sets") {
    for (int p : {2, 3, 5, 7}) {
        MeasurementSet ms = mub_prime(p);
        CHECK(ms.size() == p + 1);
        CHECK(pairwise_unbiased(ms, 1e-12));
    }
    CHECK_THROWS_AS(mub_prime(4), Error);
    CHECK_THROWS_AS(mub_prime(6), Error);
    CHECK(is_prime(13));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
}

TEST_CASE("qubit_triple family") {
    MeasurementSet z = qubit_triple(0.0);
    for (int k = 0; k < 3; ++k) CHECK(is_diagonal(z[k].matrix()));
    MeasurementSet m = qubit_triple(kPi / 4);
    CHECK(pairwise_unbiased(m, 1e-12));
    CHECK(max_abs_diff(m[1].matrix(), hadamard().matrix()) < 1e-15);
    CHECK(pairwise_unbiased(mub_prime(2), 1e-12));
}

TEST_CASE("qutrit_quadruple family") {
    MeasurementSet z = qutrit_quadruple(0.0);
    for (int k = 0; k < 4; ++k) CHECK(is_diagonal(z[k].matrix()));
    MeasurementSet m = qutrit_quadruple(kPi / 4);
    CHECK(max_abs_diff(m[1].matrix(), fourier(3).matrix()) < 1e-12);
    CHECK(pairwise_unbiased(m, 1e-12));
    // D F3 against F3, with the repeated-phase D.
    const Complex w = std::polar(1.0, 2 * kPi / 3);
    CMatrix d = CMatrix::Identity(3, 3);
    d(1, 1) = w;
    d(2, 2) = w;
    CHECK(is_unbiased_pair(fourier(3), UnitaryMatrix(d * fourier(3).matrix()), 1e-12));
    for (double t : {0.1, 0.5, 1.0}) {
        MeasurementSet q = qutrit_quadruple(t);
        for (int k = 0; k < 4; ++k) CHECK(unitarity_residual(q[k].matrix()) < 1e-12);
    }
}

TEST_CASE("fourier_power continuity") {
    CHECK(max_abs_diff(fourier_power(3, 0.0), CMatrix::Identity(3, 3)) < 1e-12);
    CHECK(max_abs_diff(fourier_power(3, 1.0), fourier(3).matrix()) < 1e-12);
    CMatrix half = fourier_power(5, 0.5);
    CHECK(max_abs_diff(half * half, fourier(5).matrix()) < 1e-12);
}

TEST_CASE("rotation_pair family") {
    MeasurementSet a = rotation_pair(0.0);
    CHECK(max_abs_diff(a[1].matrix(), CMatrix::Identity(2, 2)) < 1e-15);
    MeasurementSet b = rotation_pair(kPi / 4);
    CHECK((b[1].matrix().cwiseAbs().array() - 1.0 / std::sqrt(2.0)).abs().maxCoeff() < 1e-15);
    MeasurementSet c = rotation_pair(kPi / 2);
    CHECK(c[1].matrix().cwiseAbs().diagonal().maxCoeff() < 1e-15);
    CHECK(std::abs(std::abs(c[1](0, 1)) - 1.0) < 1e-15);
}

TEST_CASE("Latin squares") {
    LatinSquare two = cyclic_latin_square(2);
    CHECK(two.cells() == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
    LatinSquare three = cyclic_latin_square(3);
    CHECK(three.cells() == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK_NOTHROW(cyclic_latin_square(5));
    CHECK_THROWS_AS(LatinSquare({{1, 2}, {1, 2}}), Error);
    CHECK_THROWS_AS(LatinSquare({{1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(LatinSquare({{1, 3}, {3, 1}}), Error);
    CHECK_THROWS_AS(LatinSquare({{1, 2}}), Error);
}

TEST_CASE("latin_permutation") {
    for (int n : {2, 3, 5}) {
        CMatrix p = latin_permutation(cyclic_latin_square(n)).matrix();
        CHECK((p * p.transpose() - CMatrix::Identity(n * n, n * n)).cwiseAbs().maxCoeff() == 0.0);
        for (int r = 0; r < n * n; ++r) {
            CHECK(p.row(r).cwiseAbs().sum() == 1.0);
            CHECK(p.col(r).cwiseAbs().sum() == 1.0);
        }
    }
    CMatrix p2 = latin_permutation(cyclic_latin_square(2)).matrix();
    CHECK(p2(0, 0) == Complex(1.0));
    // |2,1> (column 2) goes to |lambda(2,1), 1> = |2,1>, |1,2> to |lambda(1,2), 2> = |2,2>.
    CHECK(p2(2, 2) == Complex(1.0));
    CHECK(p2(3, 1) == Complex(1.0));
}

TEST_CASE("meb_from_mubs") {
    for (int p : {2, 3, 5}) {
        for (int count = 2; count <= p + 1; ++count) {
            auto ws = meb_from_mubs(cyclic_latin_square(p), first_mubs(p, count));
            REQUIRE(static_cast<int>(ws.size()) == count);
            for (const auto& w : ws) CHECK(unitarity_residual(w.matrix()) < 1e-12);
            CHECK(is_mutually_entangled_set(ws, p, 1e-10));
        }
    }
    CHECK_THROWS_AS(meb_from_mubs(cyclic_latin_square(2), {UnitaryMatrix::identity(2), UnitaryMatrix::identity(2)}),
                    Error);
    CHECK_THROWS_AS(meb_from_mubs(cyclic_latin_square(3), first_mubs(2, 2)), Error);
}

TEST_CASE("meb_fixture") {
    auto two = meb_fixture(2);
    REQUIRE(two.size() == 3);
    CVector col = two[1].matrix().col(0);
    CVector expect(4);
    expect << 1, 0, 0, 1;
    CHECK((col - expect / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(is_mutually_entangled_set(two, 2, 1e-10));
    auto three = meb_fixture(3);
    REQUIRE(three.size() == 4);
    for (const auto& w : three) CHECK(unitarity_residual(w.matrix()) < 1e-12);
    CHECK(is_mutually_entangled_set(three, 3, 1e-10));
    CHECK_THROWS_AS(meb_fixture(4), Error);
}

TEST_CASE("meb_family_alpha") {
    auto z = meb_family_alpha(0.0);
    CHECK(max_abs_diff(z[0].matrix(), CMatrix::Identity(4, 4)) == 0.0);
    CHECK((z[1].matrix().cwiseAbs() - CMatrix::Identity(4, 4).cwiseAbs()).maxCoeff() < 1e-15);
    CHECK((z[2].matrix().cwiseAbs() - CMatrix::Identity(4, 4).cwiseAbs()).maxCoeff() < 1e-15);
    CHECK(is_mutually_entangled_set(meb_family_alpha(kPi / 4), 2, 1e-10));
    CHECK(!is_mutually_entangled_set(meb_family_alpha(kPi / 8), 2, 1e-10));
    for (const auto& w : meb_family_alpha(kPi / 8)) CHECK(unitarity_residual(w.matrix()) < 1e-12);
}

TEST_CASE("is_unbiased_pair") {
    CHECK(is_unbiased_pair(UnitaryMatrix::identity(2), hadamard(), 1e-12));
    CHECK(!is_unbiased_pair(UnitaryMatrix::identity(2), UnitaryMatrix::identity(2), 1e-12));
    CHECK(is_unbiased_pair(hadamard(), sigma_y_basis(), 1e-12));
    CHECK_THROWS_AS(is_unbiased_pair(UnitaryMatrix::identity(2), fourier(3), 1e-12), Error);
}
