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

#include "bases.hpp"

#include <array>
#include <cmath>

namespace certlab {

namespace {

const Complex kI(0.0, 1.0);

Complex root_of_unity(int k, int n) {
    double a = 2.0 * kPi * static_cast<double>(((k % n) + n) % n) / n;
    return {std::cos(a), std::sin(a)};
}

// Table entries: -1 for zero, otherwise the exponent of w = e^{2 pi i / 3}.
using QutritTable = std::array<std::array<int, 9>, 9>;

constexpr QutritTable kMeb3W2 = {{
    {0, -1, -1, -1, 0, -1, -1, -1, 0},
    {-1, 1, -1, -1, -1, 2, 0, -1, -1},
    {-1, -1, 1, 0, -1, -1, -1, 2, -1},
    {-1, -1, 0, 0, -1, -1, -1, 0, -1},
    {0, -1, -1, -1, 1, -1, -1, -1, 2},
    {-1, 2, -1, -1, -1, 1, 0, -1, -1},
    {-1, 0, -1, -1, -1, 0, 0, -1, -1},
    {-1, -1, 2, 0, -1, -1, -1, 1, -1},
    {0, -1, -1, -1, 2, -1, -1, -1, 1},
}};

constexpr QutritTable kMeb3W3 = {{
    {0, -1, -1, -1, 0, -1, -1, -1, 0},
    {-1, 2, -1, -1, -1, 0, 1, -1, -1},
    {-1, -1, 2, 1, -1, -1, -1, 0, -1},
    {-1, -1, 0, 0, -1, -1, -1, 0, -1},
    {1, -1, -1, -1, 2, -1, -1, -1, 0},
    {-1, 0, -1, -1, -1, 2, 1, -1, -1},
    {-1, 0, -1, -1, -1, 0, 0, -1, -1},
    {-1, -1, 0, 1, -1, -1, -1, 2, -1},
    {1, -1, -1, -1, 0, -1, -1, -1, 2},
}};

constexpr QutritTable kMeb3W4 = {{
    {0, -1, -1, -1, 0, -1, -1, -1, 0},
    {-1, 0, -1, -1, -1, 1, 2, -1, -1},
    {-1, -1, 0, 2, -1, -1, -1, 1, -1},
    {-1, -1, 0, 0, -1, -1, -1, 0, -1},
    {2, -1, -1, -1, 0, -1, -1, -1, 1},
    {-1, 1, -1, -1, -1, 0, 2, -1, -1},
    {-1, 0, -1, -1, -1, 0, 0, -1, -1},
    {-1, -1, 1, 2, -1, -1, -1, 0, -1},
    {2, -1, -1, -1, 1, -1, -1, -1, 0},
}};

UnitaryMatrix from_qutrit_table(const QutritTable& t) {
    CMatrix m = CMatrix::Zero(9, 9);
    const double s = 1.0 / std::sqrt(3.0);
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c)
            if (t[r][c] >= 0) m(r, c) = s * root_of_unity(t[r][c], 3);
    return UnitaryMatrix(std::move(m));
}

}  // namespace

LatinSquare::LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
    const int n = size();
    if (n < 2) fail(ErrorCode::invalid_dimension, "Latin square size must be >= 2");
    for (const auto& row : cells_)
        if (static_cast<int>(row.size()) != n) fail(ErrorCode::shape, "Latin square must be square");
    for (int j = 0; j < n; ++j) {
        std::vector<bool> row_seen(static_cast<std::size_t>(n), false);
        std::vector<bool> col_seen(static_cast<std::size_t>(n), false);
        for (int k = 0; k < n; ++k) {
            int a = cells_[j][k];
            int b = cells_[k][j];
            if (a < 1 || a > n || b < 1 || b > n) fail(ErrorCode::domain, "Latin square symbol out of range 1..N");
            if (row_seen[a - 1]) fail(ErrorCode::domain, "Latin square row " + std::to_string(j + 1) + " repeats a symbol");
            if (col_seen[b - 1]) fail(ErrorCode::domain, "Latin square column " + std::to_string(j + 1) + " repeats a symbol");
            row_seen[a - 1] = true;
            col_seen[b - 1] = true;
        }
    }
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

UnitaryMatrix fourier(int n) {
    if (n < 2) fail(ErrorCode::invalid_dimension, "Fourier dimension must be >= 2");
    CMatrix f(n, n);
    const double s = 1.0 / std::sqrt(double(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) f(k, l) = s * root_of_unity(k * l, n);
    return UnitaryMatrix(std::move(f));
}

UnitaryMatrix hadamard() { return fourier(2); }

UnitaryMatrix sigma_y_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(2, 2);
    m << s, s, s * kI, -s * kI;
    return UnitaryMatrix(std::move(m));
}

MeasurementSet mub_prime(int p) {
    if (!is_prime(p))
        fail(ErrorCode::unsupported, std::to_string(p) + " is not prime; load prime-power MUB sets from a file");
    std::vector<UnitaryMatrix> us;
    us.push_back(UnitaryMatrix::identity(p));
    if (p == 2) {
        us.push_back(hadamard());
        us.push_back(sigma_y_basis());
        return MeasurementSet(std::move(us));
    }
    const double s = 1.0 / std::sqrt(double(p));
    for (int r = 0; r < p; ++r) {
        CMatrix m(p, p);
        for (int j = 0; j < p; ++j)
            for (int l = 0; l < p; ++l) m(j, l) = s * root_of_unity((r * j * j + j * l) % p, p);
        us.emplace_back(std::move(m));
    }
    return MeasurementSet(std::move(us));
}

MeasurementSet qubit_triple(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    CMatrix u2(2, 2), u3(2, 2);
    u2 << c, s, s, -c;
    u3 << c, s, kI * s, -kI * c;
    return MeasurementSet({UnitaryMatrix::identity(2), UnitaryMatrix(u2), UnitaryMatrix(u3)});
}

CMatrix fourier_power(int n, double t) {
    // F^4 = 1, so F = sum_k lambda_k P_k over lambda_k in {1, i, -1, -i};
    // Lagrange interpolation on those nodes evaluates any spectral function.
    const CMatrix f = fourier(n).matrix();
    const CMatrix id = CMatrix::Identity(n, n);
    const std::array<double, 4> phase = {0.0, kPi / 2.0, kPi, -kPi / 2.0};
    std::array<Complex, 4> node;
    for (int k = 0; k < 4; ++k) node[k] = std::polar(1.0, phase[k]);
    CMatrix out = CMatrix::Zero(n, n);
    for (int k = 0; k < 4; ++k) {
        CMatrix term = id;
        Complex denom(1.0);
        for (int m = 0; m < 4; ++m) {
            if (m == k) continue;
            term = term * (f - node[m] * id);
            denom *= node[k] - node[m];
        }
        out += std::polar(1.0, t * phase[k]) / denom * term;
    }
    return out;
}

MeasurementSet qutrit_quadruple(double theta) {
    const CMatrix ft = fourier_power(3, 4.0 * theta / kPi);
    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = root_of_unity(1, 3);
    d(2, 2) = root_of_unity(1, 3);
    return MeasurementSet({UnitaryMatrix::identity(3), UnitaryMatrix(ft), UnitaryMatrix(d * ft),
                           UnitaryMatrix(d * d * ft)});
}

MeasurementSet rotation_pair(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    CMatrix o(2, 2);
    o << c, s, -s, c;
    return MeasurementSet({UnitaryMatrix::identity(2), UnitaryMatrix(o)});
}

LatinSquare cyclic_latin_square(int n) {
    if (n < 2) fail(ErrorCode::invalid_dimension, "Latin square size must be >= 2");
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) cells[j][k] = (j + k) % n + 1;
    return LatinSquare(std::move(cells));
}

UnitaryMatrix latin_permutation(const LatinSquare& ls) {
    const int n = ls.size();
    CMatrix p = CMatrix::Zero(n * n, n * n);
    for (int l = 1; l <= n; ++l)
        for (int k = 1; k <= n; ++k) {
            int row = (ls(l, k) - 1) * n + (k - 1);
            int col = (l - 1) * n + (k - 1);
            p(row, col) = 1.0;
        }
    return UnitaryMatrix(std::move(p));
}

bool is_unbiased_pair(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
    if (u.dim() != v.dim()) fail(ErrorCode::shape, "is_unbiased_pair: dimension mismatch");
    const RMatrix mod2 = (u.matrix().adjoint() * v.matrix()).cwiseAbs2();
    const double target = 1.0 / u.dim();
    return (mod2.array() - target).abs().maxCoeff() <= tol;
}

std::vector<UnitaryMatrix> meb_from_mubs(const LatinSquare& ls, const std::vector<UnitaryMatrix>& mubs) {
    const int n = ls.size();
    if (mubs.empty()) fail(ErrorCode::invalid_argument, "meb_from_mubs: no input bases");
    for (const auto& m : mubs)
        if (m.dim() != n) fail(ErrorCode::shape, "meb_from_mubs: basis dimension differs from Latin square size");
    for (std::size_t i = 0; i < mubs.size(); ++i)
        for (std::size_t j = i + 1; j < mubs.size(); ++j)
            if (!is_unbiased_pair(mubs[i], mubs[j], 1e-10))
                fail(ErrorCode::precondition, "meb_from_mubs: bases " + std::to_string(i + 1) + " and " +
                                                  std::to_string(j + 1) + " are not mutually unbiased");
    const CMatrix p = latin_permutation(ls).matrix();
    const CMatrix id = CMatrix::Identity(n, n);
    std::vector<UnitaryMatrix> out;
    out.reserve(mubs.size());
    for (const auto& m : mubs) out.emplace_back(p * kron(id, m.matrix()) * p.transpose());
    return out;
}

std::vector<UnitaryMatrix> meb_fixture(int n) {
    if (n == 2) {
        const double s = 1.0 / std::sqrt(2.0);
        CMatrix w2(4, 4), w3(4, 4);
        w2 << 1, 0, 0, 1,
              0, 1, 1, 0,
              0, 1, -1, 0,
              1, 0, 0, -1;
        w3 << 1, 0, 0, 1,
              0, 1, 1, 0,
              0, kI, -kI, 0,
              kI, 0, 0, -kI;
        return {UnitaryMatrix::identity(4), UnitaryMatrix(s * w2), UnitaryMatrix(s * w3)};
    }
    if (n == 3) {
        return {UnitaryMatrix::identity(9), from_qutrit_table(kMeb3W2), from_qutrit_table(kMeb3W3),
                from_qutrit_table(kMeb3W4)};
    }
    fail(ErrorCode::unsupported, "MEB fixtures exist only for N = 2 and N = 3");
}

std::vector<UnitaryMatrix> meb_family_alpha(double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    CMatrix w1(4, 4), w2(4, 4);
    w1 << c, 0, 0, s,
          0, c, s, 0,
          0, s, -c, 0,
          s, 0, 0, -c;
    w2 << c, 0, 0, s,
          0, c, s, 0,
          0, kI * s, -kI * c, 0,
          kI * s, 0, 0, -kI * c;
    return {UnitaryMatrix::identity(4), UnitaryMatrix(w1), UnitaryMatrix(w2)};
}

}  // namespace certlab
