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

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace certlab {

namespace {

Axis cross(const Axis& u, const Axis& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double dot(const Axis& u, const Axis& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Axis scaled(const Axis& u, double s) { return {s * u[0], s * u[1], s * u[2]}; }

std::vector<double> ranks(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
        const double avg = 0.5 * double(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

}  // namespace

Axis basis_axis(const UnitaryMatrix& u) {
    if (u.dim() != 2) fail(ErrorCode::shape, "basis_axis needs a qubit basis");
    const Complex c0 = u(0, 0), c1 = u(1, 0);
    const Complex off = std::conj(c0) * c1;
    return {2.0 * off.real(), 2.0 * off.imag(), std::norm(c0) - std::norm(c1)};
}

double arc_length(const Axis& u, const Axis& v) {
    Axis c = cross(u, v);
    return std::atan2(std::sqrt(dot(c, c)), dot(u, v));
}

double spherical_area(const Axis& a, const Axis& b, const Axis& c) {
    const double x = arc_length(b, c), y = arc_length(a, c), z = arc_length(a, b);
    const double s = 0.5 * (x + y + z);
    double t = std::tan(0.5 * s) * std::tan(0.5 * (s - x)) * std::tan(0.5 * (s - y)) * std::tan(0.5 * (s - z));
    t = std::max(t, 0.0);
    return 4.0 * std::atan(std::sqrt(t));
}

TriangleInvariants min_triangle(const MeasurementSet& ms) {
    if (ms.dim() != 2 || ms.size() != 3) fail(ErrorCode::shape, "min_triangle needs three qubit bases");
    const Axis p = basis_axis(ms[0]), q = basis_axis(ms[1]), r = basis_axis(ms[2]);
    TriangleInvariants out;
    out.area = 4.0 * kPi;
    out.perimeter = 6.0 * kPi;
    for (int mask = 0; mask < 8; ++mask) {
        const Axis a = scaled(p, (mask & 1) ? -1.0 : 1.0);
        const Axis b = scaled(q, (mask & 2) ? -1.0 : 1.0);
        const Axis c = scaled(r, (mask & 4) ? -1.0 : 1.0);
        out.area = std::min(out.area, spherical_area(a, b, c));
        out.perimeter = std::min(out.perimeter, arc_length(a, b) + arc_length(b, c) + arc_length(a, c));
    }
    out.xi = xi_parameter(ms[1], ms[2]);
    return out;
}

double xi_parameter(const UnitaryMatrix& u2, const UnitaryMatrix& u3) {
    if (u2.dim() != 2 || u3.dim() != 2) fail(ErrorCode::shape, "xi_parameter needs qubit bases");
    const double v1 = std::norm(u2(0, 0));
    const double v2 = std::norm(u3(0, 0));
    const double v3 = std::norm((u2.matrix().adjoint() * u3.matrix())(0, 0));
    double s = 0.0;
    for (double v : {v1, v2, v3}) s += v * (1.0 - v);
    return std::clamp(std::sqrt(std::max(4.0 / 3.0 * s, 0.0)), 0.0, 1.0);
}

double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) fail(ErrorCode::shape, "spearman_correlation needs two equal-length samples");
    const std::vector<double> rx = ranks(x), ry = ranks(y);
    const double n = double(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace certlab
