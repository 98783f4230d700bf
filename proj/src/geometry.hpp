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

// Bloch-sphere invariants of qubit basis triples.

#include <array>
#include <vector>

#include "entropy.hpp"

namespace certlab {

using Axis = std::array<double, 3>;

struct TriangleInvariants {
    double area = 0.0;       // steradians
    double perimeter = 0.0;  // radians
    double xi = 0.0;
};

/// Bloch vector of the first column of a qubit basis.
Axis basis_axis(const UnitaryMatrix& u);

/// Great-circle distance, atan2 form.
double arc_length(const Axis& u, const Axis& v);
/// Spherical excess by l'Huilier's theorem.
double spherical_area(const Axis& a, const Axis& b, const Axis& c);

/// Smallest area and smallest perimeter (independently) over the eight
/// triangles spanned by one point of each antipodal pair; xi is filled in
/// from the second and third bases.
TriangleInvariants min_triangle(const MeasurementSet& ms);

/// sqrt((4/3) sum_j v_j (1 - v_j)) with v = |(U2)_11|^2, |(U3)_11|^2,
/// |(U2^dag U3)_11|^2, clamped to [0, 1].
double xi_parameter(const UnitaryMatrix& u2, const UnitaryMatrix& u3);

/// Spearman rank correlation with average ranks for ties.
double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace certlab
