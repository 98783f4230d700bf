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

// JSON file formats shared by the tools:
//   matrix  {"dim": N, "entries": [[re, im], ...]}  (row-major)
//   state   {"dim": N, "amplitudes": [[re, im], ...]}
//   set     [matrix, ...]
//   latin   {"size": N, "cells": [[...], ...]}

#include <string>
#include <vector>

#include "json.hpp"

#include "bases.hpp"
#include "bounds.hpp"
#include "entangle.hpp"

namespace certlab::io {

using json = nlohmann::json;

CMatrix complex_matrix_from_json(const json& j);
UnitaryMatrix matrix_from_json(const json& j, double tol = kUnitaryTol);
json matrix_to_json(const CMatrix& m);

PureState state_from_json(const json& j);
json state_to_json(const PureState& s);

std::vector<UnitaryMatrix> set_from_json(const json& j, double tol = kUnitaryTol);
json set_to_json(const std::vector<UnitaryMatrix>& us);

LatinSquare latin_from_json(const json& j);
json latin_to_json(const LatinSquare& ls);

json bounds_to_json(const BoundsReport& r);
json canonical_to_json(const CanonicalTwoQubit& k);
json vector_to_json(const RVector& v);

json parse(const std::string& text);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace certlab::io
