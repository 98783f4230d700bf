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

#include "io.hpp"

#include <fstream>
#include <sstream>

namespace certlab::io {

namespace {

Complex complex_from_json(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(ErrorCode::parse, std::string(what) + ": each entry must be [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

int dim_field(const json& j, const char* key, const char* what) {
    if (!j.is_object()) fail(ErrorCode::parse, std::string(what) + " must be a JSON object");
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(ErrorCode::parse, std::string(what) + ": missing integer field \"" + key + "\"");
    int n = j[key].get<int>();
    if (n < 1) fail(ErrorCode::invalid_dimension, std::string(what) + ": dimension must be positive");
    return n;
}

}  // namespace

CMatrix complex_matrix_from_json(const json& j) {
    const int n = dim_field(j, "dim", "matrix");
    if (!j.contains("entries") || !j["entries"].is_array())
        fail(ErrorCode::parse, "matrix: missing \"entries\" array");
    const json& e = j["entries"];
    if (static_cast<int>(e.size()) != n * n)
        fail(ErrorCode::shape, "matrix: expected " + std::to_string(n * n) + " entries, got " + std::to_string(e.size()));
    CMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(e[static_cast<std::size_t>(r * n + c)], "matrix");
    return m;
}

UnitaryMatrix matrix_from_json(const json& j, double tol) { return UnitaryMatrix(complex_matrix_from_json(j), tol); }

json matrix_to_json(const CMatrix& m) {
    json e = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) e.push_back(complex_to_json(m(r, c)));
    return {{"dim", m.rows()}, {"entries", e}};
}

PureState state_from_json(const json& j) {
    const int n = dim_field(j, "dim", "state");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        fail(ErrorCode::parse, "state: missing \"amplitudes\" array");
    const json& a = j["amplitudes"];
    if (static_cast<int>(a.size()) != n)
        fail(ErrorCode::shape, "state: expected " + std::to_string(n) + " amplitudes, got " + std::to_string(a.size()));
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_from_json(a[static_cast<std::size_t>(i)], "state");
    return PureState(v);
}

json state_to_json(const PureState& s) {
    json a = json::array();
    for (int i = 0; i < s.dim(); ++i) a.push_back(complex_to_json(s[i]));
    return {{"dim", s.dim()}, {"amplitudes", a}};
}

std::vector<UnitaryMatrix> set_from_json(const json& j, double tol) {
    if (!j.is_array()) fail(ErrorCode::parse, "basis set must be a JSON array of matrices");
    std::vector<UnitaryMatrix> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        try {
            out.push_back(matrix_from_json(j[k], tol));
        } catch (const Error& e) {
            throw Error(e.code(), "set element " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return out;
}

json set_to_json(const std::vector<UnitaryMatrix>& us) {
    json a = json::array();
    for (const auto& u : us) a.push_back(matrix_to_json(u.matrix()));
    return a;
}

LatinSquare latin_from_json(const json& j) {
    const int n = dim_field(j, "size", "latin square");
    if (!j.contains("cells") || !j["cells"].is_array() || static_cast<int>(j["cells"].size()) != n)
        fail(ErrorCode::parse, "latin square: \"cells\" must hold " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> cells;
    for (const auto& row : j["cells"]) {
        if (!row.is_array()) fail(ErrorCode::parse, "latin square: rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) fail(ErrorCode::parse, "latin square: cells must be integers");
            r.push_back(v.get<int>());
        }
        cells.push_back(std::move(r));
    }
    return LatinSquare(std::move(cells));
}

json latin_to_json(const LatinSquare& ls) { return {{"size", ls.size()}, {"cells", ls.cells()}}; }

json bounds_to_json(const BoundsReport& r) {
    json j = {{"L", r.L},         {"N", r.N},         {"m_min", r.m_min}, {"m_max", r.m_max},
              {"p_min", r.p_min}, {"p_max", r.p_max}, {"b_min", r.b_min}, {"b_max", r.b_max},
              {"r", r.r}};
    j["maassen_uffink"] = r.maassen_uffink ? json(*r.maassen_uffink) : json(nullptr);
    j["sr_min"] = r.sr_min ? json(*r.sr_min) : json(nullptr);
    j["sr_max"] = r.sr_max ? json(*r.sr_max) : json(nullptr);
    return j;
}

json canonical_to_json(const CanonicalTwoQubit& k) {
    return {{"b1", k.b1},
            {"b2", k.b2},
            {"b3", k.b3},
            {"phase", k.phase},
            {"residual", k.residual},
            {"A", matrix_to_json(k.a)},
            {"B", matrix_to_json(k.b)},
            {"C", matrix_to_json(k.c)},
            {"D", matrix_to_json(k.d)}};
}

json vector_to_json(const RVector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) { return parse(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io, "cannot write " + path);
    out << text;
    out.flush();
    if (!out) fail(ErrorCode::io, "write failed for " + path);
}

}  // namespace certlab::io
