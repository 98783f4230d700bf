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
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "jobs.hpp"

using namespace certlab;
using io::json;

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    double num(std::size_t r, const std::string& col) const {
        for (std::size_t c = 0; c < header.size(); ++c)
            if (header[c] == col) return std::stod(rows.at(r).at(c));
        FAIL("missing column " << col);
        return 0.0;
    }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) {
            out.push_back(cell);
            cell.clear();
        } else cell += ch;
    }
    out.push_back(cell);
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::size_t end = text.find("\r\n", pos);
        REQUIRE(end != std::string::npos);
        std::vector<std::string> cells = split(text.substr(pos, end - pos));
        if (first) csv.header = cells;
        else csv.rows.push_back(cells);
        first = false;
        pos = end + 2;
    }
    return csv;
}

FigureJob job(const std::string& fig, const std::string& grid, int starts = 8, int samples = 2000) {
    FigureJob j;
    j.figure = fig;
    if (!grid.empty()) j.grid = parse_grid(grid);
    j.starts = starts;
    j.samples = samples;
    j.seed = 5;
    return j;
}

json matrix_json(const CMatrix& m) { return io::matrix_to_json(m); }

const double ln2 = std::log(2.0);

}  // namespace

TEST_CASE("parse_angle and parse_grid") {
    CHECK(parse_angle("0") == 0.0);
    CHECK(parse_angle("pi/4") == doctest::Approx(kPi / 4));
    CHECK(parse_angle("3pi/8") == doctest::Approx(3 * kPi / 8));
    CHECK(parse_angle("0.25*pi") == doctest::Approx(kPi / 4));
    CHECK(parse_angle("-pi") == doctest::Approx(-kPi));
    CHECK(parse_angle("1.5") == 1.5);
    CHECK_THROWS_AS(parse_angle("tau"), Error);
    GridSpec g = parse_grid("0:pi/2:97");
    CHECK(g.start == 0.0);
    CHECK(g.stop == doctest::Approx(kPi / 2));
    CHECK(g.points == 97);
    CHECK_THROWS_AS(parse_grid("0:1"), Error);
    CHECK_THROWS_AS(parse_grid("0:1:x"), Error);
}

TEST_CASE("figure jobs validate and round-trip through JSON") {
    FigureJob j = job("qubit-triple", "0:pi/2:5");
    FigureJob back = figure_job_from_json(figure_job_to_json(j));
    CHECK(back.figure == j.figure);
    CHECK(back.grid->points == 5);
    CHECK(back.seed == j.seed);
    CHECK(back.starts == j.starts);
    CHECK_THROWS_AS(run_figure(job("no-such-figure", "")), Error);
    CHECK_THROWS_AS(run_figure(job("qubit-triple", "0:1:1")), Error);
    FigureJob bad = job("qubit-triple", "0:1:3");
    bad.samples = 0;
    CHECK_THROWS_AS(run_figure(bad), Error);
    CHECK_THROWS_AS(figure_job_from_json(json::parse(R"({"grid": "0:1:3"})")), Error);
    CHECK(figure_ids().size() == 10);
}

TEST_CASE("two-basis-rotation figure") {
    FigureOutput out = run_figure(job("two-basis-rotation", "0:pi/2:5"));
    Csv csv = parse_csv(out.csv);
    CHECK(csv.header == std::vector<std::string>{"theta", "s_min", "s_max", "b_mu", "b_min_thm2", "b_max_thm2", "rms", "rms_se"});
    REQUIRE(csv.rows.size() == 5);
    CHECK(std::abs(csv.num(2, "theta") - kPi / 4) < 1e-11);
    CHECK(std::abs(csv.num(2, "s_max") - ln2) < 1e-6);
    CHECK(std::abs(csv.num(2, "b_mu") - 0.5 * ln2) < 1e-11);
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        CHECK(csv.num(r, "s_min") <= csv.num(r, "s_max"));
        CHECK(csv.num(r, "b_min_thm2") <= csv.num(r, "s_min") + 1e-6);
        CHECK(csv.num(r, "s_max") <= csv.num(r, "b_max_thm2") + 2e-6);
    }
    CHECK(out.summary["rows"] == 5);
    CHECK(out.summary["seed"] == 5);
    CHECK(out.summary.contains("wall_time_s"));
    CHECK(out.all_converged);
}

TEST_CASE("qubit-triple figure and reproducibility") {
    FigureOutput a = run_figure(job("qubit-triple", "pi/4:pi/2:2"));
    Csv csv = parse_csv(a.csv);
    CHECK(std::abs(csv.num(0, "s_min") - 0.4621) < 1e-4);
    CHECK(std::abs(csv.num(0, "s_max") - 0.5158) < 1e-4);
    FigureOutput b = run_figure(job("qubit-triple", "pi/4:pi/2:2"));
    CHECK(a.csv == b.csv);
    FigureJob par = job("qubit-triple", "pi/4:pi/2:2");
    par.workers = 2;
    CHECK(run_figure(par).csv == a.csv);
    FigureJob bits = job("qubit-triple", "pi/4:pi/2:2");
    bits.log_bits = true;
    Csv cb = parse_csv(run_figure(bits).csv);
    CHECK(std::abs(cb.num(0, "s_min") - csv.num(0, "s_min") / ln2) < 1e-10);
    CHECK(std::abs(cb.num(0, "theta") - csv.num(0, "theta")) < 1e-15);
}

TEST_CASE("other figures produce well-formed tables") {
    struct Case {
        std::string fig, grid;
        std::size_t rows;
    };
    std::vector<Case> cases{{"qutrit-quad", "0:pi/4:2", 2},       {"geometry-scan", "0:pi/2:3", 3},
                            {"random-triples", "0:1:4", 4},        {"mub-scaling", "2:3:2", 2},
                            {"meb-family", "0:pi/2:3", 3},         {"coherent-search", "2:3:2", 4},
                            {"meb-verify", "", 0},                 {"variance-scan", "0:pi/2:3", 3}};
    for (const auto& c : cases) {
        CAPTURE(c.fig);
        FigureOutput out = run_figure(job(c.fig, c.grid, 4, 500));
        Csv csv = parse_csv(out.csv);
        if (c.rows) CHECK(csv.rows.size() == c.rows);
        for (const auto& row : csv.rows) CHECK(row.size() == csv.header.size());
        CHECK(out.summary["figure"] == c.fig);
        if (c.fig == "mub-scaling") {
            CHECK(csv.num(1, "N") == 3);
            CHECK(std::abs(csv.num(1, "sr_min") - ln2) < 1e-11);
            CHECK(csv.num(1, "s_min") >= csv.num(1, "sr_min") - 1e-6);
            CHECK(csv.num(1, "s_max") <= csv.num(1, "sr_max") + 1e-6);
        }
        if (c.fig == "meb-verify") {
            CHECK(!out.validation_failed);
            for (std::size_t r = 0; r < csv.rows.size(); ++r) CHECK(csv.rows[r].back() == "1");
        }
    }
}

TEST_CASE("mub-scaling mean entropy at N = 3") {
    FigureJob j = job("mub-scaling", "3:3:2", 8, 10000);
    Csv csv = parse_csv(run_figure(j).csv);
    REQUIRE(csv.rows.size() == 1);
    CHECK(std::abs(csv.num(0, "s_mean") - 5.0 / 6.0) < 3 * csv.num(0, "s_mean_se"));
}

TEST_CASE("bounds tool") {
    json req = {{"set", json::array({matrix_json(CMatrix::Identity(2, 2)), matrix_json(hadamard().matrix())})}};
    json rep = run_tool("bounds", req);
    CHECK(rep["status"] == "ok");
    CHECK(std::abs(rep["b_min"].get<double>() - 0.34657359) < 1e-8);
    CHECK(std::abs(rep["b_max"].get<double>() - 0.69314718) < 1e-8);
    CHECK(rep["rebased"] == false);

    json rb = run_tool("bounds", {{"builtin", "qubit-triple"}, {"param", "pi/4"}, {"numeric", true}, {"starts", 8}});
    CHECK(std::abs(rb["b_min"].get<double>() - 2.0 / 3.0 * ln2) < 1e-10);
    CHECK(std::abs(rb["s_min"].get<double>() - 2.0 / 3.0 * ln2) < 1e-6);
    CHECK(!rb["sr_max"].is_null());

    json shifted = {{"set", json::array({matrix_json(hadamard().matrix()), matrix_json(CMatrix::Identity(2, 2))})}};
    json rs = run_tool("bounds", shifted);
    CHECK(rs["rebased"] == true);
    CHECK(std::abs(rs["b_min"].get<double>() - 0.5 * ln2) < 1e-10);

    CMatrix bad = CMatrix::Identity(2, 2);
    bad(0, 1) = 0.5;
    CHECK_THROWS_AS(run_tool("bounds", {{"set", json::array({matrix_json(bad)})}}), Error);
    CHECK_THROWS_AS(run_tool("bounds", json::object()), Error);
    CHECK_THROWS_AS(run_tool("nope", json::object()), Error);
}

TEST_CASE("meb tool") {
    json rep = run_tool("meb", {{"source", "mubs"}, {"dim", 3}});
    CHECK(rep["status"] == "ok");
    CHECK(rep["gates"].size() == 4);
    CHECK(rep["pairs"].size() == 12);
    json fx = run_tool("meb", {{"source", "fixture"}, {"dim", 2}});
    CHECK(fx["all_pass"] == true);
    json gates = {{"gates", json::array({matrix_json(CMatrix::Identity(4, 4)), matrix_json(CMatrix::Identity(4, 4))})}};
    json fail_rep = run_tool("meb", gates);
    CHECK(fail_rep["status"] == "validation_failed");
    CHECK(fail_rep["pairs"][0]["pass"] == false);
}

TEST_CASE("canonical tool") {
    json rep = run_tool("canonical", {{"params", {0.3, 0.2, 0.1}}});
    CHECK(rep["status"] == "ok");
    CHECK(std::abs(rep["b1"].get<double>() - 0.3) < 1e-10);
    CHECK(std::abs(rep["b2"].get<double>() - 0.2) < 1e-10);
    CHECK(std::abs(rep["b3"].get<double>() - 0.1) < 1e-10);
    CHECK(rep["residual"].get<double>() <= 1e-8);
    CHECK(rep["separable_state"]["entropy_after"].get<double>() <= 1e-8);
    CHECK(std::abs(rep["entangled_state"]["entropy_after"].get<double>() - ln2) <= 1e-8);
}

TEST_CASE("coherent tool") {
    json rep = run_tool("coherent", {{"unitary", matrix_json(hadamard().matrix())}});
    CHECK(rep["status"] == "ok");
    CHECK(rep["residual"].get<double>() < 1e-6);
    json tri = run_tool("coherent", {{"builtin", "qubit-triple"}, {"param", "pi/4"}, {"starts", 4}});
    CHECK(tri["status"] == "not_converged");
}

TEST_CASE("JSON formats round-trip") {
    Rng rng(71);
    UnitaryMatrix u = haar_unitary(3, rng);
    CHECK(max_abs_diff(io::matrix_from_json(io::matrix_to_json(u.matrix())).matrix(), u.matrix()) == 0.0);
    PureState s = haar_state(4, rng);
    CHECK((io::state_from_json(io::state_to_json(s)).amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    LatinSquare ls = cyclic_latin_square(4);
    CHECK(io::latin_from_json(io::latin_to_json(ls)).cells() == ls.cells());
    CHECK_THROWS_AS(io::parse("{not json"), Error);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"dim": 2, "entries": [[1,0],[0,0],[0,0]]})")), Error);
    CHECK_THROWS_AS(io::latin_from_json(json::parse(R"({"size": 2, "cells": [[1,1],[2,2]]})")), Error);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), Error);
}
