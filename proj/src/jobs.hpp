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

// Figure reproductions (CSV + JSON summary) and JSON-in/JSON-out tools.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace certlab {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
};

struct FigureJob {
    std::string figure;
    std::optional<GridSpec> grid;  // figure default when absent
    std::uint64_t seed = 1;
    int starts = 0;  // 0 selects the optimizer default
    int samples = 10000;
    double tol = 1e-12;
    int workers = 1;
    bool log_bits = false;
};

struct FigureOutput {
    std::string csv;
    io::json summary;
    bool all_converged = true;
    bool validation_failed = false;
};

const std::vector<std::string>& figure_ids();

/// Parses a real number that may use pi, e.g. "pi/4", "3pi/8", "0.25*pi", "-pi".
double parse_angle(const std::string& text);
/// "a:b:n".
GridSpec parse_grid(const std::string& text);

FigureJob figure_job_from_json(const io::json& j);
io::json figure_job_to_json(const FigureJob& job);

FigureOutput run_figure(const FigureJob& job);

const std::vector<std::string>& tool_ids();

/// Report carries "status": "ok", "not_converged" or "validation_failed".
io::json run_tool(const std::string& tool, const io::json& request);

}  // namespace certlab
