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

// certlab command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "certlab/certlab.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNotConverged = 3;

int exit_code(certlab_status s) {
    switch (s) {
        case CERTLAB_OK: return kExitOk;
        case CERTLAB_E_NOT_CONVERGED:
        case CERTLAB_E_NOT_FOUND: return kExitNotConverged;
        case CERTLAB_E_INTERNAL: return kExitInternal;
        default: return kExitValidation;
    }
}

void report_error(certlab_status s) {
    std::cerr << "certlab: " << certlab_status_name(s) << ": " << certlab_last_error() << "\n";
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out.flush());
}

bool read_file(const std::string& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
}

std::string summary_path_for(const std::string& out) {
    const auto slash = out.find_last_of('/');
    const auto dot = out.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return out.substr(0, dot) + ".json";
    return out + ".json";
}

struct Common {
    std::uint64_t seed = 1;
    int starts = 0;
    int workers = 1;
    double tol = 1e-12;
    std::string out;
    bool verbose = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "RNG seed")->envname("CERTLAB_SEED");
    cmd->add_option("--starts", c.starts, "optimizer starts (0 = 32 for N <= 4, else 128)")
        ->envname("CERTLAB_STARTS")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--workers", c.workers, "worker threads")->envname("CERTLAB_WORKERS")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", c.tol, "tolerance")->envname("CERTLAB_TOL")->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "output path (default stdout)")->envname("CERTLAB_OUT");
    cmd->add_flag("-v,--verbose", c.verbose, "log progress to stderr");
}

int run_figure_cmd(const std::string& id, const std::string& grid, int samples, bool log_bits, const Common& c,
                   const std::string& summary_out) {
    json job = {{"figure", id},       {"seed", c.seed},       {"starts", c.starts}, {"samples", samples},
                {"workers", c.workers}, {"tol", c.tol}, {"log_bits", log_bits}};
    if (!grid.empty()) job["grid"] = grid;
    if (c.verbose) std::cerr << "certlab: running " << job.dump() << "\n";
    char* csv = nullptr;
    char* summary = nullptr;
    const certlab_status s = certlab_run_figure(job.dump().c_str(), &csv, &summary);
    if (s != CERTLAB_OK && s != CERTLAB_E_NOT_CONVERGED) {
        report_error(s);
        return exit_code(s);
    }
    int code = exit_code(s);
    const std::string csv_text = csv ? csv : "";
    json sum = json::parse(summary ? summary : "{}");
    certlab_string_free(csv);
    certlab_string_free(summary);
    if (sum.value("validation_failed", false)) code = kExitValidation;
    if (code == kExitNotConverged) std::cerr << "certlab: warning: some grid points did not converge\n";

    if (c.out.empty()) {
        std::cout << csv_text;
    } else if (!write_file(c.out, csv_text)) {
        std::cerr << "certlab: cannot write " << c.out << "\n";
        return kExitValidation;
    }
    const std::string spath = !summary_out.empty() ? summary_out : (c.out.empty() ? "" : summary_path_for(c.out));
    if (spath.empty()) {
        std::cerr << sum.dump(2) << "\n";
    } else if (!write_file(spath, sum.dump(2) + "\n")) {
        std::cerr << "certlab: cannot write " << spath << "\n";
        return kExitValidation;
    }
    if (c.verbose) std::cerr << "certlab: " << sum.value("rows", 0) << " rows in " << sum.value("wall_time_s", 0.0) << " s\n";
    return code;
}

struct ToolArgs {
    std::string input;
    std::string builtin;
    std::string param;
    int dim = 0;
    bool from_mubs = false;
    bool fixture = false;
    std::string latin;
    std::string mubs;
    std::vector<double> params;
    bool numeric = false;
};

bool load_json(const std::string& path, json& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "certlab: cannot read " << path << "\n";
        return false;
    }
    try {
        out = json::parse(text);
    } catch (const json::exception& e) {
        std::cerr << "certlab: malformed JSON in " << path << ": " << e.what() << "\n";
        return false;
    }
    return true;
}

int run_tool_cmd(const std::string& tool, const ToolArgs& a, const Common& c) {
    json req = {{"seed", c.seed}, {"starts", c.starts}, {"workers", c.workers}};
    json in;
    if (!a.input.empty() && !load_json(a.input, in)) return kExitValidation;
    if (tool == "bounds" || tool == "coherent") {
        if (!a.input.empty())
            req[in.is_array() ? "set" : "unitary"] = in;
        if (!a.builtin.empty()) {
            req["builtin"] = a.builtin;
            if (!a.param.empty()) req["param"] = a.param;
        }
        if (tool == "bounds") {
            if (req.contains("unitary")) {
                std::cerr << "certlab: bounds expects a set (JSON array of matrices)\n";
                return kExitValidation;
            }
            req["numeric"] = a.numeric;
        }
    } else if (tool == "meb") {
        req["tol"] = c.tol > 1e-10 ? c.tol : 1e-10;
        if (!a.input.empty()) {
            req["source"] = "gates";
            req["gates"] = in;
        } else {
            req["source"] = a.fixture ? "fixture" : "mubs";
            req["dim"] = a.dim;
        }
        json extra;
        if (!a.latin.empty()) {
            if (!load_json(a.latin, extra)) return kExitValidation;
            req["latin"] = extra;
        }
        if (!a.mubs.empty()) {
            if (!load_json(a.mubs, extra)) return kExitValidation;
            req["mubs"] = extra;
        }
    } else if (tool == "canonical") {
        if (!a.input.empty())
            req["unitary"] = in;
        else if (a.params.size() == 3)
            req["params"] = a.params;
        else {
            std::cerr << "certlab: canonical needs --in FILE or --params b1,b2,b3\n";
            return kExitValidation;
        }
    }
    char* report = nullptr;
    const certlab_status s = certlab_run_tool(tool.c_str(), req.dump().c_str(), &report);
    if (s != CERTLAB_OK) {
        report_error(s);
        return exit_code(s);
    }
    const std::string text = std::string(report) + "\n";
    json rep = json::parse(report);
    certlab_string_free(report);
    if (c.out.empty())
        std::cout << text;
    else if (!write_file(c.out, text)) {
        std::cerr << "certlab: cannot write " << c.out << "\n";
        return kExitValidation;
    }
    const std::string status = rep.value("status", "ok");
    if (status == "validation_failed") return kExitValidation;
    if (status == "not_converged") return kExitNotConverged;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certlab: entropic uncertainty and certainty bounds, MUB and MEB tools"};
    app.set_version_flag("--version", std::string(certlab_version()));
    app.require_subcommand(1);

    Common fig_common;
    std::string figure_id, grid, summary_out;
    int samples = 10000;
    bool log_bits = false, list = false;
    CLI::App* fig = app.add_subcommand("figure", "reproduce a figure's data as CSV");
    fig->add_option("id", figure_id,
                    "two-basis-rotation | qubit-triple | random-triples | geometry-scan | mub-scaling | "
                    "qutrit-quad | meb-family | coherent-search | meb-verify | variance-scan");
    fig->add_option("--grid", grid, "a:b:n (pi expressions allowed, e.g. 0:pi/2:97)")->envname("CERTLAB_GRID");
    fig->add_option("--samples", samples, "Monte Carlo samples")->envname("CERTLAB_SAMPLES")->check(CLI::Range(2, 100000000));
    fig->add_option("--summary", summary_out, "summary JSON path (default: --out with .json extension)");
    fig->add_flag("--log-bits", log_bits, "report entropies in bits (display only)");
    fig->add_flag("--list", list, "list figure ids");
    add_common(fig, fig_common);

    Common tool_common;
    std::string tool_id;
    ToolArgs targs;
    CLI::App* tool = app.add_subcommand("tool", "JSON-in/JSON-out utilities");
    tool->add_option("name", tool_id, "coherent | meb | canonical | bounds")
        ->required()
        ->check(CLI::IsMember({"coherent", "meb", "canonical", "bounds"}));
    tool->add_option("--in", targs.input, "input JSON (matrix, set of matrices or gates)");
    tool->add_option("--builtin", targs.builtin,
                     "built-in set: qubit-triple | qutrit-quad | rotation-pair | mub | meb-family | meb-fixture");
    tool->add_option("--param", targs.param, "parameter of the built-in set (angle or prime)");
    tool->add_option("--dim", targs.dim, "local dimension for meb");
    tool->add_flag("--from-mubs", targs.from_mubs, "meb: build from the prime-dimension MUB set (default)");
    tool->add_flag("--fixture", targs.fixture, "meb: use the printed fixture for dim 2 or 3");
    tool->add_option("--latin", targs.latin, "meb: Latin square JSON");
    tool->add_option("--mubs", targs.mubs, "meb: pairwise unbiased input bases JSON");
    tool->add_option("--params", targs.params, "canonical: b1,b2,b3 of a synthesized canonical gate")->delimiter(',');
    tool->add_flag("--numeric", targs.numeric, "bounds: also report optimized entropy extrema");
    add_common(tool, tool_common);

    CLI11_PARSE(app, argc, argv);

    if (fig->parsed()) {
        if (list) {
            for (const char* id : {"two-basis-rotation", "qubit-triple", "random-triples", "geometry-scan", "mub-scaling",
                                   "qutrit-quad", "meb-family", "coherent-search", "meb-verify", "variance-scan"})
                std::cout << id << "\n";
            return kExitOk;
        }
        if (figure_id.empty()) {
            std::cerr << "certlab: figure id required (see --list)\n";
            return kExitValidation;
        }
        return run_figure_cmd(figure_id, grid, samples, log_bits, fig_common, summary_out);
    }
    return run_tool_cmd(tool_id, targs, tool_common);
}
