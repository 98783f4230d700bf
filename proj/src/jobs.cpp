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

#include "jobs.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <variant>

#include "geometry.hpp"
#include "variance.hpp"

namespace certlab {

using io::json;

namespace {

using Cell = std::variant<double, long long, std::string>;

struct Row {
    std::vector<Cell> cells;
    bool converged = true;
    bool valid = true;
};

struct Table {
    std::vector<std::string> columns;
    std::set<std::string> entropy_columns;  // rescaled by --log-bits
    std::vector<Row> rows;
    json extras = json::object();
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t row, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(row * 0x9E3779B97F4A7C15ULL + tag));
}

std::string format_cell(const Cell& c, bool to_bits) {
    if (const double* d = std::get_if<double>(&c)) {
        double v = to_bits ? *d / std::log(2.0) : *d;
        if (std::isnan(v)) return "nan";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
        return buf;
    }
    if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string to_csv(const Table& t, bool log_bits) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += format_cell(Cell(t.columns[c]), false);
    }
    out += "\r\n";
    for (const Row& r : t.rows) {
        for (std::size_t c = 0; c < r.cells.size(); ++c) {
            if (c) out += ',';
            out += format_cell(r.cells[c], log_bits && t.entropy_columns.count(t.columns[c]));
        }
        out += "\r\n";
    }
    return out;
}

std::vector<double> grid_values(const GridSpec& g) {
    std::vector<double> v(static_cast<std::size_t>(g.points));
    for (int i = 0; i < g.points; ++i)
        v[i] = (i == g.points - 1) ? g.stop : g.start + (g.stop - g.start) * i / (g.points - 1);
    return v;
}

void run_rows(Table& t, int n, int workers, const std::function<Row(int)>& f) {
    t.rows.assign(static_cast<std::size_t>(n), Row{});
    detail::parallel_for(n, workers, [&](int i) { t.rows[i] = f(i); });
}

SearchOptions search_options(const FigureJob& job, std::uint64_t seed) {
    SearchOptions o;
    o.starts = job.starts;
    o.seed = seed;
    o.workers = 1;
    o.tol = job.tol;
    return o;
}

const GridSpec kAngleGrid{0.0, kPi / 2.0, 97};

// Scans of a parametric measurement family with analytic bounds and Haar rms.
Table family_scan(const FigureJob& job, const GridSpec& g, const std::function<MeasurementSet(double)>& family,
                  bool with_mu) {
    Table t;
    t.columns = {"theta", "s_min", "s_max"};
    if (with_mu) t.columns.push_back("b_mu");
    for (const char* c : {"b_min_thm2", "b_max_thm2", "rms", "rms_se"}) t.columns.push_back(c);
    t.entropy_columns = {"s_min", "s_max", "b_mu", "b_min_thm2", "b_max_thm2", "rms", "rms_se"};
    const std::vector<double> xs = grid_values(g);
    run_rows(t, g.points, job.workers, [&](int i) {
        MeasurementSet ms = family(xs[i]);
        OptimizationResult lo = extremize_average_entropy(ms, Direction::min, search_options(job, derive_seed(job.seed, i, 1)));
        OptimizationResult hi = extremize_average_entropy(ms, Direction::max, search_options(job, derive_seed(job.seed, i, 2)));
        BoundsReport b = certainty_uncertainty_bounds(ms);
        RmsEstimate rms = entropy_rms(ms, job.samples, derive_seed(job.seed, i, 3));
        Row r;
        r.cells = {xs[i], lo.value, hi.value};
        if (with_mu) r.cells.emplace_back(b.maassen_uffink.value_or(std::nan("")));
        r.cells.insert(r.cells.end(), {b.b_min, b.b_max, rms.rms, rms.se});
        r.converged = lo.converged && hi.converged;
        return r;
    });
    return t;
}

Table geometry_scan(const FigureJob& job, const GridSpec& g) {
    Table t;
    t.columns = {"theta", "xi", "area", "perimeter", "s_min", "s_max"};
    t.entropy_columns = {"s_min", "s_max"};
    const std::vector<double> xs = grid_values(g);
    run_rows(t, g.points, job.workers, [&](int i) {
        MeasurementSet ms = qubit_triple(xs[i]);
        TriangleInvariants tri = min_triangle(ms);
        OptimizationResult lo = extremize_average_entropy(ms, Direction::min, search_options(job, derive_seed(job.seed, i, 1)));
        OptimizationResult hi = extremize_average_entropy(ms, Direction::max, search_options(job, derive_seed(job.seed, i, 2)));
        return Row{{xs[i], tri.xi, tri.area, tri.perimeter, lo.value, hi.value}, lo.converged && hi.converged, true};
    });
    return t;
}

MeasurementSet random_triple(std::uint64_t seed) {
    Rng rng(seed);
    UnitaryMatrix u2 = haar_unitary(2, rng);
    UnitaryMatrix u3 = haar_unitary(2, rng);
    return MeasurementSet({UnitaryMatrix::identity(2), u2, u3});
}

Table random_triples(const FigureJob& job, const GridSpec& g) {
    Table t;
    t.columns = {"index", "xi", "area", "perimeter", "s_min", "s_max", "b_min_thm2", "b_max_thm2"};
    t.entropy_columns = {"s_min", "s_max", "b_min_thm2", "b_max_thm2"};
    run_rows(t, g.points, job.workers, [&](int i) {
        MeasurementSet ms = random_triple(derive_seed(job.seed, i, 0));
        TriangleInvariants tri = min_triangle(ms);
        OptimizationResult lo = extremize_average_entropy(ms, Direction::min, search_options(job, derive_seed(job.seed, i, 1)));
        OptimizationResult hi = extremize_average_entropy(ms, Direction::max, search_options(job, derive_seed(job.seed, i, 2)));
        BoundsReport b = certainty_uncertainty_bounds(ms);
        return Row{{static_cast<long long>(i), tri.xi, tri.area, tri.perimeter, lo.value, hi.value, b.b_min, b.b_max},
                   lo.converged && hi.converged, true};
    });
    std::vector<double> area, perim, smax;
    for (const Row& r : t.rows) {
        area.push_back(std::get<double>(r.cells[2]));
        perim.push_back(std::get<double>(r.cells[3]));
        smax.push_back(std::get<double>(r.cells[5]));
    }
    if (t.rows.size() >= 2) {
        t.extras["spearman_area_smax"] = spearman_correlation(area, smax);
        t.extras["spearman_perimeter_smax"] = spearman_correlation(perim, smax);
    }
    return t;
}

Table mub_scaling(const FigureJob& job, const GridSpec& g) {
    Table t;
    t.columns = {"N", "s_min", "s_max", "s_mean", "s_mean_se", "sr_min", "sr_max", "haar_mean"};
    t.entropy_columns = {"s_min", "s_max", "s_mean", "s_mean_se", "sr_min", "sr_max", "haar_mean"};
    std::vector<int> primes;
    for (int n = static_cast<int>(std::ceil(g.start)); n <= static_cast<int>(std::floor(g.stop)); ++n)
        if (is_prime(n)) primes.push_back(n);
    run_rows(t, static_cast<int>(primes.size()), job.workers, [&](int i) {
        const int n = primes[i];
        MeasurementSet ms = mub_prime(n);
        OptimizationResult lo = extremize_average_entropy(ms, Direction::min, search_options(job, derive_seed(job.seed, n, 1)));
        OptimizationResult hi = extremize_average_entropy(ms, Direction::max, search_options(job, derive_seed(job.seed, n, 2)));
        RmsEstimate mc = entropy_rms(ms, job.samples, derive_seed(job.seed, n, 3));
        auto [srl, srh] = sanchez_ruiz_bounds(n);
        return Row{{static_cast<long long>(n), lo.value, hi.value, mc.mean, mc.se, srl, srh, haar_mean_entropy(n)},
                   lo.converged && hi.converged, true};
    });
    return t;
}

Table meb_family(const FigureJob& job, const GridSpec& g) {
    Table t;
    t.columns = {"alpha", "e_min", "e_max", "rms", "rms_se"};
    t.entropy_columns = {"e_min", "e_max", "rms", "rms_se"};
    const std::vector<double> xs = grid_values(g);
    run_rows(t, g.points, job.workers, [&](int i) {
        SplittingSet ss(2, meb_family_alpha(xs[i]));
        OptimizationResult lo = extremize_average_entanglement(ss, Direction::min, search_options(job, derive_seed(job.seed, i, 1)));
        OptimizationResult hi = extremize_average_entanglement(ss, Direction::max, search_options(job, derive_seed(job.seed, i, 2)));
        RmsEstimate rms = entanglement_rms(ss, job.samples, derive_seed(job.seed, i, 3));
        return Row{{xs[i], lo.value, hi.value, rms.rms, rms.se}, lo.converged && hi.converged, true};
    });
    return t;
}

Table coherent_search(const FigureJob& job, const GridSpec& g) {
    Table t;
    t.columns = {"N", "trial", "converged", "residual", "s_avg", "l1_state", "l1_image"};
    t.entropy_columns = {"s_avg"};
    std::vector<std::pair<int, int>> cases;
    for (int n = static_cast<int>(std::ceil(g.start)); n <= static_cast<int>(std::floor(g.stop)); ++n)
        for (int k = 0; k < g.points; ++k) cases.emplace_back(n, k);
    run_rows(t, static_cast<int>(cases.size()), job.workers, [&](int i) {
        auto [n, k] = cases[i];
        Rng rng(derive_seed(job.seed, static_cast<std::uint64_t>(n) * 100003 + k, 0));
        UnitaryMatrix u = haar_unitary(n, rng);
        MeasurementSet ms({UnitaryMatrix::identity(n), u});
        OptimizationResult r = find_mutually_coherent(ms, search_options(job, derive_seed(job.seed, n * 100003 + k, 1)));
        PureState image(u.matrix().adjoint() * r.state.amplitudes());
        return Row{{static_cast<long long>(n), static_cast<long long>(k), static_cast<long long>(r.converged), r.residual,
                    r.value, l1_coherence(r.state), l1_coherence(image)},
                   r.converged, true};
    });
    return t;
}

Table meb_verify(const FigureJob& job) {
    Table t;
    t.columns = {"source", "i", "j", "min_entropy", "pass"};
    t.entropy_columns = {"min_entropy"};
    struct Source {
        std::string name;
        int n;
        std::vector<UnitaryMatrix> gates;
    };
    std::vector<Source> sources;
    for (int n : {2, 3}) sources.push_back({"fixture-" + std::to_string(n), n, meb_fixture(n)});
    for (int n : {2, 3, 5})
        sources.push_back({"mubs-" + std::to_string(n), n, meb_from_mubs(cyclic_latin_square(n), mub_prime(n).unitaries())});
    for (const Source& s : sources)
        for (const MebPairCheck& c : meb_pair_checks(s.gates, s.n, job.tol > 1e-10 ? job.tol : 1e-10))
            t.rows.push_back(Row{{s.name, static_cast<long long>(c.i + 1), static_cast<long long>(c.j + 1), c.min_entropy,
                                  static_cast<long long>(c.pass)},
                                 true, c.pass});
    return t;
}

Table variance_scan(const FigureJob& job, const GridSpec& g) {
    Table t;
    t.columns = {"theta", "var_closed", "var_mc", "var_mc_se", "mean_mc"};
    const std::vector<double> xs = grid_values(g);
    const int samples = std::max(job.samples, 100);
    run_rows(t, g.points, job.workers, [&](int i) {
        MeasurementSet ms = qubit_triple(xs[i]);
        VarianceEstimate v = tsallis_variance_mc(ms, samples, derive_seed(job.seed, i, 4));
        return Row{{xs[i], tsallis_variance_closed_form(ms), v.variance, v.se, v.mean}, true, true};
    });
    return t;
}

GridSpec default_grid(const std::string& id) {
    if (id == "random-triples") return {0.0, 0.0, 1000};
    if (id == "mub-scaling") return {2.0, 13.0, 2};
    if (id == "coherent-search") return {2.0, 6.0, 20};
    return kAngleGrid;
}

void validate(const FigureJob& job, const GridSpec& g) {
    const auto& ids = figure_ids();
    if (std::find(ids.begin(), ids.end(), job.figure) == ids.end())
        fail(ErrorCode::invalid_argument, "unknown figure id \"" + job.figure + "\"");
    const bool counted = job.figure == "random-triples" || job.figure == "coherent-search";
    if (g.points < (counted ? 1 : 2)) fail(ErrorCode::invalid_argument, "grid needs at least 2 points");
    if (!std::isfinite(g.start) || !std::isfinite(g.stop)) fail(ErrorCode::invalid_argument, "grid bounds must be finite");
    if (job.starts < 0) fail(ErrorCode::invalid_argument, "starts must be positive");
    if (job.samples < 2) fail(ErrorCode::invalid_argument, "samples must be >= 2");
    if (job.workers < 1) fail(ErrorCode::invalid_argument, "workers must be positive");
    if (!(job.tol > 0.0)) fail(ErrorCode::invalid_argument, "tol must be positive");
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"two-basis-rotation", "qubit-triple",    "random-triples",
                                                 "geometry-scan",      "mub-scaling",     "qutrit-quad",
                                                 "meb-family",         "coherent-search", "meb-verify",
                                                 "variance-scan"};
    return ids;
}

double parse_angle(const std::string& text) {
    static const std::regex re(
        R"(^\s*([+-])?\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(\*)?\s*(pi)?\s*(?:/\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))?\s*$)",
        std::regex::icase);
    std::smatch m;
    if (!std::regex_match(text, m, re) || (!m[2].matched && !m[4].matched) || (m[3].matched && (!m[2].matched || !m[4].matched)))
        fail(ErrorCode::parse, "cannot parse number \"" + text + "\"");
    double v = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (m[4].matched) v *= kPi;
    if (m[5].matched) {
        double d = std::stod(m[5].str());
        if (d == 0.0) fail(ErrorCode::parse, "division by zero in \"" + text + "\"");
        v /= d;
    }
    return (m[1].matched && m[1].str() == "-") ? -v : v;
}

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) fail(ErrorCode::parse, "grid must look like a:b:n, got \"" + text + "\"");
    GridSpec g{parse_angle(parts[0]), parse_angle(parts[1]), 0};
    try {
        std::size_t used = 0;
        g.points = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        fail(ErrorCode::parse, "grid point count must be an integer, got \"" + parts[2] + "\"");
    }
    return g;
}

FigureJob figure_job_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorCode::parse, "figure job must be a JSON object");
    FigureJob job;
    try {
        job.figure = j.at("figure").get<std::string>();
        if (j.contains("grid")) {
            const json& g = j["grid"];
            if (g.is_string())
                job.grid = parse_grid(g.get<std::string>());
            else
                job.grid = GridSpec{g.at("start").get<double>(), g.at("stop").get<double>(), g.at("points").get<int>()};
        }
        job.seed = j.value("seed", job.seed);
        job.starts = j.value("starts", job.starts);
        job.samples = j.value("samples", job.samples);
        job.tol = j.value("tol", job.tol);
        job.workers = j.value("workers", job.workers);
        job.log_bits = j.value("log_bits", job.log_bits);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("figure job: ") + e.what());
    }
    return job;
}

json figure_job_to_json(const FigureJob& job) {
    json j = {{"figure", job.figure}, {"seed", job.seed},       {"starts", job.starts},      {"samples", job.samples},
              {"tol", job.tol},       {"workers", job.workers}, {"log_bits", job.log_bits}};
    if (job.grid) j["grid"] = {{"start", job.grid->start}, {"stop", job.grid->stop}, {"points", job.grid->points}};
    return j;
}

FigureOutput run_figure(const FigureJob& job) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridSpec g = job.grid.value_or(default_grid(job.figure));
    validate(job, g);
    Table t;
    const std::string& id = job.figure;
    if (id == "two-basis-rotation")
        t = family_scan(job, g, rotation_pair, true);
    else if (id == "qubit-triple")
        t = family_scan(job, g, qubit_triple, false);
    else if (id == "qutrit-quad")
        t = family_scan(job, g, qutrit_quadruple, false);
    else if (id == "geometry-scan")
        t = geometry_scan(job, g);
    else if (id == "random-triples")
        t = random_triples(job, g);
    else if (id == "mub-scaling")
        t = mub_scaling(job, g);
    else if (id == "meb-family")
        t = meb_family(job, g);
    else if (id == "coherent-search")
        t = coherent_search(job, g);
    else if (id == "meb-verify")
        t = meb_verify(job);
    else
        t = variance_scan(job, g);

    FigureOutput out;
    out.csv = to_csv(t, job.log_bits);
    for (const Row& r : t.rows) {
        out.all_converged = out.all_converged && r.converged;
        out.validation_failed = out.validation_failed || !r.valid;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.summary = {{"figure", id},
                   {"columns", t.columns},
                   {"rows", t.rows.size()},
                   {"grid", {{"start", g.start}, {"stop", g.stop}, {"points", g.points}}},
                   {"seed", job.seed},
                   {"starts", job.starts},
                   {"samples", job.samples},
                   {"tol", job.tol},
                   {"workers", job.workers},
                   {"units", job.log_bits ? "bits" : "nats"},
                   {"all_converged", out.all_converged},
                   {"validation_failed", out.validation_failed},
                   {"wall_time_s", wall}};
    for (auto it = t.extras.begin(); it != t.extras.end(); ++it) out.summary[it.key()] = it.value();
    return out;
}

// ---------------------------------------------------------------- tools

namespace {

std::vector<UnitaryMatrix> builtin_set(const json& req) {
    const std::string name = req.at("builtin").get<std::string>();
    double param = 0.0;
    if (req.contains("param")) {
        const json& p = req["param"];
        param = p.is_string() ? parse_angle(p.get<std::string>()) : p.get<double>();
    }
    if (name == "qubit-triple") return qubit_triple(param).unitaries();
    if (name == "qutrit-quad") return qutrit_quadruple(param).unitaries();
    if (name == "rotation-pair") return rotation_pair(param).unitaries();
    if (name == "mub") return mub_prime(static_cast<int>(std::lround(param))).unitaries();
    if (name == "meb-family") return meb_family_alpha(param);
    if (name == "meb-fixture") return meb_fixture(static_cast<int>(std::lround(param)));
    fail(ErrorCode::invalid_argument, "unknown builtin set \"" + name + "\"");
}

std::vector<UnitaryMatrix> request_set(const json& req) {
    if (req.contains("set")) return io::set_from_json(req["set"]);
    if (req.contains("builtin")) return builtin_set(req);
    fail(ErrorCode::invalid_argument, "request needs \"set\" or \"builtin\"");
}

SearchOptions tool_options(const json& req) {
    SearchOptions o;
    o.starts = req.value("starts", 0);
    o.seed = req.value("seed", std::uint64_t{1});
    o.workers = req.value("workers", 1);
    o.tol = req.value("tol", 1e-12);
    if (o.starts < 0 || o.workers < 1) fail(ErrorCode::invalid_argument, "starts and workers must be positive");
    return o;
}

json tool_bounds(const json& req) {
    std::vector<UnitaryMatrix> us = request_set(req);
    const bool identity_first =
        max_abs_diff(us.front().matrix(), CMatrix::Identity(us.front().dim(), us.front().dim())) <= 1e-12;
    MeasurementSet ms = identity_first ? MeasurementSet(us) : MeasurementSet::rebased(us);
    json rep = io::bounds_to_json(certainty_uncertainty_bounds(ms));
    rep["rebased"] = !identity_first;
    if (req.value("numeric", false)) {
        SearchOptions o = tool_options(req);
        rep["s_min"] = extremize_average_entropy(ms, Direction::min, o).value;
        rep["s_max"] = extremize_average_entropy(ms, Direction::max, o).value;
    }
    rep["status"] = "ok";
    return rep;
}

json tool_coherent(const json& req) {
    SearchOptions o = tool_options(req);
    json rep;
    if (req.contains("unitary")) {
        UnitaryMatrix u = io::matrix_from_json(req["unitary"]);
        try {
            CoherentPhases cp = coherent_phases(u, o);
            rep = {{"phi", io::vector_to_json(cp.phi)},
                   {"omega", io::vector_to_json(cp.omega)},
                   {"residual", cp.residual},
                   {"status", "ok"}};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::not_converged) throw;
            rep = {{"status", "not_converged"}, {"message", e.what()}};
        }
        return rep;
    }
    std::vector<UnitaryMatrix> us = request_set(req);
    MeasurementSet ms = MeasurementSet::rebased(us);
    OptimizationResult r = find_mutually_coherent(ms, o);
    RVector phi(r.state.dim());
    for (int k = 0; k < r.state.dim(); ++k) phi(k) = std::arg(r.state[k]);
    rep = {{"phi", io::vector_to_json(phi)},
           {"residual", r.residual},
           {"average_entropy", r.value},
           {"state", io::state_to_json(r.state)},
           {"converged", r.converged},
           {"status", r.converged ? "ok" : "not_converged"}};
    return rep;
}

json tool_meb(const json& req) {
    const double tol = req.value("tol", 1e-10);
    const std::string source = req.value("source", std::string(req.contains("gates") ? "gates" : "mubs"));
    int n = req.value("dim", 0);
    std::vector<UnitaryMatrix> gates;
    if (source == "gates") {
        gates = io::set_from_json(req.at("gates"));
        const int d = gates.front().dim();
        n = static_cast<int>(std::lround(std::sqrt(double(d))));
    } else if (source == "fixture") {
        gates = meb_fixture(n);
    } else if (source == "mubs") {
        if (n < 2) fail(ErrorCode::invalid_argument, "meb: \"dim\" must be >= 2");
        LatinSquare ls = req.contains("latin") ? io::latin_from_json(req["latin"]) : cyclic_latin_square(n);
        std::vector<UnitaryMatrix> mubs = req.contains("mubs") ? io::set_from_json(req["mubs"]) : mub_prime(n).unitaries();
        gates = meb_from_mubs(ls, mubs);
    } else {
        fail(ErrorCode::invalid_argument, "meb: unknown source \"" + source + "\"");
    }
    json pairs = json::array();
    bool all = true;
    for (const MebPairCheck& c : meb_pair_checks(gates, n, tol)) {
        pairs.push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"min_entropy", c.min_entropy}, {"pass", c.pass}});
        all = all && c.pass;
    }
    return {{"dim", n},
            {"source", source},
            {"gates", io::set_to_json(gates)},
            {"pairs", pairs},
            {"all_pass", all},
            {"status", all ? "ok" : "validation_failed"}};
}

json witness_json(const TwoBasisState& s) {
    return {{"state", io::state_to_json(s.state)},
            {"entropy_before", s.entropy_before},
            {"entropy_after", s.entropy_after},
            {"fallback", s.fallback}};
}

json tool_canonical(const json& req) {
    UnitaryMatrix w = [&] {
        if (req.contains("unitary")) return io::matrix_from_json(req["unitary"]);
        const json& p = req.at("params");
        if (!p.is_array() || p.size() != 3) fail(ErrorCode::parse, "canonical: \"params\" must be [b1, b2, b3]");
        return UnitaryMatrix(canonical_gate(p[0].get<double>(), p[1].get<double>(), p[2].get<double>()));
    }();
    SearchOptions o = tool_options(req);
    json rep = io::canonical_to_json(canonical_two_qubit(w));
    rep["separable_state"] = witness_json(mutually_separable_state(w, o));
    rep["entangled_state"] = witness_json(mutually_entangled_state(w, o));
    rep["status"] = "ok";
    return rep;
}

}  // namespace

const std::vector<std::string>& tool_ids() {
    static const std::vector<std::string> ids = {"coherent", "meb", "canonical", "bounds"};
    return ids;
}

json run_tool(const std::string& tool, const json& request) {
    if (!request.is_object()) fail(ErrorCode::parse, "tool request must be a JSON object");
    try {
        if (tool == "bounds") return tool_bounds(request);
        if (tool == "coherent") return tool_coherent(request);
        if (tool == "meb") return tool_meb(request);
        if (tool == "canonical") return tool_canonical(request);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, tool + ": " + e.what());
    }
    fail(ErrorCode::invalid_argument, "unknown tool \"" + tool + "\"");
}

}  // namespace certlab
