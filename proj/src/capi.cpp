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

#include "certlab/certlab.h"

#include <cstdlib>
#include <cstring>
#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "bases.hpp"
#include "bounds.hpp"
#include "entangle.hpp"
#include "geometry.hpp"
#include "jobs.hpp"
#include "variance.hpp"

struct certlab_matrix {
    certlab::UnitaryMatrix m;
};

struct certlab_state {
    certlab::PureState s;
};

struct certlab_set {
    std::vector<certlab::UnitaryMatrix> items;
};

namespace {

using namespace certlab;

thread_local std::string g_last_error;

certlab_status to_status(ErrorCode c) {
    switch (c) {
        case ErrorCode::invalid_argument: return CERTLAB_E_INVALID_ARGUMENT;
        case ErrorCode::invalid_dimension: return CERTLAB_E_INVALID_DIMENSION;
        case ErrorCode::shape: return CERTLAB_E_SHAPE;
        case ErrorCode::domain: return CERTLAB_E_DOMAIN;
        case ErrorCode::not_unitary: return CERTLAB_E_NOT_UNITARY;
        case ErrorCode::unsupported: return CERTLAB_E_UNSUPPORTED;
        case ErrorCode::precondition: return CERTLAB_E_PRECONDITION;
        case ErrorCode::not_converged: return CERTLAB_E_NOT_CONVERGED;
        case ErrorCode::decomposition_failed: return CERTLAB_E_DECOMPOSITION_FAILED;
        case ErrorCode::not_found: return CERTLAB_E_NOT_FOUND;
        case ErrorCode::parse: return CERTLAB_E_PARSE;
        case ErrorCode::io: return CERTLAB_E_IO;
    }
    return CERTLAB_E_INTERNAL;
}

template <typename F>
certlab_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return CERTLAB_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CERTLAB_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CERTLAB_E_INTERNAL;
    }
}

void need(const void* p, const char* name) {
    if (!p) fail(ErrorCode::invalid_argument, std::string(name) + " must not be null");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

CMatrix read_matrix(int dim, const double* e) {
    if (dim < 1) fail(ErrorCode::invalid_dimension, "dimension must be positive");
    CMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = Complex(e[2 * (r * dim + c)], e[2 * (r * dim + c) + 1]);
    return m;
}

void write_matrix(const CMatrix& m, double* e) {
    const Eigen::Index d = m.rows();
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
            e[2 * (r * d + c)] = m(r, c).real();
            e[2 * (r * d + c) + 1] = m(r, c).imag();
        }
}

SearchOptions to_options(const certlab_search_options* o) {
    SearchOptions s;
    if (o) {
        s.starts = o->starts;
        s.seed = o->seed;
        s.workers = o->workers < 1 ? 1 : o->workers;
        if (o->tol > 0.0) s.tol = o->tol;
    }
    return s;
}

void emit(const OptimizationResult& r, certlab_opt_result* result, certlab_state** state_out) {
    if (result) *result = {r.value, r.converged ? 1 : 0, r.iterations, r.residual};
    if (state_out) *state_out = new certlab_state{r.state};
}

MeasurementSet as_measurements(const certlab_set* set) {
    need(set, "set");
    return MeasurementSet(set->items);
}

SplittingSet as_splitting(const certlab_set* set, int local_dim) {
    need(set, "gates");
    return SplittingSet(local_dim, set->items);
}

}  // namespace

extern "C" {

const char* certlab_version(void) { return "1.0.0"; }

const char* certlab_last_error(void) { return g_last_error.c_str(); }

const char* certlab_status_name(certlab_status status) {
    switch (status) {
        case CERTLAB_OK: return "ok";
        case CERTLAB_E_INTERNAL: return "internal";
        default: break;
    }
    if (status >= CERTLAB_E_INVALID_ARGUMENT && status <= CERTLAB_E_IO)
        return error_code_name(static_cast<ErrorCode>(status));
    return "unknown";
}

certlab_search_options certlab_default_search_options(void) { return {0, 1, 1, 1e-12}; }

certlab_status certlab_matrix_create(int dim, const double* entries, certlab_matrix** out) {
    return guarded([&] {
        need(entries, "entries");
        need(out, "out");
        *out = new certlab_matrix{UnitaryMatrix(read_matrix(dim, entries))};
        return CERTLAB_OK;
    });
}

certlab_status certlab_matrix_identity(int dim, certlab_matrix** out) {
    return guarded([&] {
        need(out, "out");
        if (dim < 1) fail(ErrorCode::invalid_dimension, "dimension must be positive");
        *out = new certlab_matrix{UnitaryMatrix::identity(dim)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_matrix_fourier(int dim, certlab_matrix** out) {
    return guarded([&] {
        need(out, "out");
        *out = new certlab_matrix{fourier(dim)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_matrix_haar(int dim, uint64_t seed, certlab_matrix** out) {
    return guarded([&] {
        need(out, "out");
        Rng rng(seed);
        *out = new certlab_matrix{haar_unitary(dim, rng)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_matrix_canonical_gate(double b1, double b2, double b3, certlab_matrix** out) {
    return guarded([&] {
        need(out, "out");
        *out = new certlab_matrix{UnitaryMatrix(canonical_gate(b1, b2, b3))};
        return CERTLAB_OK;
    });
}

certlab_status certlab_matrix_dim(const certlab_matrix* m, int* dim) {
    return guarded([&] {
        need(m, "matrix");
        need(dim, "dim");
        *dim = m->m.dim();
        return CERTLAB_OK;
    });
}

certlab_status certlab_matrix_entries(const certlab_matrix* m, double* entries) {
    return guarded([&] {
        need(m, "matrix");
        need(entries, "entries");
        write_matrix(m->m.matrix(), entries);
        return CERTLAB_OK;
    });
}

void certlab_matrix_free(certlab_matrix* m) { delete m; }

certlab_status certlab_state_create(int dim, const double* amplitudes, certlab_state** out) {
    return guarded([&] {
        need(amplitudes, "amplitudes");
        need(out, "out");
        if (dim < 1) fail(ErrorCode::invalid_dimension, "dimension must be positive");
        CVector v(dim);
        for (int i = 0; i < dim; ++i) v(i) = Complex(amplitudes[2 * i], amplitudes[2 * i + 1]);
        *out = new certlab_state{PureState(v)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_state_basis(int dim, int index, certlab_state** out) {
    return guarded([&] {
        need(out, "out");
        *out = new certlab_state{PureState::basis(dim, index)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_state_haar(int dim, uint64_t seed, certlab_state** out) {
    return guarded([&] {
        need(out, "out");
        Rng rng(seed);
        *out = new certlab_state{haar_state(dim, rng)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_state_dim(const certlab_state* s, int* dim) {
    return guarded([&] {
        need(s, "state");
        need(dim, "dim");
        *dim = s->s.dim();
        return CERTLAB_OK;
    });
}

certlab_status certlab_state_amplitudes(const certlab_state* s, double* amplitudes) {
    return guarded([&] {
        need(s, "state");
        need(amplitudes, "amplitudes");
        for (int i = 0; i < s->s.dim(); ++i) {
            amplitudes[2 * i] = s->s[i].real();
            amplitudes[2 * i + 1] = s->s[i].imag();
        }
        return CERTLAB_OK;
    });
}

void certlab_state_free(certlab_state* s) { delete s; }

certlab_status certlab_set_create(const certlab_matrix* const* items, int count, certlab_set** out) {
    return guarded([&] {
        need(items, "items");
        need(out, "out");
        if (count < 1) fail(ErrorCode::invalid_argument, "set needs at least one matrix");
        auto set = std::make_unique<certlab_set>();
        for (int k = 0; k < count; ++k) {
            need(items[k], "set item");
            if (items[k]->m.dim() != items[0]->m.dim()) fail(ErrorCode::shape, "set mixes dimensions");
            set->items.push_back(items[k]->m);
        }
        *out = set.release();
        return CERTLAB_OK;
    });
}

certlab_status certlab_set_builtin(const char* name, double param, certlab_set** out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        const std::string n(name);
        const int ip = static_cast<int>(std::lround(param));
        std::vector<UnitaryMatrix> items;
        if (n == "qubit-triple")
            items = qubit_triple(param).unitaries();
        else if (n == "qutrit-quad")
            items = qutrit_quadruple(param).unitaries();
        else if (n == "rotation-pair")
            items = rotation_pair(param).unitaries();
        else if (n == "mub")
            items = mub_prime(ip).unitaries();
        else if (n == "meb-family")
            items = meb_family_alpha(param);
        else if (n == "meb-fixture")
            items = meb_fixture(ip);
        else if (n == "meb-from-mubs")
            items = meb_from_mubs(cyclic_latin_square(ip), mub_prime(ip).unitaries());
        else
            fail(ErrorCode::invalid_argument, "unknown builtin set \"" + n + "\"");
        *out = new certlab_set{std::move(items)};
        return CERTLAB_OK;
    });
}

certlab_status certlab_set_size(const certlab_set* set, int* size) {
    return guarded([&] {
        need(set, "set");
        need(size, "size");
        *size = static_cast<int>(set->items.size());
        return CERTLAB_OK;
    });
}

certlab_status certlab_set_get(const certlab_set* set, int index, certlab_matrix** out) {
    return guarded([&] {
        need(set, "set");
        need(out, "out");
        if (index < 0 || index >= static_cast<int>(set->items.size()))
            fail(ErrorCode::invalid_argument, "set index out of range");
        *out = new certlab_matrix{set->items[static_cast<std::size_t>(index)]};
        return CERTLAB_OK;
    });
}

void certlab_set_free(certlab_set* set) { delete set; }

certlab_status certlab_average_entropy(const certlab_state* s, const certlab_set* set, double* out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = average_entropy(s->s, as_measurements(set));
        return CERTLAB_OK;
    });
}

certlab_status certlab_l1_coherence(const certlab_state* s, double* out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = l1_coherence(s->s);
        return CERTLAB_OK;
    });
}

certlab_status certlab_bounds_compute(const certlab_set* set, certlab_bounds* out) {
    return guarded([&] {
        need(out, "out");
        BoundsReport r = certainty_uncertainty_bounds(as_measurements(set));
        *out = certlab_bounds{};
        out->L = r.L;
        out->N = r.N;
        out->has_maassen_uffink = r.maassen_uffink.has_value();
        out->maassen_uffink = r.maassen_uffink.value_or(0.0);
        out->m_min = r.m_min;
        out->m_max = r.m_max;
        out->p_min = r.p_min;
        out->p_max = r.p_max;
        out->b_min = r.b_min;
        out->b_max = r.b_max;
        out->r = r.r;
        out->has_sanchez_ruiz = r.sr_min.has_value();
        out->sr_min = r.sr_min.value_or(0.0);
        out->sr_max = r.sr_max.value_or(0.0);
        return CERTLAB_OK;
    });
}

certlab_status certlab_sanchez_ruiz(int n, double* sr_min, double* sr_max) {
    return guarded([&] {
        need(sr_min, "sr_min");
        need(sr_max, "sr_max");
        auto [lo, hi] = sanchez_ruiz_bounds(n);
        *sr_min = lo;
        *sr_max = hi;
        return CERTLAB_OK;
    });
}

certlab_status certlab_extremize_entropy(const certlab_set* set, certlab_direction dir,
                                         const certlab_search_options* opt, certlab_opt_result* result,
                                         certlab_state** state_out) {
    return guarded([&] {
        MeasurementSet ms = as_measurements(set);
        emit(extremize_average_entropy(ms, dir == CERTLAB_MAX ? Direction::max : Direction::min, to_options(opt)),
             result, state_out);
        return CERTLAB_OK;
    });
}

certlab_status certlab_find_coherent(const certlab_set* set, const certlab_search_options* opt,
                                     certlab_opt_result* result, certlab_state** state_out) {
    return guarded([&] {
        emit(find_mutually_coherent(as_measurements(set), to_options(opt)), result, state_out);
        return CERTLAB_OK;
    });
}

certlab_status certlab_entanglement_entropy(const certlab_state* s, int local_dim, double* out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = entanglement_entropy(s->s, local_dim);
        return CERTLAB_OK;
    });
}

certlab_status certlab_average_entanglement(const certlab_state* s, const certlab_set* gates, int local_dim,
                                            double* out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = average_entanglement(s->s, as_splitting(gates, local_dim));
        return CERTLAB_OK;
    });
}

certlab_status certlab_is_mutually_entangled(const certlab_set* gates, int local_dim, double tol, int* out) {
    return guarded([&] {
        need(gates, "gates");
        need(out, "out");
        *out = is_mutually_entangled_set(gates->items, local_dim, tol) ? 1 : 0;
        return CERTLAB_OK;
    });
}

certlab_status certlab_extremize_entanglement(const certlab_set* gates, int local_dim, certlab_direction dir,
                                              const certlab_search_options* opt, certlab_opt_result* result,
                                              certlab_state** state_out) {
    return guarded([&] {
        SplittingSet ss = as_splitting(gates, local_dim);
        emit(extremize_average_entanglement(ss, dir == CERTLAB_MAX ? Direction::max : Direction::min, to_options(opt)),
             result, state_out);
        return CERTLAB_OK;
    });
}

certlab_status certlab_canonical_two_qubit(const certlab_matrix* w, certlab_canonical* out) {
    return guarded([&] {
        need(w, "matrix");
        need(out, "out");
        CanonicalTwoQubit k = canonical_two_qubit(w->m);
        *out = certlab_canonical{};
        out->b1 = k.b1;
        out->b2 = k.b2;
        out->b3 = k.b3;
        out->phase = k.phase;
        out->residual = k.residual;
        write_matrix(k.a, out->locals[0]);
        write_matrix(k.b, out->locals[1]);
        write_matrix(k.c, out->locals[2]);
        write_matrix(k.d, out->locals[3]);
        return CERTLAB_OK;
    });
}

certlab_status certlab_mutually_separable_state(const certlab_matrix* w, certlab_state** out) {
    return guarded([&] {
        need(w, "matrix");
        need(out, "out");
        *out = new certlab_state{mutually_separable_state(w->m).state};
        return CERTLAB_OK;
    });
}

certlab_status certlab_mutually_entangled_state(const certlab_matrix* w, certlab_state** out) {
    return guarded([&] {
        need(w, "matrix");
        need(out, "out");
        *out = new certlab_state{mutually_entangled_state(w->m).state};
        return CERTLAB_OK;
    });
}

certlab_status certlab_min_triangle(const certlab_set* set, double* area, double* perimeter, double* xi) {
    return guarded([&] {
        TriangleInvariants t = min_triangle(as_measurements(set));
        if (area) *area = t.area;
        if (perimeter) *perimeter = t.perimeter;
        if (xi) *xi = t.xi;
        return CERTLAB_OK;
    });
}

certlab_status certlab_pq_moment_closed_form(const certlab_matrix* u, double* out) {
    return guarded([&] {
        need(u, "matrix");
        need(out, "out");
        *out = pq_moment_closed_form(u->m);
        return CERTLAB_OK;
    });
}

certlab_status certlab_tsallis_variance_closed_form(const certlab_set* set, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = tsallis_variance_closed_form(as_measurements(set));
        return CERTLAB_OK;
    });
}

certlab_status certlab_run_figure(const char* job_json, char** csv, char** summary_json) {
    return guarded([&] {
        need(job_json, "job_json");
        need(csv, "csv");
        need(summary_json, "summary_json");
        FigureOutput out = run_figure(figure_job_from_json(io::parse(job_json)));
        *csv = dup_string(out.csv);
        *summary_json = dup_string(out.summary.dump(2));
        if (!out.all_converged) {
            g_last_error = "some grid points did not converge";
            return CERTLAB_E_NOT_CONVERGED;
        }
        return CERTLAB_OK;
    });
}

certlab_status certlab_run_tool(const char* tool, const char* request_json, char** report_json) {
    return guarded([&] {
        need(tool, "tool");
        need(request_json, "request_json");
        need(report_json, "report_json");
        io::json rep = run_tool(tool, io::parse(request_json));
        *report_json = dup_string(rep.dump(2));
        return CERTLAB_OK;
    });
}

void certlab_string_free(char* s) { std::free(s); }

}  // extern "C"
