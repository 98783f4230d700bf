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

#include "optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <unsupported/Eigen/NonLinearOptimization>

namespace certlab {

namespace detail {

void parallel_for(int n, int workers, const std::function<void(int)>& f) {
    if (n <= 0) return;
    workers = std::clamp(workers, 1, n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace detail

namespace {

CVector to_complex(const RVector& x) {
    const Eigen::Index n = x.size() / 2;
    CVector z(n);
    for (Eigen::Index i = 0; i < n; ++i) z(i) = Complex(x(i), x(n + i));
    return z;
}

RVector to_real(const CVector& z) {
    const Eigen::Index n = z.size();
    RVector x(2 * n);
    x.head(n) = z.real();
    x.tail(n) = z.imag();
    return x;
}

// Signed objective: always minimized internally.
struct Signed {
    const SphereObjective& obj;
    double sign;

    double value(const CVector& psi) const { return sign * obj.value(psi); }

    double gradient(const CVector& psi, CVector& g) const {
        double f;
        if (obj.gradient) {
            f = obj.gradient(psi, g);
        } else {
            f = obj.value(psi);
            g = finite_difference_gradient(obj, psi);
        }
        g *= sign;
        return sign * f;
    }
};

double safe_value(const Signed& s, const RVector& x) {
    double n = x.norm();
    if (!(n > 1e-300)) return std::numeric_limits<double>::infinity();
    return s.value(to_complex(x / n));
}

// Classic Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
RVector nelder_mead(const Signed& s, const RVector& x0, int max_evals, double ftol) {
    const int n = static_cast<int>(x0.size());
    std::vector<RVector> pts(static_cast<std::size_t>(n + 1), x0);
    std::vector<double> fv(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i + 1)](i) += 0.1;
    for (int i = 0; i <= n; ++i) fv[i] = safe_value(s, pts[i]);
    int evals = n + 1;
    std::vector<int> order(static_cast<std::size_t>(n + 1));
    while (evals < max_evals) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        const int best = order[0], worst = order[n], second = order[n - 1];
        if (std::abs(fv[worst] - fv[best]) <= ftol) break;
        RVector c = RVector::Zero(n);
        for (int i = 0; i < n; ++i) c += pts[order[i]];
        c /= n;
        RVector xr = c + (c - pts[worst]);
        double fr = safe_value(s, xr);
        ++evals;
        if (fr < fv[best]) {
            RVector xe = c + 2.0 * (c - pts[worst]);
            double fe = safe_value(s, xe);
            ++evals;
            if (fe < fr) {
                pts[worst] = xe;
                fv[worst] = fe;
            } else {
                pts[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            pts[worst] = xr;
            fv[worst] = fr;
        } else {
            bool outside = fr < fv[worst];
            RVector xc = outside ? RVector(c + 0.5 * (xr - c)) : RVector(c + 0.5 * (pts[worst] - c));
            double fc = safe_value(s, xc);
            ++evals;
            if (fc < (outside ? fr : fv[worst])) {
                pts[worst] = xc;
                fv[worst] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    int k = order[i];
                    pts[k] = pts[best] + 0.5 * (pts[k] - pts[best]);
                    fv[k] = safe_value(s, pts[k]);
                }
                evals += n;
            }
        }
    }
    int best = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    return pts[best];
}

struct PolishResult {
    CVector psi;
    double f;
    int iterations;
    double residual;
    bool converged;
};

CVector tangent(const CVector& psi, const CVector& g) {
    return g - psi.dot(g).real() * psi;
}

// Projected gradient with Barzilai-Borwein steps and Armijo backtracking,
// retracting onto the sphere by normalization.
PolishResult polish(const Signed& s, CVector psi, const SearchOptions& opt) {
    CVector g;
    double f = s.gradient(psi, g);
    CVector gt = tangent(psi, g);
    double step = 0.1;
    CVector prev_psi, prev_gt;
    double last_change = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        const double gn2 = gt.squaredNorm();
        if (gn2 < 1e-28) {
            last_change = 0.0;
            break;
        }
        if (it > 0) {
            CVector sv = psi - prev_psi;
            CVector yv = gt - prev_gt;
            double sy = std::abs(sv.dot(yv).real());
            if (sy > 1e-300) step = std::clamp(sv.squaredNorm() / sy, 1e-10, 1e3);
        }
        double t = step;
        bool accepted = false;
        CVector trial;
        double ft = f;
        for (int bt = 0; bt < 60; ++bt) {
            trial = (psi - t * gt).normalized();
            ft = s.value(trial);
            if (ft <= f - 1e-4 * t * gn2) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            last_change = 0.0;
            break;
        }
        prev_psi = psi;
        prev_gt = gt;
        psi = trial;
        last_change = f - ft;
        f = s.gradient(psi, g);
        gt = tangent(psi, g);
        if (last_change <= opt.tol) {
            ++it;
            break;
        }
    }
    return {psi, f, it, last_change, last_change <= opt.tol};
}

OptimizationResult run_start(const Signed& s, int dim, const SearchOptions& opt, int start) {
    Rng rng = Rng(opt.seed).split(static_cast<std::uint64_t>(start));
    CVector x0 = haar_state(dim, rng).amplitudes();
    RVector x = nelder_mead(s, to_real(x0), 40 * dim + 200, 1e-10);
    CVector psi = to_complex(x).normalized();
    PolishResult p = polish(s, psi, opt);
    return OptimizationResult{PureState::normalized(p.psi), s.sign * p.f, p.converged, p.iterations,
                              p.residual, start};
}

}  // namespace

int default_starts(int dim) { return dim <= 4 ? 32 : 128; }

CVector finite_difference_gradient(const SphereObjective& obj, const CVector& psi, double h) {
    const Eigen::Index n = psi.size();
    CVector g(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (int part = 0; part < 2; ++part) {
            Complex e = part == 0 ? Complex(h, 0.0) : Complex(0.0, h);
            CVector p = psi, m = psi;
            p(k) += e;
            m(k) -= e;
            double d = (obj.value(p.normalized()) - obj.value(m.normalized())) / (2.0 * h);
            if (part == 0)
                g(k).real(d);
            else
                g(k).imag(d);
        }
    }
    return g;
}

OptimizationResult optimize_on_sphere(const SphereObjective& obj, Direction dir, const SearchOptions& opt) {
    if (obj.dim < 2) fail(ErrorCode::invalid_dimension, "optimizer dimension must be >= 2");
    if (!obj.value) fail(ErrorCode::invalid_argument, "objective has no value function");
    const int starts = opt.starts > 0 ? opt.starts : default_starts(obj.dim);
    const Signed s{obj, dir == Direction::min ? 1.0 : -1.0};
    std::vector<std::optional<OptimizationResult>> results(static_cast<std::size_t>(starts));
    detail::parallel_for(starts, opt.workers, [&](int i) { results[i] = run_start(s, obj.dim, opt, i); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        double a = s.sign * results[i]->value, b = s.sign * results[best]->value;
        if (a < b) best = i;
    }
    return *results[best];
}

double average_entropy_gradient(const CVector& psi, const MeasurementSet& ms, CVector& grad) {
    const double l = ms.size();
    grad = CVector::Zero(psi.size());
    double f = 0.0;
    for (const auto& u : ms.unitaries()) {
        CVector a = u.matrix().adjoint() * psi;
        CVector w(a.size());
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            double p = std::norm(a(i));
            if (p > 1e-300) {
                double lp = std::log(p);
                if (p > 1e-15) f -= p * lp;
                w(i) = -(lp + 1.0) * a(i);
            } else {
                w(i) = 0.0;
            }
        }
        grad.noalias() += u.matrix() * w;
    }
    grad *= 2.0 / l;
    return f / l;
}

OptimizationResult extremize_average_entropy(const MeasurementSet& ms, Direction dir, const SearchOptions& opt) {
    if (opt.starts < 0) fail(ErrorCode::invalid_argument, "starts must be >= 1");
    SphereObjective obj;
    obj.dim = ms.dim();
    obj.value = [&ms](const CVector& psi) { return detail::average_entropy_raw(psi, ms); };
    obj.gradient = [&ms](const CVector& psi, CVector& g) { return average_entropy_gradient(psi, ms, g); };
    return optimize_on_sphere(obj, dir, opt);
}

namespace {

CVector phase_state(const RVector& tail) {
    const Eigen::Index n = tail.size() + 1;
    CVector psi(n);
    const double s = 1.0 / std::sqrt(double(n));
    psi(0) = s;
    for (Eigen::Index k = 1; k < n; ++k) psi(k) = std::polar(s, tail(k - 1));
    return psi;
}

// Residuals r_{j,i} = |(U_j^dag psi)_i|^2 - 1/N over phases phi_2..phi_N.
struct FlatnessFunctor {
    const MeasurementSet& ms;
    int n_inputs;

    int inputs() const { return n_inputs; }
    int values() const { return ms.size() * ms.dim(); }

    int operator()(const RVector& x, RVector& r) const {
        const int n = ms.dim();
        CVector psi = phase_state(x);
        for (int j = 0; j < ms.size(); ++j) {
            CVector a = ms[j].matrix().adjoint() * psi;
            r.segment(j * n, n) = a.cwiseAbs2().array() - 1.0 / n;
        }
        return 0;
    }

    int df(const RVector& x, RMatrix& jac) const {
        const int n = ms.dim();
        CVector psi = phase_state(x);
        for (int j = 0; j < ms.size(); ++j) {
            const CMatrix vd = ms[j].matrix().adjoint();
            CVector a = vd * psi;
            for (int i = 0; i < n; ++i)
                for (int k = 1; k < n; ++k)
                    jac(j * n + i, k - 1) = -2.0 * (std::conj(a(i)) * vd(i, k) * psi(k)).imag();
        }
        return 0;
    }
};

struct PhaseResult {
    RVector phases;
    double f;
    int iterations;
};

PhaseResult solve_phases(const MeasurementSet& ms, RVector x) {
    FlatnessFunctor fn{ms, static_cast<int>(x.size())};
    Eigen::LevenbergMarquardt<FlatnessFunctor> lm(fn);
    lm.parameters.maxfev = 2000;
    lm.parameters.ftol = 1e-15;
    lm.parameters.xtol = 1e-15;
    lm.minimize(x);
    RVector r(fn.values());
    fn(x, r);
    return {x, r.squaredNorm(), static_cast<int>(lm.nfev)};
}

}  // namespace

OptimizationResult find_mutually_coherent(const MeasurementSet& ms, const SearchOptions& opt) {
    if (ms.size() < 2) fail(ErrorCode::invalid_argument, "mutually coherent search needs at least two bases");
    if (opt.starts < 0) fail(ErrorCode::invalid_argument, "starts must be >= 1");
    const int n = ms.dim();
    const int starts = opt.starts > 0 ? opt.starts : default_starts(n);
    std::vector<std::optional<PhaseResult>> results(static_cast<std::size_t>(starts));
    std::atomic<int> first_hit{starts};
    detail::parallel_for(starts, opt.workers, [&](int s) {
        if (s > first_hit.load()) return;
        RVector x0 = RVector::Zero(n - 1);
        if (s > 0) {
            Rng rng = Rng(opt.seed).split(static_cast<std::uint64_t>(s));
            for (int k = 0; k < n - 1; ++k) x0(k) = 2.0 * kPi * rng.uniform();
        }
        results[s] = solve_phases(ms, x0);
        if (results[s]->f <= opt.tol) {
            int cur = first_hit.load();
            while (s < cur && !first_hit.compare_exchange_weak(cur, s)) {
            }
        }
    });
    int pick = first_hit.load();
    if (pick >= starts) {
        pick = 0;
        for (int s = 1; s < starts; ++s)
            if (results[s]->f < results[pick]->f) pick = s;
    }
    const PhaseResult& r = *results[pick];
    PureState state(phase_state(r.phases));
    return OptimizationResult{state, detail::average_entropy_raw(state.amplitudes(), ms), r.f <= opt.tol,
                              r.iterations, r.f, pick};
}

CoherentPhases coherent_phases(const UnitaryMatrix& u, const SearchOptions& opt) {
    const int n = u.dim();
    MeasurementSet ms({UnitaryMatrix::identity(n), u.adjoint()});
    OptimizationResult res = find_mutually_coherent(ms, opt);
    const CVector& psi = res.state.amplitudes();
    CVector image = u.matrix() * psi;
    CoherentPhases out;
    out.phi.resize(n);
    out.omega.resize(n);
    double dev = 0.0;
    for (int j = 0; j < n; ++j) {
        out.phi(j) = std::arg(psi(j));
        out.omega(j) = std::arg(image(j));
        dev = std::max(dev, std::abs(std::abs(image(j)) - 1.0 / std::sqrt(double(n))));
    }
    out.residual = dev;
    if (!res.converged || dev > 1e-6)
        fail(ErrorCode::not_converged, "no mutually coherent state found (best residual " +
                                           std::to_string(res.residual) + ")");
    return out;
}

namespace {

struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        n += 1.0;
        double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0.0) return;
        double tot = n + o.n;
        double d = o.mean - mean;
        mean += d * o.n / tot;
        m2 += o.m2 + d * d * n * o.n / tot;
        n = tot;
    }
};

constexpr int kBlock = 1024;

}  // namespace

namespace detail {

RmsEstimate haar_rms(int dim, int samples, std::uint64_t seed, int workers,
                     const std::function<double(const CVector&)>& f) {
    if (samples < 2) fail(ErrorCode::invalid_argument, "Monte Carlo estimate needs at least two samples");
    const int blocks = (samples + kBlock - 1) / kBlock;
    std::vector<Moments> parts(static_cast<std::size_t>(blocks));
    parallel_for(blocks, workers, [&](int b) {
        Rng rng = Rng(seed).split(static_cast<std::uint64_t>(b));
        const int count = std::min(kBlock, samples - b * kBlock);
        for (int i = 0; i < count; ++i) parts[b].add(f(haar_state(dim, rng).amplitudes()));
    });
    Moments total;
    for (const auto& p : parts) total.merge(p);
    RmsEstimate out;
    out.samples = samples;
    out.mean = total.mean;
    out.rms = std::sqrt(std::max(total.m2 / total.n, 0.0));
    out.se = std::sqrt(std::max(total.m2 / (total.n - 1.0), 0.0) / total.n);
    return out;
}

}  // namespace detail

RmsEstimate entropy_rms(const MeasurementSet& ms, int samples, std::uint64_t seed, int workers) {
    return detail::haar_rms(ms.dim(), samples, seed, workers,
                            [&ms](const CVector& psi) { return detail::average_entropy_raw(psi, ms); });
}

}  // namespace certlab
