#include "plurigreen/lempert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <omp.h>

#include "plurigreen/errors.hpp"
#include "plurigreen/parallel.hpp"
#include "plurigreen/pick.hpp"

namespace plurigreen {

void SolverConfig::validate() const {
    if (radii < 0 || angles < 0) throw InvalidParameter("grid resolution must be non-negative");
    if (keep_best <= 0) throw InvalidParameter("keep_best must be positive");
    if (!(refine_tol > 0.0)) throw InvalidParameter("refinement tolerance must be positive");
    if (max_refine_iterations <= 0) throw InvalidParameter("max_refine_iterations must be positive");
    if (!(psd_tol >= 0.0)) throw InvalidParameter("PSD tolerance must be >= 0");
    if (max_grid_points == 0) throw InvalidParameter("max_grid_points must be positive");
}

SolverConfig SolverConfig::doubled() const {
    SolverConfig out = *this;
    out.radii *= 2;
    out.angles *= 2;
    out.max_grid_points *= 4;
    return out;
}

bool DiscSpec::maps_into_closed_bidisc(int samples) const {
    for (int i = 0; i < samples; ++i) {
        const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi * i / samples);
        if (std::abs(first(zeta)) > 1.0 + 1e-12 || std::abs(second(zeta)) > 1.0 + 1e-12) return false;
    }
    return true;
}

double disc_objective(std::span<const double> nu, std::span<const Complex> nodes) {
    if (nu.size() != nodes.size()) throw InvalidParameter("one weight per node required");
    double total = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (!(std::abs(nodes[j]) < 1.0)) throw InvalidParameter("disc node outside the open unit disc");
        total += weighted(nu[j], log_abs(nodes[j]));
    }
    return total;
}

double disc_objective(const WeightVector& nu, std::span<const Complex> nodes) {
    return disc_objective(nu.values(), nodes);
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Evaluation {
    double value = kPosInf;
    double lambda_first = 0.0;
    double lambda_second = 0.0;
};

// Search grid for m nodes: node 1 on radii only, nodes 2..m on radii x angles.
struct GridSpec {
    int radii = 0;
    int angles = 0;
    int nodes = 0;
    std::size_t total = 0;

    std::size_t per_node() const { return static_cast<std::size_t>(radii) * static_cast<std::size_t>(angles); }
};

GridSpec make_grid(int nodes, const SolverConfig& sc) {
    GridSpec g{sc.radii, sc.angles, nodes, 0};
    auto count = [&](int r, int a) {
        double t = r;
        for (int j = 1; j < nodes; ++j) t *= static_cast<double>(r) * a;
        return t;
    };
    if (g.radii == 0 || (nodes > 1 && g.angles == 0)) return g;
    double total = count(g.radii, g.angles);
    if (total > static_cast<double>(sc.max_grid_points)) {
        // shrink both resolutions by a common factor to fit the budget
        const double f = std::pow(static_cast<double>(sc.max_grid_points) / total, 1.0 / (2 * nodes - 1));
        g.radii = std::max(2, static_cast<int>(std::floor(g.radii * f)));
        g.angles = std::max(2, static_cast<int>(std::floor(g.angles * f)));
        while (count(g.radii, g.angles) > static_cast<double>(sc.max_grid_points) && g.radii > 2) --g.radii;
        total = count(g.radii, g.angles);
    }
    g.total = static_cast<std::size_t>(total);
    return g;
}

class NodeProblem {
public:
    NodeProblem(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                std::span<const std::size_t> subset, double psd_tol)
        : z1_(z[0]), z2_(z[1]), psd_tol_(psd_tol) {
        const auto a = cfg.axis_coordinates();
        for (std::size_t idx : subset) {
            targets_.push_back(a[idx]);
            weights_.push_back(nu[idx]);
        }
    }

    int nodes() const { return static_cast<int>(targets_.size()); }
    int dimension() const { return 2 * nodes() - 1; }

    // x = [r_1, r_2, theta_2, ..., r_m, theta_m]
    bool decode(std::span<const double> x, std::vector<Complex>& out) const {
        const int m = nodes();
        out.resize(m);
        for (int j = 0; j < m; ++j) {
            const double r = x[j == 0 ? 0 : 2 * j - 1];
            if (!(r > 0.0 && r < 1.0)) return false;
            const double theta = j == 0 ? 0.0 : x[2 * j];
            out[j] = std::polar(r, theta);
        }
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < i; ++j) {
                if (std::abs(out[i] - out[j]) < 1e-12) return false;
            }
        }
        return true;
    }

    Evaluation evaluate_nodes(std::span<const Complex> zeta, bool all_constraints = false) const {
        const int m = nodes();
        Complex nodes_buf[16], first_buf[16], second_buf[16];
        std::vector<Complex> heap_nodes, heap_first, heap_second;
        Complex* nb = nodes_buf;
        Complex* fb = first_buf;
        Complex* sb = second_buf;
        if (m + 1 > 16) {
            heap_nodes.resize(m + 1);
            heap_first.resize(m + 1);
            heap_second.resize(m + 1);
            nb = heap_nodes.data();
            fb = heap_first.data();
            sb = heap_second.data();
        }
        nb[0] = 0.0;
        fb[0] = z1_;
        sb[0] = z2_;
        for (int j = 0; j < m; ++j) {
            nb[j + 1] = zeta[j];
            fb[j + 1] = targets_[j];
            sb[j + 1] = 0.0;
        }
        const std::span<const Complex> ns(nb, m + 1);
        Evaluation e;
        e.lambda_second = pick_min_eigenvalue(ns, std::span<const Complex>(sb, m + 1));
        if (e.lambda_second < -psd_tol_ && !all_constraints) return e;
        e.lambda_first = pick_min_eigenvalue(ns, std::span<const Complex>(fb, m + 1));
        if (e.lambda_first < -psd_tol_ || e.lambda_second < -psd_tol_) return e;
        e.value = 0.0;
        for (int j = 0; j < m; ++j) e.value += weighted(weights_[j], std::log(std::abs(zeta[j])));
        return e;
    }

    Evaluation evaluate(std::span<const double> x, std::vector<Complex>& scratch) const {
        if (!decode(x, scratch)) return {};
        return evaluate_nodes(scratch);
    }

    // Both eigenvalues even where infeasible; -inf when x does not decode.
    Evaluation evaluate_constraints(std::span<const double> x, std::vector<Complex>& scratch) const {
        if (!decode(x, scratch)) return {kPosInf, kNegInf, kNegInf};
        return evaluate_nodes(scratch, true);
    }

    double weight(int j) const { return weights_[j]; }

    void grid_point(const GridSpec& g, std::size_t index, std::vector<double>& x) const {
        const int m = nodes();
        x.resize(dimension());
        x[0] = (static_cast<double>(index % g.radii) + 0.5) / g.radii;
        index /= g.radii;
        for (int j = 1; j < m; ++j) {
            const std::size_t cell = index % g.per_node();
            index /= g.per_node();
            x[2 * j - 1] = (static_cast<double>(cell % g.radii) + 0.5) / g.radii;
            x[2 * j] = kTwoPi * static_cast<double>(cell / g.radii) / g.angles;
        }
    }

private:
    Complex z1_, z2_;
    double psd_tol_;
    std::vector<Complex> targets_;
    std::vector<double> weights_;
};

void validate_inputs(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                     std::span<const std::size_t> subset) {
    const auto& tag = cfg.domain();
    if (!(tag.is_product() && tag.dimension() == 2)) {
        throw InvalidParameter("the Lempert solver works on the bidisc only");
    }
    (void)cfg.axis_coordinates();
    if (nu.size() != cfg.size()) throw InvalidParameter("one weight per pole required");
    if (!in_domain(tag, z)) throw DomainViolation("point " + to_string(z) + " is outside the bidisc");
    if (subset.empty()) throw InvalidParameter("pole subset must be non-empty");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= cfg.size()) throw InvalidParameter("pole index out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (subset[i] == subset[j]) throw InvalidParameter("pole index repeated in subset");
        }
    }
}

std::vector<double> grid_values(const NodeProblem& problem, const GridSpec& g, bool use_threads) {
    std::vector<double> values(g.total, kPosInf);
    const auto n = static_cast<std::int64_t>(g.total);
#pragma omp parallel num_threads(parallel::num_threads()) if (use_threads)
    {
        std::vector<double> x;
        std::vector<Complex> scratch;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            problem.grid_point(g, static_cast<std::size_t>(i), x);
            values[static_cast<std::size_t>(i)] = problem.evaluate(x, scratch).value;
        }
    }
    return values;
}

std::vector<std::vector<double>> poll_directions(int d) {
    std::vector<std::vector<double>> dirs;
    if (d <= 3) {
        int total = 1;
        for (int i = 0; i < d; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
            std::vector<double> v(d);
            int c = code;
            bool nonzero = false;
            for (int i = 0; i < d; ++i) {
                v[i] = static_cast<double>(c % 3) - 1.0;
                nonzero = nonzero || v[i] != 0.0;
                c /= 3;
            }
            if (nonzero) dirs.push_back(std::move(v));
        }
        return dirs;
    }
    for (int i = 0; i < d; ++i) {
        for (double s : {1.0, -1.0}) {
            std::vector<double> v(d, 0.0);
            v[i] = s;
            dirs.push_back(std::move(v));
        }
        for (int j = i + 1; j < d; ++j) {
            for (double si : {1.0, -1.0}) {
                for (double sj : {1.0, -1.0}) {
                    std::vector<double> v(d, 0.0);
                    v[i] = si;
                    v[j] = sj;
                    dirs.push_back(std::move(v));
                }
            }
        }
    }
    return dirs;
}

struct Refined {
    std::vector<double> x;
    Evaluation eval;
};

// Extreme-barrier pattern search: the fixed stencil plus 2d seeded random
// directions per poll; expand on success, halve on failure. Returns the
// final step multiplier through `step_out`.
Refined pattern_search(const NodeProblem& problem, std::vector<double> x, std::span<const double> scale,
                       const SolverConfig& sc, std::uint64_t stream, double& step_out) {
    const int d = problem.dimension();
    const double max_scale = *std::max_element(scale.begin(), scale.end());
    const auto fixed = poll_directions(d);
    std::mt19937_64 rng(sc.seed * 0x9E3779B97F4A7C15ULL + stream);
    std::normal_distribution<double> normal;

    std::vector<Complex> scratch;
    Evaluation best = problem.evaluate(x, scratch);
    std::vector<double> trial(d), candidate(d);
    double step = 1.0;
    for (int it = 0; it < sc.max_refine_iterations && step * max_scale >= sc.refine_tol; ++it) {
        auto dirs = fixed;
        for (int k = 0; k < 2 * d; ++k) {
            std::vector<double> v(d);
            double norm = 0.0;
            for (auto& c : v) {
                c = normal(rng);
                norm += c * c;
            }
            norm = std::sqrt(norm);
            for (auto& c : v) c /= norm;
            dirs.push_back(std::move(v));
        }
        Evaluation poll_best = best;
        bool improved = false;
        for (const auto& dir : dirs) {
            for (int i = 0; i < d; ++i) trial[i] = x[i] + step * scale[i] * dir[i];
            const Evaluation e = problem.evaluate(trial, scratch);
            if (e.value < poll_best.value) {
                poll_best = e;
                candidate = trial;
                improved = true;
            }
        }
        if (improved) {
            x = candidate;
            best = poll_best;
            step = std::min(step * 2.0, 1.0);
        } else {
            step *= 0.5;
        }
    }
    step_out = step;
    return {std::move(x), best};
}

// Rosenbrock rotating-coordinate search under the extreme barrier. The basis
// turns toward the accumulated progress, so it can follow the thin curved
// ridges where both Pick constraints are active.
Refined rosenbrock(const NodeProblem& problem, Refined start, std::span<const double> scale, double initial_step,
                   const SolverConfig& sc) {
    const int d = problem.dimension();
    std::vector<std::vector<double>> basis(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) basis[i][i] = 1.0;
    std::vector<double> steps(d, initial_step), progress(d, 0.0);
    std::vector<char> succeeded(d, 0), failed(d, 0);

    std::vector<Complex> scratch;
    std::vector<double> trial(d);
    Refined cur = std::move(start);
    const double stop = sc.refine_tol * 1e-2;
    for (int it = 0; it < sc.max_refine_iterations; ++it) {
        double largest = 0.0;
        for (double s : steps) largest = std::max(largest, std::abs(s));
        if (largest < stop) break;

        for (int i = 0; i < d; ++i) {
            for (int c = 0; c < d; ++c) trial[c] = cur.x[c] + steps[i] * basis[i][c] * scale[c];
            const Evaluation e = problem.evaluate(trial, scratch);
            if (e.value < cur.eval.value) {
                cur.x = trial;
                cur.eval = e;
                progress[i] += steps[i];
                steps[i] *= 3.0;
                succeeded[i] = 1;
            } else {
                steps[i] *= -0.5;
                failed[i] = 1;
            }
        }
        const bool stage_done = std::all_of(succeeded.begin(), succeeded.end(), [](char v) { return v; }) &&
                                std::all_of(failed.begin(), failed.end(), [](char v) { return v; });
        if (!stage_done) continue;

        // Gram-Schmidt on A_i = sum_{j >= i} progress_j basis_j
        std::vector<std::vector<double>> next(d, std::vector<double>(d, 0.0));
        bool degenerate = false;
        for (int i = 0; i < d && !degenerate; ++i) {
            std::vector<double> a(d, 0.0);
            for (int j = i; j < d; ++j) {
                for (int c = 0; c < d; ++c) a[c] += progress[j] * basis[j][c];
            }
            for (int j = 0; j < i; ++j) {
                double dot = 0.0;
                for (int c = 0; c < d; ++c) dot += a[c] * next[j][c];
                for (int c = 0; c < d; ++c) a[c] -= dot * next[j][c];
            }
            double norm = 0.0;
            for (double v : a) norm += v * v;
            norm = std::sqrt(norm);
            if (norm < 1e-300) {
                degenerate = true;
                break;
            }
            for (int c = 0; c < d; ++c) next[i][c] = a[c] / norm;
        }
        if (!degenerate) basis = std::move(next);
        std::fill(progress.begin(), progress.end(), 0.0);
        std::fill(succeeded.begin(), succeeded.end(), 0);
        std::fill(failed.begin(), failed.end(), 0);
    }
    return cur;
}

// Gradient projection on the active Pick constraints: step along the
// projected negative gradient, then pull the active eigenvalues back to zero
// with Gauss-Newton corrections. Constraint gradients by central differences.
Refined polish(const NodeProblem& problem, Refined cur, const SolverConfig& sc) {
    const int d = problem.dimension();
    const int m = problem.nodes();
    constexpr double kActive = 1e-6;
    constexpr double kFd = 1e-7;
    std::vector<Complex> scratch;

    auto lambdas = [&](std::span<const double> x, double out[2]) {
        const Evaluation e = problem.evaluate_constraints(x, scratch);
        out[0] = e.lambda_first;
        out[1] = e.lambda_second;
        return e.value < kPosInf || e.lambda_first > -kPosInf;
    };
    auto jacobian_row = [&](std::span<const double> x, int which, Eigen::VectorXd& row) {
        std::vector<double> xp(x.begin(), x.end()), xm(x.begin(), x.end());
        row.resize(d);
        double lp[2], lm[2];
        for (int c = 0; c < d; ++c) {
            xp[c] = x[c] + kFd;
            xm[c] = x[c] - kFd;
            lambdas(xp, lp);
            lambdas(xm, lm);
            row(c) = (lp[which] - lm[which]) / (2.0 * kFd);
            xp[c] = xm[c] = x[c];
        }
    };

    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(d);
        grad(0) = problem.weight(0) / cur.x[0];
        for (int j = 1; j < m; ++j) grad(2 * j - 1) = problem.weight(j) / cur.x[2 * j - 1];

        std::vector<int> active;
        if (cur.eval.lambda_first < kActive) active.push_back(0);
        if (cur.eval.lambda_second < kActive) active.push_back(1);

        Eigen::VectorXd dir = -grad;
        Eigen::MatrixXd jac(static_cast<Eigen::Index>(active.size()), d);
        while (!active.empty()) {
            jac.resize(static_cast<Eigen::Index>(active.size()), d);
            for (std::size_t r = 0; r < active.size(); ++r) {
                Eigen::VectorXd row;
                jacobian_row(cur.x, active[r], row);
                jac.row(static_cast<Eigen::Index>(r)) = row.transpose();
            }
            const Eigen::MatrixXd gram = jac * jac.transpose();
            const Eigen::VectorXd mult = gram.ldlt().solve(jac * grad);
            // drop constraints whose multiplier has the wrong sign
            int drop = -1;
            for (Eigen::Index r = 0; r < mult.size(); ++r) {
                if (mult(r) < 0.0) drop = static_cast<int>(r);
            }
            if (drop < 0) {
                dir = -(grad - jac.transpose() * mult);
                break;
            }
            active.erase(active.begin() + drop);
            dir = -grad;
        }
        if (dir.norm() < 1e-14) break;

        bool accepted = false;
        for (double t = 1e-2 / dir.norm(); t * dir.norm() > 1e-13; t *= 0.5) {
            std::vector<double> y(d);
            for (int c = 0; c < d; ++c) y[c] = cur.x[c] + t * dir(c);
            for (int newton = 0; newton < 4 && !active.empty(); ++newton) {
                double l[2];
                lambdas(y, l);
                Eigen::VectorXd res(static_cast<Eigen::Index>(active.size()));
                Eigen::MatrixXd jy(static_cast<Eigen::Index>(active.size()), d);
                for (std::size_t r = 0; r < active.size(); ++r) {
                    res(static_cast<Eigen::Index>(r)) = l[active[r]];
                    Eigen::VectorXd row;
                    jacobian_row(y, active[r], row);
                    jy.row(static_cast<Eigen::Index>(r)) = row.transpose();
                }
                if (res.minCoeff() >= 0.0 && res.maxCoeff() < kActive) break;
                const Eigen::VectorXd corr = jy.transpose() * (jy * jy.transpose()).ldlt().solve(res);
                for (int c = 0; c < d; ++c) y[c] -= corr(c);
            }
            const Evaluation e = problem.evaluate(y, scratch);
            if (e.value < cur.eval.value) {
                cur.x = std::move(y);
                cur.eval = e;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    (void)sc;
    return cur;
}

Refined refine(const NodeProblem& problem, const GridSpec& g, std::vector<double> x, const SolverConfig& sc,
               std::uint64_t stream) {
    const int d = problem.dimension();
    std::vector<double> scale(d);
    scale[0] = 1.0 / g.radii;
    for (int j = 1; j < problem.nodes(); ++j) {
        scale[2 * j - 1] = 1.0 / g.radii;
        scale[2 * j] = kTwoPi / std::max(g.angles, 1);
    }
    double step = 1.0;
    Refined coarse = pattern_search(problem, std::move(x), scale, sc, stream, step);
    Refined fine = rosenbrock(problem, std::move(coarse), scale, std::max(step, 1e-3), sc);
    return polish(problem, std::move(fine), sc);
}

LempertResult solve(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                    std::span<const std::size_t> subset, const SolverConfig& sc) {
    const NodeProblem problem(z, cfg, nu, subset, sc.psd_tol);
    const GridSpec g = make_grid(problem.nodes(), sc);

    LempertResult result;
    result.subset.assign(subset.begin(), subset.end());
    result.grid_points = g.total;
    if (g.total == 0) return result;

    const auto values = grid_values(problem, g, true);
    std::vector<std::size_t> feasible;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < kPosInf) feasible.push_back(i);
    }
    result.feasible_grid_points = feasible.size();
    if (feasible.empty()) return result;

    const std::size_t keep = std::min<std::size_t>(feasible.size(), static_cast<std::size_t>(sc.keep_best));
    std::partial_sort(feasible.begin(), feasible.begin() + static_cast<std::ptrdiff_t>(keep), feasible.end(),
                      [&](std::size_t i, std::size_t j) {
                          return values[i] < values[j] || (values[i] == values[j] && i < j);
                      });

    std::vector<Refined> refined(keep);
    const auto nkeep = static_cast<std::int64_t>(keep);
#pragma omp parallel for schedule(dynamic) num_threads(parallel::num_threads())
    for (std::int64_t c = 0; c < nkeep; ++c) {
        std::vector<double> x;
        problem.grid_point(g, feasible[static_cast<std::size_t>(c)], x);
        refined[static_cast<std::size_t>(c)] = refine(problem, g, std::move(x), sc, static_cast<std::uint64_t>(c));
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < keep; ++c) {
        if (refined[c].eval.value < refined[best].eval.value) best = c;
    }
    std::vector<Complex> nodes;
    problem.decode(refined[best].x, nodes);
    result.value = refined[best].eval.value;
    result.best_nodes = std::move(nodes);
    result.min_eig_first = refined[best].eval.lambda_first;
    result.min_eig_second = refined[best].eval.lambda_second;
    return result;
}

}  // namespace

LempertResult lempert_bidisc_axis(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                                  std::span<const std::size_t> subset, const SolverConfig& sc) {
    sc.validate();
    validate_inputs(z, cfg, nu, subset);
    return solve(z, cfg, nu, subset, sc);
}

LempertResult lempert_subset_min(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                                 const SolverConfig& sc) {
    const std::size_t k = cfg.size();
    if (k > 8) throw InvalidParameter("subset enumeration supports at most 8 poles");
    LempertResult best;
    bool have = false;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) subset.push_back(i);
        }
        auto r = lempert_bidisc_axis(z, cfg, nu, subset, sc);
        if (!have || r.value < best.value) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

std::vector<double> lempert_grid_values(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                                        std::span<const std::size_t> subset, const SolverConfig& sc) {
    sc.validate();
    validate_inputs(z, cfg, nu, subset);
    const NodeProblem problem(z, cfg, nu, subset, sc.psd_tol);
    return grid_values(problem, make_grid(problem.nodes(), sc), true);
}

std::vector<double> lempert_grid_values_serial(const ComplexPoint& z, const PoleConfiguration& cfg,
                                               const WeightVector& nu, std::span<const std::size_t> subset,
                                               const SolverConfig& sc) {
    sc.validate();
    validate_inputs(z, cfg, nu, subset);
    const NodeProblem problem(z, cfg, nu, subset, sc.psd_tol);
    return grid_values(problem, make_grid(problem.nodes(), sc), false);
}

void check_two_pole_geometry(Complex a, Complex b, Complex gamma) {
    if (a == Complex{} || b == Complex{}) throw GeometryError("poles must satisfy a != 0 and b != 0");
    if (a == b) throw GeometryError("poles must satisfy a != b");
    if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) throw GeometryError("poles must satisfy |a| < 1 and |b| < 1");
    if (!(std::abs(a * b) < std::abs(gamma))) throw GeometryError("geometry must satisfy |ab| < |gamma|");
    if (!(std::abs(gamma) < std::min(std::abs(a), std::abs(b)))) {
        throw GeometryError("geometry must satisfy |gamma| < min(|a|, |b|)");
    }
}

DiscSpec explicit_disc(Complex a, Complex b, Complex gamma) {
    check_two_pole_geometry(a, b, gamma);
    const Complex zeta1 = std::sqrt(gamma * a / b);
    const Complex zeta2 = gamma / zeta1;
    const Complex beta = a / zeta1;
    DiscSpec disc;
    disc.nodes = {zeta1, zeta2};
    disc.first = {{Complex{}}, beta};
    disc.second = {{zeta1, zeta2}, Complex{1.0, 0.0}};
    return disc;
}

}  // namespace plurigreen
