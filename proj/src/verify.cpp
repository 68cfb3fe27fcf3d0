#include "plurigreen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plurigreen/errors.hpp"

namespace plurigreen {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "skip";
}

json json_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json json_point(const ComplexPoint& z) {
    json out = json::array();
    for (const auto& c : z.coords()) out.push_back(json::array({json_number(c.real()), json_number(c.imag())}));
    return out;
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check& VerificationReport::check(const std::string& check_name) const {
    for (const auto& c : checks) {
        if (c.name == check_name) return c;
    }
    throw std::out_of_range("no check named " + check_name);
}

json VerificationReport::to_json() const {
    json out;
    out["report"] = name;
    out["passed"] = passed();
    json cs = json::object();
    for (const auto& c : checks) {
        json w = json::array();
        for (const auto& x : c.witnesses) {
            w.push_back({{"point", json_point(x.point)}, {"value", json_number(x.value)}, {"note", x.note}});
        }
        cs[c.name] = {{"status", to_string(c.status)},
                      {"value", json_number(c.value)},
                      {"tolerance", json_number(c.tolerance)},
                      {"witnesses", w},
                      {"details", c.details}};
    }
    out["checks"] = cs;
    out["config"] = config;
    return out;
}

std::string VerificationReport::dump() const { return to_json().dump(2) + "\n"; }

namespace {

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

json region_json(const GridRegion& r) {
    json ex = json::array();
    for (const auto& e : r.exclusions) ex.push_back({{"center", json_point(e.center)}, {"radius", e.radius}});
    return {{"center", json_point(r.center)},
            {"half_widths", r.half_widths},
            {"step", r.step},
            {"exclusions", ex},
            {"points", r.size()}};
}

json solver_json(const SolverConfig& sc) {
    return {{"radii", sc.radii},
            {"angles", sc.angles},
            {"keep_best", sc.keep_best},
            {"refine_tol", sc.refine_tol},
            {"max_refine_iterations", sc.max_refine_iterations},
            {"psd_tol", sc.psd_tol},
            {"seed", sc.seed},
            {"max_grid_points", sc.max_grid_points}};
}

json weights_json(const WeightVector& w) { return json(std::vector<double>(w.values().begin(), w.values().end())); }

void require_planar_product(const PoleConfiguration& cfg) {
    const auto& d = cfg.domain();
    if (!d.is_product() || d.dimension() != 2) {
        throw InvalidParameter("verification grids are implemented for the bidisc");
    }
}

bool near_pole(const PoleConfiguration& cfg, const ComplexPoint& z, double radius) {
    return std::any_of(cfg.poles().begin(), cfg.poles().end(),
                       [&](const Pole& p) { return (z - p.location).norm() < radius; });
}

ComplexPoint nudge(const ComplexPoint& z, int coord, double d) {
    ComplexPoint p = z;
    p[static_cast<std::size_t>(coord / 2)] += coord % 2 == 0 ? Complex(d, 0.0) : Complex(0.0, d);
    return p;
}

double oscillation(const ScalarField& u, const ComplexPoint& z, double s) {
    double lo = u(z), hi = lo;
    for (int k = 0; k < 4; ++k) {
        for (double d : {s, -s}) {
            const double v = u(nudge(z, k, d));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return hi - lo;
}

Check continuity_check(const Field& u, const PoleConfiguration& cfg, const ChecklistOptions& opts) {
    Check c;
    c.name = "continuity";
    const double s = opts.continuity_scale;
    c.tolerance = 0.75;
    std::size_t tested = 0;
    double worst = 0.0;
    for (const auto& z : sample_points(cfg, opts.region)) {
        if (near_pole(cfg, z, opts.pole_exclusion)) continue;
        const double coarse = oscillation(u.value, z, s);
        const double fine = oscillation(u.value, z, 0.5 * s);
        ++tested;
        const bool ok = std::isfinite(coarse) && std::isfinite(fine) && fine <= 0.75 * coarse + 1e-12;
        const double ratio = coarse > 0.0 ? fine / coarse : 0.0;
        worst = std::max(worst, std::isfinite(ratio) ? ratio : kPosInf);
        if (!ok && c.witnesses.size() < opts.scan.max_witnesses) {
            c.witnesses.push_back({z, fine, "oscillation did not shrink with the stencil"});
        }
    }
    c.value = worst;
    c.status = tested == 0 ? CheckStatus::Skip : verdict(c.witnesses.empty());
    c.details = {{"scale", s},
                 {"points", tested},
                 {"criterion", "osc(s/2) <= 0.75 osc(s) + 1e-12 on 3-point stencils along each real axis"},
                 {"note", "grid proxy for continuity; continuity itself is not decidable on a grid"}};
    return c;
}

Check maximality_check(const Field& u, const PoleConfiguration& cfg, const ChecklistOptions& opts) {
    Check c;
    c.name = "maximality";
    GridRegion region = opts.region;
    for (const auto& p : cfg.poles()) region.exclusions.push_back({p.location, opts.pole_exclusion});
    try {
        const auto rep = maximality_scan(u, region, opts.scan);
        c.value = rep.max_abs_det;
        c.tolerance = rep.threshold;
        c.status = verdict(rep.pass);
        for (const auto& v : rep.violations) c.witnesses.push_back({v.z, v.det, "normalized det above threshold"});
        c.details = {{"fd_step", rep.fd_step},
                     {"max_abs_det_half_step", rep.max_abs_det_half},
                     {"quantiles", rep.quantiles},
                     {"used_points", rep.used_points},
                     {"excluded_points", rep.excluded_points},
                     {"branch_skipped_points", rep.branch_skipped_points},
                     {"singular_points", rep.singular_points},
                     {"control_value", rep.control_value}};
    } catch (const EmptyGrid& e) {
        c.status = CheckStatus::Skip;
        c.details = {{"reason", e.what()}};
    }
    return c;
}

Check pole_check(const Field& u, const PoleConfiguration& cfg, const WeightVector& nu, const ChecklistOptions& opts) {
    Check c;
    c.name = "pole_asymptotics";
    c.tolerance = opts.pole_tolerance;
    json per_pole = json::array();
    std::vector<double> estimated;
    double worst = 0.0;
    bool ok = true;
    for (std::size_t j = 0; j < cfg.size(); ++j) {
        const auto& pole = cfg.poles()[j];
        const double expected = nu[j];
        const auto direction = slice_direction(cfg.domain(), pole.location, opts.slice_fraction);
        const auto local = recentered(u.value, pole.location);
        const auto est = lelong_estimate(local, direction, opts.lelong_radii);
        const double rel = expected > 0.0 ? std::abs(est.alpha - expected) / expected : std::abs(est.alpha);
        std::vector<double> offsets;
        for (std::size_t i = 0; i < est.values.size(); ++i) {
            const double r = opts.lelong_radii[i];
            offsets.push_back(est.values[i] * std::log(r) - expected * std::log(r));
        }
        const std::size_t m = offsets.size();
        const double drift = m >= 2 ? std::abs(offsets[m - 1] - offsets[m - 2]) : 0.0;
        const bool bounded = m >= 2 && std::isfinite(offsets[m - 1]) && drift <= 1e-3 * (1.0 + std::abs(offsets[m - 1]));
        const bool log_ok = log_bound_check(local, direction, expected, opts.lelong_radii);
        const bool pole_ok = rel <= opts.pole_tolerance && est.monotone_ok && bounded && log_ok;
        ok = ok && pole_ok;
        worst = std::max(worst, rel);
        estimated.push_back(est.alpha);
        if (!pole_ok) c.witnesses.push_back({pole.location, est.alpha, "Lelong estimate or log bound off"});
        json vals = json::array();
        for (double v : est.values) vals.push_back(json_number(v));
        json offs = json::array();
        for (double v : offsets) offs.push_back(json_number(v));
        per_pole.push_back({{"pole", json_point(pole.location)},
                            {"expected_weight", expected},
                            {"estimated_weight", est.alpha},
                            {"relative_error", rel},
                            {"monotone", est.monotone_ok},
                            {"log_bound", log_ok},
                            {"offset_bounded", bounded},
                            {"psi", vals},
                            {"offset", offs}});
    }
    c.value = worst;
    c.status = verdict(ok);
    c.details = {{"estimated_weights", estimated}, {"poles", per_pole}, {"radii", opts.lelong_radii}};
    return c;
}

std::vector<ComplexPoint> boundary_points(int samples, double m) {
    std::vector<ComplexPoint> pts;
    const std::vector<double> other = {0.0, 0.5, 0.9, m};
    for (int coord = 0; coord < 2; ++coord) {
        for (int i = 0; i < samples; ++i) {
            const Complex edge = std::polar(m, 2.0 * std::numbers::pi * i / samples);
            for (double rho : other) {
                const int spins = rho == 0.0 ? 1 : 8;
                for (int j = 0; j < spins; ++j) {
                    const Complex w = std::polar(rho, 2.0 * std::numbers::pi * (j + 0.5) / spins);
                    pts.push_back(coord == 0 ? ComplexPoint{edge, w} : ComplexPoint{w, edge});
                }
            }
        }
    }
    return pts;
}

Check boundary_check(const Field& u, const ChecklistOptions& opts) {
    Check c;
    c.name = "boundary";
    c.tolerance = opts.boundary_tolerance;
    for (const auto& z : boundary_points(opts.boundary_samples, opts.boundary_modulus)) {
        const double v = std::abs(u(z));
        if (v > c.value) {
            c.value = v;
            c.witnesses.assign(1, {z, u(z), "largest |value| near the boundary"});
        }
    }
    c.status = verdict(c.value < c.tolerance);
    if (c.status == CheckStatus::Pass) c.witnesses.clear();
    c.details = {{"modulus", opts.boundary_modulus}, {"samples", opts.boundary_samples}};
    return c;
}

}  // namespace

ComplexPoint slice_direction(const DomainTag& domain, const ComplexPoint& center, double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw InvalidParameter("slice fraction must lie in (0, 1)");
    if (!in_domain(domain, center)) throw DomainViolation("slice centre " + to_string(center) + " is outside the domain");
    ComplexPoint x = ComplexPoint::zeros(center.size());
    for (std::size_t k = 0; k < center.size(); ++k) {
        const double room = domain.is_product() ? 1.0 - std::abs(center[k])
                                                : (1.0 - center.norm()) / std::sqrt(static_cast<double>(center.size()));
        x[k] = Complex(fraction * room, 0.0);
    }
    return x;
}

ChecklistOptions ChecklistOptions::bidisc_default() {
    ChecklistOptions o;
    o.region.center = ComplexPoint{0.0, 0.0};
    o.region.half_widths = {0.6, 0.6, 0.6, 0.6};
    o.region.step = 0.1;
    return o;
}

std::vector<ComplexPoint> sample_points(const PoleConfiguration& cfg, const GridRegion& region) {
    region.validate();
    std::vector<ComplexPoint> pts;
    const std::size_t n = region.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto z = region.point(i);
        if (!in_domain(cfg.domain(), z) || region.excluded(z)) continue;
        if (near_pole(cfg, z, 1e-12)) continue;
        pts.push_back(std::move(z));
    }
    return pts;
}

VerificationReport dirichlet_checklist(const Field& candidate, const PoleConfiguration& cfg, const WeightVector& nu,
                                       const ChecklistOptions& opts) {
    require_planar_product(cfg);
    if (nu.size() != cfg.size()) throw InvalidParameter("one weight per pole required");
    if (!opts.region.inside(cfg.domain())) throw DomainViolation("checklist region leaves the domain");
    VerificationReport rep;
    rep.name = "dirichlet_checklist";
    rep.checks.push_back(continuity_check(candidate, cfg, opts));
    rep.checks.push_back(maximality_check(candidate, cfg, opts));
    rep.checks.push_back(pole_check(candidate, cfg, nu, opts));
    rep.checks.push_back(boundary_check(candidate, opts));
    rep.config = {{"weights", weights_json(nu)},
                  {"region", region_json(opts.region)},
                  {"fd_step", opts.scan.fd_step},
                  {"maximality_constant", opts.scan.constant},
                  {"pole_exclusion", opts.pole_exclusion}};
    return rep;
}

namespace {

struct Residuals {
    double max_abs = 0.0;
    double min_signed = kPosInf;
    std::size_t points = 0;
    std::vector<Witness> strict;
};

// lhs(z) - rhs(z) over the grid, recording the first points where lhs > rhs.
template <class Lhs, class Rhs>
Residuals residuals(const PoleConfiguration& cfg, const GridRegion& region, Lhs lhs, Rhs rhs, double strict_gap) {
    Residuals r;
    for (const auto& z : sample_points(cfg, region)) {
        const double x = lhs(z);
        const double y = rhs(z);
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        const double d = x - y;
        ++r.points;
        r.max_abs = std::max(r.max_abs, std::abs(d));
        r.min_signed = std::min(r.min_signed, d);
        if (d > strict_gap && r.strict.size() < 4) r.strict.push_back({z, d, "strict inequality"});
    }
    return r;
}

Check identity_check(const std::string& name, bool ordered, const Residuals& r) {
    Check c;
    c.name = name;
    c.value = r.max_abs;
    c.tolerance = 1e-12;
    if (r.points == 0) {
        c.status = CheckStatus::Skip;
    } else if (ordered) {
        c.status = verdict(r.max_abs < c.tolerance);
    } else {
        c.status = verdict(!r.strict.empty() && r.min_signed >= -c.tolerance);
        c.witnesses = r.strict;
    }
    c.details = {{"same_ordered", ordered},
                 {"points", r.points},
                 {"min_signed_residual", json_number(r.min_signed)},
                 {"expectation", ordered ? "identity" : "inequality, strict somewhere"}};
    return c;
}

}  // namespace

VerificationReport decomposition_check(const PoleConfiguration& cfg, const WeightVector& nu, const WeightVector& lambda,
                                       const GridRegion& region) {
    require_planar_product(cfg);
    if (!lambda.dominated_by(nu)) throw InvalidParameter("decomposition needs lambda <= nu componentwise");
    const WeightVector rest = nu - lambda;
    const std::vector<WeightVector> triple = {nu, lambda, rest};
    const bool ordered = same_ordered(triple);
    const auto r = residuals(
        cfg, region, [&](const ComplexPoint& z) { return green_bidisc_weighted(cfg, nu, z); },
        [&](const ComplexPoint& z) {
            return green_bidisc_weighted(cfg, lambda, z) + green_bidisc_weighted(cfg, rest, z);
        },
        1e-9);
    VerificationReport rep;
    rep.name = "decomposition_check";
    rep.checks.push_back(identity_check("decomposition", ordered, r));
    rep.config = {{"nu", weights_json(nu)}, {"lambda", weights_json(lambda)}, {"region", region_json(region)}};
    return rep;
}

VerificationReport convexity_check(const PoleConfiguration& cfg, const WeightVector& mu, const WeightVector& lambda,
                                   double a, const GridRegion& region) {
    require_planar_product(cfg);
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidParameter("convex combination needs a in [0, 1]");
    const WeightVector mix = a * mu + (1.0 - a) * lambda;
    const bool ordered = same_ordered(mu, lambda);
    const auto r = residuals(
        cfg, region, [&](const ComplexPoint& z) { return green_bidisc_weighted(cfg, mix, z); },
        [&](const ComplexPoint& z) {
            return a * green_bidisc_weighted(cfg, mu, z) + (1.0 - a) * green_bidisc_weighted(cfg, lambda, z);
        },
        1e-9);
    VerificationReport rep;
    rep.name = "convexity_check";
    rep.checks.push_back(identity_check("convexity", ordered, r));
    rep.config = {{"mu", weights_json(mu)}, {"lambda", weights_json(lambda)}, {"a", a}, {"region", region_json(region)}};
    return rep;
}

namespace {

json certificate(const LempertResult& r) {
    json nodes = json::array();
    json moduli = json::array();
    for (const auto& n : r.best_nodes) {
        nodes.push_back(json::array({n.real(), n.imag()}));
        moduli.push_back(std::abs(n));
    }
    json subset = json::array();
    for (auto i : r.subset) subset.push_back(i + 1);
    return {{"value", json_number(r.value)},
            {"subset", subset},
            {"nodes", nodes},
            {"node_moduli", moduli},
            {"pick_min_eigenvalue_first", json_number(r.min_eig_first)},
            {"pick_min_eigenvalue_second", json_number(r.min_eig_second)},
            {"grid_points", r.grid_points},
            {"feasible_grid_points", r.feasible_grid_points}};
}

Check closeness(const std::string& name, double value, double target, double tol) {
    Check c;
    c.name = name;
    c.value = value;
    c.tolerance = tol;
    c.status = verdict(std::abs(value - target) <= tol);
    c.details = {{"target", json_number(target)}, {"error", json_number(std::abs(value - target))}};
    return c;
}

}  // namespace

VerificationReport counterexample_experiment(Complex a, Complex b, Complex gamma, const SolverConfig& sc) {
    check_two_pole_geometry(a, b, gamma);
    sc.validate();
    const std::vector<Complex> poles = {a, b};
    const std::vector<double> w = {2.0, 1.0};
    const auto cfg = PoleConfiguration::bidisc_axis(poles, w);
    const ComplexPoint z{Complex(0.0, 0.0), gamma};
    const WeightVector nu11{1.0, 1.0}, nu10{1.0, 0.0}, nu21{2.0, 1.0};
    const double log_a = std::log(std::abs(a));
    const double log_gamma = std::log(std::abs(gamma));

    VerificationReport rep;
    rep.name = "counterexample_experiment";

    const double g11 = green_bidisc_weighted(cfg, nu11, z);
    const double g10 = green_bidisc_weighted(cfg, nu10, z);
    const double g21 = green_bidisc_weighted(cfg, nu21, z);
    rep.checks.push_back(closeness("g_11", g11, log_gamma, 1e-14));
    rep.checks.push_back(closeness("g_10", g10, log_a, 1e-14));
    rep.checks.push_back(closeness("g_21", g21, log_gamma + log_a, 1e-14));

    {
        const auto disc = explicit_disc(a, b, gamma);
        const ComplexPoint targets[3] = {z, ComplexPoint{a, Complex(0.0, 0.0)}, ComplexPoint{b, Complex(0.0, 0.0)}};
        const Complex sources[3] = {Complex(0.0, 0.0), disc.nodes[0], disc.nodes[1]};
        double err = 0.0;
        for (int i = 0; i < 3; ++i) err = std::max(err, (disc(sources[i]) - targets[i]).max_modulus());
        const double d = disc_objective(nu11, disc.nodes);
        Check c;
        c.name = "explicit_disc";
        c.value = err;
        c.tolerance = 1e-12;
        const bool inside = disc.maps_into_closed_bidisc();
        c.status = verdict(err <= 1e-12 && std::abs(d - log_gamma) <= 1e-14 && inside);
        c.details = {{"objective", d},
                     {"objective_error", std::abs(d - log_gamma)},
                     {"objective_tolerance", 1e-14},
                     {"into_closed_bidisc", inside},
                     {"nodes", json::array({json::array({disc.nodes[0].real(), disc.nodes[0].imag()}),
                                            json::array({disc.nodes[1].real(), disc.nodes[1].imag()})})}};
        rep.checks.push_back(c);
    }

    const auto d11 = lempert_subset_min(z, cfg, nu11, sc);
    const auto d10 = lempert_subset_min(z, cfg, nu10, sc);
    const auto d21 = lempert_subset_min(z, cfg, nu21, sc);
    const SolverConfig fine = sc.doubled();
    const auto d21_fine = lempert_subset_min(z, cfg, nu21, fine);

    {
        auto c = closeness("delta_11", d11.value, log_gamma, kEqualityTolerance);
        c.details["certificate"] = certificate(d11);
        rep.checks.push_back(c);
    }
    {
        auto c = closeness("delta_10", d10.value, log_a, kEqualityTolerance);
        c.details["certificate"] = certificate(d10);
        rep.checks.push_back(c);
    }
    {
        const double gap = d21.value - g21;
        const double shift = std::abs(d21_fine.value - d21.value);
        const double stability = 10.0 * sc.refine_tol;
        const double margin = std::max(stability, shift);
        Check c;
        c.name = "delta_21_strict";
        c.value = gap;
        c.tolerance = margin;
        c.status = verdict(d21.feasible() && d21_fine.feasible() && gap > margin &&
                           gap > 10.0 * kEqualityTolerance && shift < stability);
        c.details = {{"g_21", g21},
                     {"delta_21", json_number(d21.value)},
                     {"delta_21_doubled", json_number(d21_fine.value)},
                     {"resolution_shift", json_number(shift)},
                     {"shift_tolerance", stability},
                     {"equality_tolerance_x10", 10.0 * kEqualityTolerance},
                     {"certificate", certificate(d21)},
                     {"certificate_doubled", certificate(d21_fine)}};
        if (c.status == CheckStatus::Fail) c.witnesses.push_back({z, gap, "gap not resolved above the margin"});
        rep.checks.push_back(c);
    }
    {
        // Schwarz constraints per pole subset: |zeta_a| >= |a|, |zeta_b| >= |b|, prod |zeta| >= |gamma|
        const double log_b = std::log(std::abs(b));
        const double full = std::max(log_a + log_gamma, 2.0 * log_a + log_b);
        const double only_a = 2.0 * std::max(log_a, log_gamma);
        const double only_b = std::max(log_b, log_gamma);
        const double lower = std::min({full, only_a, only_b});
        Check c;
        c.name = "schwarz_bracket";
        c.value = d21.value - lower;
        c.tolerance = kEqualityTolerance;
        c.status = verdict(d21.feasible() && lower >= g21 - 1e-14 && d21.value >= lower - kEqualityTolerance);
        c.details = {{"lower_bound", lower},
                     {"upper_bound", json_number(d21.value)},
                     {"lower_bound_full_subset", full},
                     {"lower_bound_first_only", only_a},
                     {"lower_bound_second_only", only_b},
                     {"g_21", g21}};
        rep.checks.push_back(c);
    }
    {
        Check c;
        c.name = "chain";
        c.tolerance = kEqualityTolerance;
        json rows = json::array();
        bool ok = true;
        double worst = 0.0;
        const std::vector<std::size_t> both = {0, 1};
        const std::pair<const WeightVector*, const LempertResult*> runs[] = {{&nu11, &d11}, {&nu10, &d10}, {&nu21, &d21}};
        for (const auto& [nu, subset_min] : runs) {
            const double g = green_bidisc_weighted(cfg, *nu, z);
            const auto full = lempert_bidisc_axis(z, cfg, *nu, both, sc);
            const double slack = std::min(full.value - subset_min->value, subset_min->value - g);
            worst = std::min(worst, slack);
            ok = ok && slack >= -c.tolerance;
            rows.push_back({{"weights", weights_json(*nu)},
                            {"delta", json_number(full.value)},
                            {"delta_A", json_number(subset_min->value)},
                            {"g", g}});
        }
        c.value = worst;
        c.status = verdict(ok);
        c.details = {{"runs", rows}, {"criterion", "delta >= delta_A >= g up to the tolerance"}};
        rep.checks.push_back(c);
    }

    rep.config = {{"a", json::array({a.real(), a.imag()})},
                  {"b", json::array({b.real(), b.imag()})},
                  {"gamma", json::array({gamma.real(), gamma.imag()})},
                  {"point", json_point(z)},
                  {"solver", solver_json(sc)},
                  {"solver_doubled", solver_json(fine)}};
    return rep;
}

}  // namespace plurigreen
