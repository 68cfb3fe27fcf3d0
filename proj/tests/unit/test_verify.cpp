#include <doctest.h>

#include <cmath>

#include "plurigreen/errors.hpp"
#include "plurigreen/verify.hpp"

using namespace plurigreen;

namespace {

const std::vector<Complex> kPoles = {0.5, -0.5};

PoleConfiguration config(double w1, double w2) {
    const std::vector<double> w = {w1, w2};
    return PoleConfiguration::bidisc_axis(kPoles, w);
}

ChecklistOptions quick() {
    auto o = ChecklistOptions::bidisc_default();
    o.region.step = 0.15;
    return o;
}

Field shifted(const Field& f, double scale, double offset) {
    Field out;
    out.value = [f, scale, offset](const ComplexPoint& z) { return scale * f(z) + offset; };
    out.branch_gap = f.branch_gap;
    return out;
}

}  // namespace

TEST_CASE("checklist passes for the Green function") {
    const auto cfg = config(2, 1);
    const auto rep = dirichlet_checklist(green_field(cfg), cfg, WeightVector{2, 1}, quick());
    CHECK(rep.passed());
    for (const auto* name : {"continuity", "maximality", "pole_asymptotics", "boundary"}) {
        CHECK(rep.check(name).status == CheckStatus::Pass);
    }
    const auto est = rep.check("pole_asymptotics").details["estimated_weights"];
    CHECK(est[0].get<double>() == doctest::Approx(2.0).epsilon(0.02));
    CHECK(est[1].get<double>() == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("a positive offset breaks the boundary condition and the log bound") {
    const auto cfg = config(1, 1);
    const auto rep = dirichlet_checklist(shifted(green_field(cfg), 1.0, 0.1), cfg, WeightVector{1, 1}, quick());
    CHECK_FALSE(rep.passed());
    CHECK(rep.check("boundary").status == CheckStatus::Fail);
    CHECK_FALSE(rep.check("boundary").witnesses.empty());
    CHECK(rep.check("maximality").status == CheckStatus::Pass);
    const auto& pole = rep.check("pole_asymptotics");
    CHECK(pole.status == CheckStatus::Fail);
    CHECK(pole.value < 0.05);
    CHECK(pole.details["poles"][0]["log_bound"] == false);
    CHECK(pole.details["poles"][0]["offset_bounded"] == true);
}

TEST_CASE("halving the function halves the reported weights") {
    const auto cfg = config(2, 1);
    const auto rep = dirichlet_checklist(shifted(green_field(cfg), 0.5, 0.0), cfg, WeightVector{2, 1}, quick());
    CHECK(rep.check("pole_asymptotics").status == CheckStatus::Fail);
    const auto est = rep.check("pole_asymptotics").details["estimated_weights"];
    CHECK(est[0].get<double>() == doctest::Approx(1.0).epsilon(0.02));
    CHECK(est[1].get<double>() == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("decomposition identities and the strict case") {
    const auto cfg = config(2, 1);
    const auto region = quick().region;
    const auto d1 = decomposition_check(cfg, WeightVector{2, 1}, WeightVector{1, 0}, region);
    CHECK(d1.passed());
    CHECK(d1.checks[0].value < 1e-12);
    const auto d2 = decomposition_check(cfg, WeightVector{2, 1}, WeightVector{1, 0.5}, region);
    CHECK(d2.checks[0].value < 1e-12);
    const auto d3 = decomposition_check(cfg, WeightVector{1, 1}, WeightVector{1, 0}, region);
    CHECK(d3.passed());
    CHECK(d3.checks[0].details["same_ordered"] == false);
    REQUIRE_FALSE(d3.checks[0].witnesses.empty());
    CHECK(d3.checks[0].witnesses[0].value > 0.0);
    CHECK_THROWS_AS(decomposition_check(cfg, WeightVector{1, 1}, WeightVector{2, 0}, region), InvalidParameter);
}

TEST_CASE("convexity identity") {
    const auto cfg = config(2, 1);
    const auto region = quick().region;
    const auto c = convexity_check(cfg, WeightVector{3, 1}, WeightVector{1, 1}, 0.3, region);
    CHECK(c.passed());
    CHECK(c.checks[0].value < 1e-12);
    const auto mixed = convexity_check(cfg, WeightVector{2, 1}, WeightVector{1, 2}, 0.5, region);
    CHECK(mixed.checks[0].details["same_ordered"] == false);
    CHECK_THROWS_AS(convexity_check(cfg, WeightVector{2, 1}, WeightVector{1, 1}, 1.5, region), InvalidParameter);
}

TEST_CASE("counterexample report") {
    SolverConfig sc;
    sc.radii = 32;
    sc.angles = 32;
    const auto rep = counterexample_experiment(0.5, -0.5, 0.3, sc);
    CHECK(rep.passed());
    CHECK(rep.check("g_21").value == doctest::Approx(std::log(0.15)).epsilon(1e-15));
    CHECK(rep.check("delta_21_strict").value > 1e-2);
    const auto j = rep.to_json();
    CHECK(j["passed"] == true);
    CHECK(j["checks"]["delta_21_strict"]["details"]["certificate"]["subset"] == nlohmann::json::array({1, 2}));
    CHECK(rep.dump() == counterexample_experiment(0.5, -0.5, 0.3, sc).dump());
    CHECK_THROWS_AS(counterexample_experiment(0.5, -0.5, 0.6, sc), GeometryError);
}

TEST_CASE("report plumbing") {
    VerificationReport rep;
    rep.name = "r";
    rep.checks.push_back({"a", CheckStatus::Skip, 0.0, 1.0, {}, {}});
    CHECK(rep.passed());
    rep.checks.push_back({"b", CheckStatus::Fail, kNegInf, 1.0, {{ComplexPoint{0.0, 0.1}, 1.0, "x"}}, {}});
    CHECK_FALSE(rep.passed());
    CHECK_THROWS_AS(rep.check("missing"), std::out_of_range);
    const auto j = rep.to_json();
    CHECK(j["checks"]["b"]["value"] == "-inf");
    CHECK(j["checks"]["b"]["witnesses"][0]["point"][1][0] == 0.1);
    CHECK(j["checks"]["a"]["status"] == "skip");
}

TEST_CASE("slice directions stay inside the domain") {
    const auto x = slice_direction(DomainTag::bidisc(), ComplexPoint{0.5, 0.0});
    CHECK(x[0].real() == doctest::Approx(0.49));
    CHECK(x[1].real() == doctest::Approx(0.98));
    const auto y = slice_direction(DomainTag::unit_ball(2), ComplexPoint{0.5, 0.0});
    CHECK(in_domain(DomainTag::unit_ball(2), ComplexPoint{0.5, 0.0} + y));
    CHECK_THROWS_AS(slice_direction(DomainTag::bidisc(), ComplexPoint{1.0, 0.0}), DomainViolation);
}
