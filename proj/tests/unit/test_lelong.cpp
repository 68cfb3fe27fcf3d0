#include <doctest.h>

#include <cmath>

#include "plurigreen/errors.hpp"
#include "plurigreen/green.hpp"
#include "plurigreen/lelong.hpp"
#include "plurigreen/section3.hpp"
#include "plurigreen/verify.hpp"

using namespace plurigreen;

namespace {

double log_norm(const ComplexPoint& z) { return std::log(z.norm()); }

}  // namespace

TEST_CASE("psi of log|z| matches its closed form") {
    const ComplexPoint z{0.3, Complex(0.0, 0.4)};
    for (double r : {0.5, 0.1, 1e-3}) {
        CHECK(psi(log_norm, z, r) == doctest::Approx(1.0 + std::log(0.5) / std::log(r)).epsilon(1e-12));
    }
}

TEST_CASE("lelong estimate of log|z| and its multiples") {
    const ComplexPoint z{0.6, 0.0};
    const auto radii = default_radii();
    const auto e = lelong_estimate(log_norm, z, radii);
    CHECK(std::abs(e.alpha - 1.0) < std::abs(std::log(0.6)) / std::abs(std::log(radii.back())) + 1e-12);
    CHECK(e.monotone_ok);
    const auto e3 = lelong_estimate([](const ComplexPoint& w) { return 3.0 * std::log(w.norm()); }, z, radii);
    CHECK(e3.alpha == doctest::Approx(3.0 * e.alpha).epsilon(1e-12));
}

TEST_CASE("log|z| with a unit direction gives exactly one") {
    const auto e = lelong_estimate(log_norm, ComplexPoint{1.0, 0.0}, default_radii());
    CHECK(std::abs(e.alpha - 1.0) < 1e-12);
}

TEST_CASE("bounded functions have Lelong number zero") {
    const auto e = lelong_estimate([](const ComplexPoint& w) { return section3_u(w); }, ComplexPoint{0.5, 0.5},
                                   default_radii());
    CHECK(std::abs(e.alpha) < 0.05);
    CHECK(e.monotone_ok);
}

TEST_CASE("Green function Lelong numbers equal the weights") {
    const std::vector<Complex> a = {0.5, -0.5};
    for (const std::vector<double>& w : {std::vector<double>{1, 1}, {2, 1}, {1, 3}}) {
        const auto cfg = PoleConfiguration::bidisc_axis(a, w);
        const auto g = green_field(cfg);
        for (std::size_t j = 0; j < 2; ++j) {
            const auto& c = cfg.poles()[j].location;
            const auto dir = slice_direction(cfg.domain(), c);
            const auto u = recentered(g.value, c);
            const auto e = lelong_estimate(u, dir, default_radii());
            CHECK(std::abs(e.alpha - w[j]) <= 0.02 * w[j]);
            CHECK(e.monotone_ok);
            CHECK(log_bound_check(u, dir, w[j], default_radii()));
        }
    }
}

TEST_CASE("additivity in the limit") {
    const std::vector<Complex> a = {0.5, -0.5};
    const auto g1 = green_field(PoleConfiguration::bidisc_axis(a));
    const auto c = ComplexPoint{0.5, 0.0};
    const auto dir = slice_direction(DomainTag::bidisc(), c);
    const auto u = recentered(g1.value, c);
    const auto v = recentered([](const ComplexPoint& z) { return log_abs(z[0] - 0.5); }, c);
    const auto uv = [&](const ComplexPoint& z) { return u(z) + v(z); };
    const double au = lelong_estimate(u, dir, default_radii()).alpha;
    const double av = lelong_estimate(v, dir, default_radii()).alpha;
    const double auv = lelong_estimate(uv, dir, default_radii()).alpha;
    CHECK(std::abs(auv - (au + av)) <= 0.05 * (au + av));
}

TEST_CASE("log bound fails for too large alpha") {
    const std::vector<double> moduli = {0.9, 0.5, 0.1};
    const auto u = [](const ComplexPoint& z) { return std::log(z.norm()); };
    CHECK(log_bound_check(u, ComplexPoint{0.9, 0.0}, 1.0, moduli));
    CHECK_FALSE(log_bound_check(u, ComplexPoint{0.9, 0.0}, 1.5, moduli));
}

TEST_CASE("Psi is non-increasing as r decreases") {
    const std::vector<Complex> a = {0.5, -0.5};
    const std::vector<double> w = {2, 1};
    const auto g = green_field(PoleConfiguration::bidisc_axis(a, w));
    const ComplexPoint c{-0.5, 0.0};
    RadialScan scan(slice_direction(DomainTag::bidisc(), c), default_radii());
    const auto e = lelong_estimate(recentered(g.value, c), scan);
    REQUIRE(scan.values.size() == scan.radii.size());
    for (std::size_t i = 1; i < scan.values.size(); ++i) {
        CHECK(scan.values[i] <= scan.values[i - 1] + sampling_tolerance(scan.samples, scan.values[i - 1]));
    }
    CHECK(e.monotone_ok);
    CHECK(e.radius == scan.radii.back());
}

TEST_CASE("scan validation and degenerate slices") {
    CHECK_THROWS_AS(RadialScan(ComplexPoint{1.0, 0.0}, {0.1, 0.2}), InvalidParameter);
    CHECK_THROWS_AS(RadialScan(ComplexPoint{1.0, 0.0}, {1.0, 0.5}), InvalidParameter);
    CHECK_THROWS_AS(RadialScan(ComplexPoint{1.0, 0.0}, {0.5}, 8), InvalidParameter);
    CHECK_THROWS_AS(psi(log_norm, ComplexPoint{1.0, 0.0}, 1.5), InvalidParameter);
    CHECK_THROWS_AS(psi([](const ComplexPoint&) { return kNegInf; }, ComplexPoint{1.0, 0.0}, 0.5), DegenerateSlice);
}
