#include <doctest.h>

#include <cmath>

#include "plurigreen/errors.hpp"
#include "plurigreen/green.hpp"
#include "plurigreen/monge_ampere.hpp"
#include "plurigreen/parallel.hpp"

using namespace plurigreen;

namespace {

const ComplexPoint kPoint{Complex(0.3, -0.2), Complex(-0.4, 0.5)};

double norm2(const ComplexPoint& z) { return std::norm(z[0]) + std::norm(z[1]); }

GridRegion bidisc_region(double half, double step) {
    GridRegion r;
    r.center = ComplexPoint{0.0, 0.0};
    r.half_widths = {half, half, half, half};
    r.step = step;
    return r;
}

void check_matrix(const ComplexHessian& h, const Complex expected[2][2], double tol) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) CHECK(std::abs(h(i, j) - expected[i][j]) < tol);
    }
}

}  // namespace

TEST_CASE("control field has identity Hessian") {
    const Complex id[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
    check_matrix(complex_hessian(norm2, kPoint, 1e-3), id, 1e-8);
    CHECK(ma_det(norm2, kPoint, 1e-3) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(normalized_ma_det(norm2, kPoint, 1e-3) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pluriharmonic fields have zero Hessian") {
    const auto u = [](const ComplexPoint& z) { return (z[0] * z[1]).real(); };
    const Complex zero[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    check_matrix(complex_hessian(u, kPoint, 1e-3), zero, 1e-8);
    CHECK(std::abs(ma_det(u, kPoint, 1e-3)) < 1e-12);
}

TEST_CASE("Hessians match symbolic differentiation") {
    // tests/oracles/hessian_oracle.py at (0.3 - 0.2i, -0.4 + 0.5i)
    const Complex product[2][2] = {{0.41, Complex(-0.22, 0.07)}, {Complex(-0.22, -0.07), 0.13}};
    check_matrix(complex_hessian([](const ComplexPoint& z) { return std::norm(z[0]) * std::norm(z[1]); }, kPoint, 1e-3),
                 product, 1e-8);
    const Complex exp_norm[2][2] = {{1.93908775426889, Complex(-0.3775215096806689, 0.1201204803529401)},
                                    {Complex(-0.3775215096806689, -0.1201204803529401), 2.4195696756806506}};
    check_matrix(complex_hessian([](const ComplexPoint& z) { return std::exp(norm2(z)); }, kPoint, 1e-3), exp_norm,
                 1e-5);
}

TEST_CASE("finite-difference error is second order") {
    const auto u = [](const ComplexPoint& z) { return std::exp(norm2(z)); };
    const double exact = 1.93908775426889 * 2.4195696756806506 -
                         std::norm(Complex(-0.3775215096806689, 0.1201204803529401));
    const double e1 = std::abs(ma_det(u, kPoint, 4e-3) - exact);
    const double e2 = std::abs(ma_det(u, kPoint, 2e-3) - exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("Hessian is Hermitian") {
    const auto u = [](const ComplexPoint& z) { return std::log(1.0 + std::norm(z[0] * z[0] + z[1])) + z[1].real(); };
    const auto h = complex_hessian(u, kPoint, 1e-3);
    CHECK((h - h.adjoint()).norm() == 0.0);
}

TEST_CASE("singular stencils are reported") {
    const auto u = [](const ComplexPoint& z) { return log_abs(z[0]); };
    CHECK_THROWS_AS(complex_hessian(u, ComplexPoint{0.0, 0.3}, 1e-3), SingularStencil);
    CHECK_THROWS_AS(complex_hessian(u, ComplexPoint{0.0}, 1e-3), DimensionMismatch);
    CHECK_THROWS_AS(complex_hessian(u, kPoint, 0.0), InvalidParameter);
}

TEST_CASE("grid region layout") {
    GridRegion r = bidisc_region(0.2, 0.1);
    CHECK(r.counts() == std::array<std::size_t, 4>{5, 5, 5, 5});
    CHECK(r.size() == 625);
    CHECK(r.point(0) == ComplexPoint{Complex(-0.2, -0.2), Complex(-0.2, -0.2)});
    CHECK(r.point(1)[1] == Complex(-0.2, -0.1));
    CHECK(r.point(624) == ComplexPoint{Complex(0.2, 0.2), Complex(0.2, 0.2)});
    CHECK(r.inside(DomainTag::bidisc()));
    CHECK_FALSE(bidisc_region(0.8, 0.1).inside(DomainTag::bidisc()));
    r.exclusions.push_back({ComplexPoint{0.0, 0.0}, 0.05});
    CHECK(r.excluded(ComplexPoint{0.0, 0.0}));
    CHECK_FALSE(r.excluded(ComplexPoint{0.1, 0.0}));
    r.step = 0.0;
    CHECK_THROWS_AS(r.validate(), InvalidParameter);
}

TEST_CASE("maximality scan: Green functions pass, control fails") {
    const std::vector<Complex> a = {0.5, -0.5};
    const std::vector<double> w = {2, 1};
    const auto cfg = PoleConfiguration::bidisc_axis(a, w);
    GridRegion r = bidisc_region(0.6, 0.15);
    for (const auto& p : cfg.poles()) r.exclusions.push_back({p.location, 0.05});

    const auto g21 = maximality_scan(green_field(cfg), r);
    CHECK(g21.pass);
    CHECK(g21.violations.empty());
    CHECK(g21.used_points > 0);
    CHECK(g21.branch_skipped_points > 0);
    CHECK(g21.control_value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(g21.quantiles[4] == g21.max_abs_det);

    const auto g1 = maximality_scan(green_field(PoleConfiguration::bidisc_axis(a)), r);
    CHECK(g1.pass);

    Field log_z1;
    log_z1.value = [](const ComplexPoint& z) { return log_abs(z[0]); };
    const auto l = maximality_scan(log_z1, r);
    CHECK(l.pass);
    CHECK(l.singular_points > 0);

    const auto c = maximality_scan(control_field(), r);
    CHECK_FALSE(c.pass);
    CHECK(c.quantiles[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.violations.size() == ScanOptions{}.max_witnesses);
}

TEST_CASE("rank-one maximal field passes") {
    Field log_norm;
    log_norm.value = [](const ComplexPoint& z) { return std::log(z.norm()); };
    GridRegion r = bidisc_region(0.6, 0.15);
    r.exclusions.push_back({ComplexPoint{0.0, 0.0}, 0.15});
    CHECK(maximality_scan(log_norm, r).pass);
}

TEST_CASE("empty effective grid") {
    GridRegion r = bidisc_region(0.1, 0.1);
    r.exclusions.push_back({ComplexPoint{0.0, 0.0}, 1.0});
    CHECK_THROWS_AS(maximality_scan(control_field(), r), EmptyGrid);
}

TEST_CASE("parallel scan equals the serial reference bitwise") {
    const std::vector<Complex> a = {0.5, -0.5};
    const std::vector<double> w = {2, 1};
    const auto f = green_field(PoleConfiguration::bidisc_axis(a, w));
    GridRegion r = bidisc_region(0.45, 0.15);
    const auto serial = scan_points_serial(f, r);
    for (int threads : {1, 2, 4}) {
        parallel::set_num_threads(threads);
        const auto par = scan_points(f, r);
        REQUIRE(par.size() == serial.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].status == serial[i].status);
            CHECK(par[i].det == serial[i].det);
            CHECK(par[i].det_half == serial[i].det_half);
        }
    }
    parallel::set_num_threads(0);
}

TEST_CASE("field errors inside a scan propagate") {
    Field bad;
    bad.value = [](const ComplexPoint&) -> double { throw DomainViolation("outside"); };
    CHECK_THROWS_AS(maximality_scan(bad, bidisc_region(0.1, 0.1)), DomainViolation);
}
