#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "plurigreen/errors.hpp"
#include "plurigreen/pick.hpp"

using namespace plurigreen;

TEST_CASE("pick matrix entries") {
    const PickProblem p({{0.0, 0.3}, {Complex(0.5, 0.1), Complex(0.0, -0.4)}});
    const auto m = pick_matrix(p);
    CHECK(m.rows() == 2);
    CHECK(std::abs(m(0, 0) - Complex(1.0 - 0.09, 0.0)) < 1e-15);
    const Complex expected = (1.0 - Complex(0.0, -0.4) * std::conj(Complex(0.3, 0.0))) /
                             (1.0 - Complex(0.5, 0.1) * std::conj(Complex(0.0, 0.0)));
    CHECK(std::abs(m(1, 0) - expected) < 1e-15);
    CHECK(std::abs(m(0, 1) - std::conj(m(1, 0))) < 1e-15);
}

TEST_CASE("a single datum is always feasible") {
    const auto v = pick_feasible(PickProblem({{0.0, Complex(0.3, 0.4)}}));
    CHECK(v.feasible);
    CHECK(v.min_eigenvalue == doctest::Approx(0.75));
}

TEST_CASE("two-point data obey the Schwarz lemma") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> r(0.01, 0.99), t(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 2000; ++i) {
        const Complex zeta = std::polar(r(rng), t(rng));
        const Complex a = std::polar(r(rng), t(rng));
        const auto v = pick_feasible(PickProblem({{0.0, 0.0}, {zeta, a}}));
        if (std::abs(std::abs(a) - std::abs(zeta)) > 1e-8) CHECK(v.feasible == (std::abs(a) <= std::abs(zeta)));
    }
}

TEST_CASE("three-point vanishing data: feasible iff |gamma| <= |zeta_1 zeta_2|") {
    // A map vanishing at zeta_1, zeta_2 is c b_{zeta_1} b_{zeta_2} with |c| <= 1, so f(0) = gamma
    // forces |c| = |gamma| / |zeta_1 zeta_2|.
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> r(0.05, 0.95), t(0.0, 2.0 * std::numbers::pi);
    int tested = 0;
    for (int i = 0; i < 2000; ++i) {
        const Complex z1 = std::polar(r(rng), t(rng)), z2 = std::polar(r(rng), t(rng));
        if (std::abs(z1 - z2) < 0.05) continue;
        const Complex gamma = std::polar(r(rng), t(rng));
        const double bound = std::abs(z1 * z2);
        if (std::abs(std::abs(gamma) - bound) < 1e-6) continue;
        const auto v = pick_feasible(PickProblem({{0.0, gamma}, {z1, 0.0}, {z2, 0.0}}));
        CHECK(v.feasible == (std::abs(gamma) <= bound));
        ++tested;
    }
    CHECK(tested > 1000);
}

TEST_CASE("unchecked eigenvalue agrees with the checked path") {
    const std::vector<Complex> nodes = {0.0, Complex(0.5, 0.2), Complex(-0.3, 0.6)};
    const std::vector<Complex> targets = {0.1, Complex(0.3, -0.3), 0.0};
    std::vector<PickDatum> data;
    for (std::size_t i = 0; i < nodes.size(); ++i) data.push_back({nodes[i], targets[i]});
    CHECK(pick_min_eigenvalue(nodes, targets) ==
          doctest::Approx(pick_feasible(PickProblem(data)).min_eigenvalue).epsilon(1e-13));
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(PickProblem({}), InvalidParameter);
    CHECK_THROWS_AS(PickProblem({{0.5, 0.0}, {0.5, 0.1}}), InvalidParameter);
    CHECK_THROWS_AS(PickProblem({{1.0, 0.0}}), InvalidParameter);
    CHECK_THROWS_AS(PickProblem({{0.0, 1.5}}), InvalidParameter);
    CHECK_THROWS_AS(pick_feasible(PickProblem({{0.0, 0.0}}), -1.0), InvalidParameter);
}
