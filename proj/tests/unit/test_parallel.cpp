#include <doctest.h>

#include <cstdlib>

#include "plurigreen/lempert.hpp"
#include "plurigreen/parallel.hpp"

using namespace plurigreen;

TEST_CASE("thread count: override, environment, default") {
    parallel::set_num_threads(3);
    CHECK(parallel::num_threads() == 3);
    parallel::set_num_threads(0);
    setenv(parallel::kThreadsEnv, "2", 1);
    CHECK(parallel::num_threads() == 2);
    unsetenv(parallel::kThreadsEnv);
    CHECK(parallel::num_threads() >= 1);
}

TEST_CASE("Lempert grid kernel: parallel equals serial bitwise") {
    const std::vector<Complex> a = {0.5, -0.5};
    const auto cfg = PoleConfiguration::bidisc_axis(a);
    const std::vector<std::size_t> both = {0, 1};
    SolverConfig sc;
    sc.radii = 24;
    sc.angles = 24;
    const ComplexPoint z{0.0, 0.3};
    const auto serial = lempert_grid_values_serial(z, cfg, WeightVector{2, 1}, both, sc);
    for (int threads : {1, 2, 3, 8}) {
        parallel::set_num_threads(threads);
        const auto par = lempert_grid_values(z, cfg, WeightVector{2, 1}, both, sc);
        CHECK(par == serial);
    }
    parallel::set_num_threads(0);
}

TEST_CASE("solver output does not depend on the thread count") {
    const std::vector<Complex> a = {0.5, -0.5};
    const auto cfg = PoleConfiguration::bidisc_axis(a);
    SolverConfig sc;
    sc.radii = 24;
    sc.angles = 24;
    parallel::set_num_threads(1);
    const auto one = lempert_subset_min(ComplexPoint{0.0, 0.3}, cfg, WeightVector{2, 1}, sc);
    parallel::set_num_threads(4);
    const auto four = lempert_subset_min(ComplexPoint{0.0, 0.3}, cfg, WeightVector{2, 1}, sc);
    parallel::set_num_threads(0);
    CHECK(one.value == four.value);
    CHECK(one.best_nodes == four.best_nodes);
    CHECK(one.subset == four.subset);
}
