#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/green.hpp"

namespace plurigreen {

/// Search parameters for the Lempert solver.
struct SolverConfig {
    int radii = 64;                  ///< radial grid points per node
    int angles = 64;                 ///< angular grid points per node
    int keep_best = 32;              ///< grid points handed to local refinement
    double refine_tol = 1e-7;        ///< refinement stops once the step is below this
    int max_refine_iterations = 20000;
    double psd_tol = 1e-10;          ///< Pick matrix counts as PSD when lambda_min >= -psd_tol
    std::uint64_t seed = 0;          ///< orders tie-breaks and poll directions
    std::size_t max_grid_points = std::size_t{1} << 22;

    void validate() const;
    /// Same configuration with both grid resolutions doubled.
    SolverConfig doubled() const;
};

/// z -> rotation * prod mobius(zero_j, z).
struct BlaschkeComponent {
    std::vector<Complex> zeros;
    Complex rotation{1.0, 0.0};

    Complex operator()(Complex zeta) const { return blaschke_eval(zeros, rotation, zeta); }
};

/// Analytic disc D -> closed bidisc together with the nodes it sends to the poles.
struct DiscSpec {
    std::vector<Complex> nodes;
    BlaschkeComponent first;
    BlaschkeComponent second;

    ComplexPoint operator()(Complex zeta) const { return ComplexPoint{first(zeta), second(zeta)}; }
    /// Both components bounded by one on `samples` points of the unit circle.
    bool maps_into_closed_bidisc(int samples = 1024) const;
};

struct LempertResult {
    double value = kPosInf;              ///< +inf: no feasible disc at this resolution
    std::vector<Complex> best_nodes;     ///< one node per pole of `subset`
    std::vector<std::size_t> subset;     ///< 0-based pole indices hit by the disc
    double min_eig_first = std::numeric_limits<double>::quiet_NaN();
    double min_eig_second = std::numeric_limits<double>::quiet_NaN();
    std::size_t grid_points = 0;
    std::size_t feasible_grid_points = 0;

    bool feasible() const { return value < kPosInf; }
};

/// sum nu_j log|zeta_j|; -inf when a node with positive weight is 0.
double disc_objective(std::span<const double> nu, std::span<const Complex> nodes);
double disc_objective(const WeightVector& nu, std::span<const Complex> nodes);

/// Lempert function of the bidisc restricted to discs through the poles in `subset`.
///
/// Minimises sum nu_j log|zeta_j| over nodes zeta_j in D such that both
/// coordinate interpolation problems
///   {(0, z_1)} + {(zeta_j, a_j)}   and   {(0, z_2)} + {(zeta_j, 0)}
/// are Pick-feasible. The result is an upper bound found by a polar grid
/// search plus pattern-search refinement. Rotating every node by the same
/// unimodular factor leaves both problems unchanged, so the first node is
/// searched on the positive real axis only.
LempertResult lempert_bidisc_axis(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                                  std::span<const std::size_t> subset, const SolverConfig& sc = {});

/// Minimum of lempert_bidisc_axis over every non-empty pole subset (k <= 8).
LempertResult lempert_subset_min(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                                 const SolverConfig& sc = {});

/// Objective at every grid point of the search (+inf where infeasible), in index order.
std::vector<double> lempert_grid_values(const ComplexPoint& z, const PoleConfiguration& cfg, const WeightVector& nu,
                                        std::span<const std::size_t> subset, const SolverConfig& sc);
/// Single-threaded reference for lempert_grid_values.
std::vector<double> lempert_grid_values_serial(const ComplexPoint& z, const PoleConfiguration& cfg,
                                               const WeightVector& nu, std::span<const std::size_t> subset,
                                               const SolverConfig& sc);

/// Throws GeometryError unless a, b != 0, a != b, |a|,|b| < 1 and |ab| < |gamma| < min(|a|, |b|).
void check_two_pole_geometry(Complex a, Complex b, Complex gamma);

/// The disc zeta -> (beta zeta, b_{zeta_1}(zeta) b_{zeta_2}(zeta)) with zeta_1^2 = gamma a / b,
/// zeta_2 = gamma / zeta_1, beta = a / zeta_1. It sends 0, zeta_1, zeta_2 to (0, gamma), (a, 0), (b, 0).
DiscSpec explicit_disc(Complex a, Complex b, Complex gamma);

}  // namespace plurigreen
