#pragma once

#include <span>
#include <vector>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/field.hpp"

namespace plurigreen {

inline constexpr int kDefaultCircleSamples = 256;

/// Psi_u(z, r) = sup_{|xi| = r} u(xi z) / log r over `samples` equispaced xi.
/// Throws DegenerateSlice when u(xi z) = -inf at every sample.
double psi(const ScalarField& u, const ComplexPoint& z, double r, int samples = kDefaultCircleSamples);

/// Radial scan of Psi_u(z, .) along strictly decreasing radii in (0, 1).
struct RadialScan {
    ComplexPoint direction;
    std::vector<double> radii;
    int samples = kDefaultCircleSamples;
    std::vector<double> values;   ///< filled by lelong_estimate

    RadialScan(ComplexPoint direction, std::vector<double> radii, int samples = kDefaultCircleSamples);
};

/// Radii 10^-1, 10^-2, ..., 10^-12.
std::vector<double> default_radii();

struct LelongEstimate {
    double alpha = 0.0;       ///< Psi at the smallest radius
    double radius = 0.0;      ///< that radius
    bool monotone_ok = false; ///< Psi non-increasing as r decreases, within sampling tolerance
    std::vector<double> values;
};

/// Allowed increase of Psi between consecutive radii: 10 (pi / samples)^2 max(1, |Psi|).
double sampling_tolerance(int samples, double psi_value);

LelongEstimate lelong_estimate(const ScalarField& u, RadialScan& scan);
LelongEstimate lelong_estimate(const ScalarField& u, const ComplexPoint& direction,
                               std::span<const double> radii, int samples = kDefaultCircleSamples);

/// True iff u(xi z) <= alpha log|xi| + tol for every |xi| in `moduli`, sampled on circles.
bool log_bound_check(const ScalarField& u, const ComplexPoint& z, double alpha, std::span<const double> moduli,
                     int samples = kDefaultCircleSamples, double tol = 1e-9);

/// x -> u(center + x).
ScalarField recentered(ScalarField u, ComplexPoint center);

}  // namespace plurigreen
