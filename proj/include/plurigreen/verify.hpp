#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/field.hpp"
#include "plurigreen/green.hpp"
#include "plurigreen/lempert.hpp"
#include "plurigreen/lelong.hpp"
#include "plurigreen/monge_ampere.hpp"

namespace plurigreen {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct Witness {
    ComplexPoint point;
    double value = 0.0;
    std::string note;
};

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    double value = 0.0;
    double tolerance = 0.0;
    std::vector<Witness> witnesses;
    nlohmann::json details = nlohmann::json::object();
};

struct VerificationReport {
    std::string name;
    std::vector<Check> checks;
    nlohmann::json config = nlohmann::json::object();

    /// No check failed.
    bool passed() const;
    /// Throws std::out_of_range for unknown names.
    const Check& check(const std::string& name) const;
    nlohmann::json to_json() const;
    /// Two-space indented JSON with a trailing newline.
    std::string dump() const;
};

/// JSON number, or the strings "inf" / "-inf" / "nan".
nlohmann::json json_number(double x);
nlohmann::json json_point(const ComplexPoint& z);

/// Direction x with center + xi x in the domain for |xi| < 1: each coordinate
/// fraction * (1 - |center_k|) on product domains, fraction * (1 - |center|) / sqrt(n) on the ball.
ComplexPoint slice_direction(const DomainTag& domain, const ComplexPoint& center, double fraction = 0.98);

struct ChecklistOptions {
    GridRegion region;                  ///< maximality and continuity grid (poles excluded automatically)
    ScanOptions scan;
    double pole_exclusion = 0.05;
    double continuity_scale = 1e-3;     ///< oscillation compared at this scale and half of it
    double slice_fraction = 0.98;       ///< slice direction at each pole, see slice_direction
    std::vector<double> lelong_radii = default_radii();
    double pole_tolerance = 0.05;       ///< relative error allowed on each Lelong number
    double boundary_modulus = 0.999;
    double boundary_tolerance = 0.05;
    int boundary_samples = 48;

    /// Grid spanning the bidisc at step 0.1 with half-width 0.6 in every real coordinate.
    static ChecklistOptions bidisc_default();
};

/// The four conditions characterizing g as the solution of a Dirichlet problem:
/// continuity (oscillation on 3-point stencils shrinks with the scale), maximality
/// off the poles, logarithmic poles of weight nu_j, and |candidate| -> 0 at the boundary.
/// Product domains on C^2 only.
VerificationReport dirichlet_checklist(const Field& candidate, const PoleConfiguration& cfg, const WeightVector& nu,
                                       const ChecklistOptions& opts = ChecklistOptions::bidisc_default());

/// Points of `region` inside the domain and off every pole.
std::vector<ComplexPoint> sample_points(const PoleConfiguration& cfg, const GridRegion& region);

/// g_nu against g_lambda + g_{nu - lambda}. Same-ordered triples must agree to 1e-12;
/// otherwise the check records the first point where the sum is strictly smaller.
/// Throws InvalidParameter unless lambda <= nu.
VerificationReport decomposition_check(const PoleConfiguration& cfg, const WeightVector& nu, const WeightVector& lambda,
                                       const GridRegion& region);

/// a g_mu + (1 - a) g_lambda against g_{a mu + (1 - a) lambda}, a in [0, 1].
VerificationReport convexity_check(const PoleConfiguration& cfg, const WeightVector& mu, const WeightVector& lambda,
                                   double a, const GridRegion& region);

inline constexpr double kEqualityTolerance = 1e-4;

/// Two poles (a, 0), (b, 0) and the point (0, gamma) in the bidisc: closed forms,
/// the explicit disc, delta_{1,1}, delta_{1,0}, and the strict gap delta_{2,1} > g_{2,1}
/// at the given and the doubled resolution. Throws GeometryError for bad geometry.
VerificationReport counterexample_experiment(Complex a, Complex b, Complex gamma, const SolverConfig& sc = {});

}  // namespace plurigreen
