#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/field.hpp"

namespace plurigreen {

using ComplexHessian = Eigen::Matrix2cd;

inline constexpr double kDefaultFdStep = 1e-3;

/// A grid point counts as maximal when its normalized determinant is at most
/// kMaximalityConstant * h^2 * (normalized determinant of |z_1|^2 + |z_2|^2).
inline constexpr double kMaximalityConstant = 100.0;

/// [d^2 u / dz_i dzbar_j] on C^2 from centred second differences in the four
/// real coordinates (x_1, y_1, x_2, y_2). Hermitian by construction.
/// Throws SingularStencil if any stencil value is -inf or NaN.
ComplexHessian complex_hessian(const ScalarField& u, const ComplexPoint& z, double h);

/// Determinant of complex_hessian.
double ma_det(const ScalarField& u, const ComplexPoint& z, double h);

/// ma_det divided by (|D^2 u|_F / 4)^2, D^2 u the real 4x4 Hessian.
/// Scale-free; equals 1 for |z_1|^2 + |z_2|^2 and 0 when u is maximal.
double normalized_ma_det(const ScalarField& u, const ComplexPoint& z, double h);

struct Exclusion {
    ComplexPoint center;
    double radius = 0.0;
};

/// Rectangular sample of C^2: center + step * (i_1, ..., i_4) with |i_k| step <= half_widths[k]
/// over the real coordinates (Re z_1, Im z_1, Re z_2, Im z_2).
struct GridRegion {
    ComplexPoint center{0.0, 0.0};
    std::array<double, 4> half_widths{};
    double step = 0.1;
    std::vector<Exclusion> exclusions;

    void validate() const;
    std::array<std::size_t, 4> counts() const;
    std::size_t size() const;
    /// Lexicographic in (i_1, i_2, i_3, i_4), i_1 slowest.
    ComplexPoint point(std::size_t index) const;
    bool excluded(const ComplexPoint& z) const;
    /// Every corner of the box lies in the open domain (the domains are convex).
    bool inside(const DomainTag& domain) const;
};

struct ScanOptions {
    double fd_step = kDefaultFdStep;
    double branch_margin = 10.0;    ///< skip points whose branch gap is below branch_margin * fd_step * max(1, gap slope)
    double constant = kMaximalityConstant;
    std::size_t max_witnesses = 16;
};

enum class PointStatus { Used, Excluded, BranchCrossing, Singular };

struct ScanPoint {
    ComplexPoint z;
    PointStatus status = PointStatus::Used;
    double det = 0.0;        ///< normalized determinant at fd_step
    double det_half = 0.0;   ///< same at fd_step / 2
};

struct MaximalityReport {
    double fd_step = 0.0;
    double control_value = 0.0;
    double threshold = 0.0;
    double max_abs_det = 0.0;
    double max_abs_det_half = 0.0;
    std::array<double, 5> quantiles{};   ///< min, 25%, median, 75%, max of |det|
    std::size_t total_points = 0;
    std::size_t used_points = 0;
    std::size_t excluded_points = 0;
    std::size_t branch_skipped_points = 0;
    std::size_t singular_points = 0;
    std::vector<ScanPoint> violations;   ///< first offenders in grid order
    bool pass = false;
};

/// Per-point normalized determinants in grid order (parallel kernel).
std::vector<ScanPoint> scan_points(const Field& u, const GridRegion& region, const ScanOptions& opts = {});
/// Single-threaded reference for scan_points.
std::vector<ScanPoint> scan_points_serial(const Field& u, const GridRegion& region, const ScanOptions& opts = {});

/// Normalized Monge-Ampere determinant over the region; passes iff every used
/// point satisfies |det| <= constant * h^2 * control. Throws EmptyGrid when
/// exclusions and branch skips leave nothing.
MaximalityReport maximality_scan(const Field& u, const GridRegion& region, const ScanOptions& opts = {});
MaximalityReport maximality_scan_serial(const Field& u, const GridRegion& region, const ScanOptions& opts = {});

/// |z_1|^2 + |z_2|^2
Field control_field();

}  // namespace plurigreen
