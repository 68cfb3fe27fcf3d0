#include "plurigreen/monge_ampere.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <Eigen/Dense>

#include "plurigreen/errors.hpp"
#include "plurigreen/parallel.hpp"

namespace plurigreen {

namespace {

using RealHessian = Eigen::Matrix4d;

ComplexPoint shifted(const ComplexPoint& z, int k, double dk, int l = -1, double dl = 0.0) {
    ComplexPoint p = z;
    auto bump = [&p](int coord, double d) {
        const auto c = static_cast<std::size_t>(coord / 2);
        p[c] += (coord % 2 == 0) ? Complex(d, 0.0) : Complex(0.0, d);
    };
    bump(k, dk);
    if (l >= 0) bump(l, dl);
    return p;
}

double checked(const ScalarField& u, const ComplexPoint& p) {
    const double v = u(p);
    if (!std::isfinite(v)) throw SingularStencil("stencil touches a singular value at " + to_string(p));
    return v;
}

RealHessian real_hessian(const ScalarField& u, const ComplexPoint& z, double h) {
    if (z.size() != 2) throw DimensionMismatch("Monge-Ampere operator is implemented on C^2");
    if (!(h > 0.0)) throw InvalidParameter("finite-difference step must be positive");
    RealHessian d;
    const double u0 = checked(u, z);
    for (int k = 0; k < 4; ++k) {
        d(k, k) = (checked(u, shifted(z, k, h)) - 2.0 * u0 + checked(u, shifted(z, k, -h))) / (h * h);
        for (int l = k + 1; l < 4; ++l) {
            const double v = (checked(u, shifted(z, k, h, l, h)) - checked(u, shifted(z, k, h, l, -h)) -
                              checked(u, shifted(z, k, -h, l, h)) + checked(u, shifted(z, k, -h, l, -h))) /
                             (4.0 * h * h);
            d(k, l) = v;
            d(l, k) = v;
        }
    }
    return d;
}

// d^2/dz_i dzbar_j = (D_{x_i x_j} + D_{y_i y_j} + i (D_{x_i y_j} - D_{y_i x_j})) / 4
ComplexHessian assemble(const RealHessian& d) {
    ComplexHessian hc;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const int xi = 2 * i, yi = 2 * i + 1, xj = 2 * j, yj = 2 * j + 1;
            hc(i, j) = 0.25 * Complex(d(xi, xj) + d(yi, yj), d(xi, yj) - d(yi, xj));
        }
    }
    return 0.5 * (hc + hc.adjoint());
}

double hermitian_det(const ComplexHessian& hc) { return (hc(0, 0) * hc(1, 1) - hc(0, 1) * hc(1, 0)).real(); }

double normalized_from(const RealHessian& d) {
    const double s = d.norm() / 4.0;
    if (s == 0.0) return 0.0;
    return hermitian_det(assemble(d)) / (s * s);
}

}  // namespace

ComplexHessian complex_hessian(const ScalarField& u, const ComplexPoint& z, double h) {
    return assemble(real_hessian(u, z, h));
}

double ma_det(const ScalarField& u, const ComplexPoint& z, double h) { return hermitian_det(complex_hessian(u, z, h)); }

double normalized_ma_det(const ScalarField& u, const ComplexPoint& z, double h) {
    return normalized_from(real_hessian(u, z, h));
}

void GridRegion::validate() const {
    if (center.size() != 2) throw DimensionMismatch("grid regions live in C^2");
    if (!(step > 0.0)) throw InvalidParameter("grid step must be positive");
    for (double w : half_widths) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidParameter("half-widths must be finite and >= 0");
    }
    for (const auto& e : exclusions) {
        if (e.center.size() != 2) throw DimensionMismatch("exclusion centres live in C^2");
        if (!(e.radius >= 0.0)) throw InvalidParameter("exclusion radius must be >= 0");
    }
}

std::array<std::size_t, 4> GridRegion::counts() const {
    std::array<std::size_t, 4> n{};
    for (int k = 0; k < 4; ++k) {
        n[k] = 2 * static_cast<std::size_t>(std::floor(half_widths[k] / step + 1e-9)) + 1;
    }
    return n;
}

std::size_t GridRegion::size() const {
    const auto n = counts();
    return n[0] * n[1] * n[2] * n[3];
}

ComplexPoint GridRegion::point(std::size_t index) const {
    const auto n = counts();
    std::array<double, 4> offset{};
    for (int k = 3; k >= 0; --k) {
        const auto i = static_cast<double>(index % n[k]);
        index /= n[k];
        offset[k] = (i - static_cast<double>(n[k] / 2)) * step;
    }
    return ComplexPoint{center[0] + Complex(offset[0], offset[1]), center[1] + Complex(offset[2], offset[3])};
}

bool GridRegion::excluded(const ComplexPoint& z) const {
    return std::any_of(exclusions.begin(), exclusions.end(),
                       [&z](const Exclusion& e) { return (z - e.center).norm() < e.radius; });
}

bool GridRegion::inside(const DomainTag& domain) const {
    const auto n = counts();
    for (int mask = 0; mask < 16; ++mask) {
        std::array<double, 4> offset{};
        for (int k = 0; k < 4; ++k) {
            const double reach = static_cast<double>(n[k] / 2) * step;
            offset[k] = (mask >> k) & 1 ? reach : -reach;
        }
        const ComplexPoint corner{center[0] + Complex(offset[0], offset[1]), center[1] + Complex(offset[2], offset[3])};
        if (!in_domain(domain, corner)) return false;
    }
    return true;
}

Field control_field() {
    Field f;
    f.value = [](const ComplexPoint& z) { return std::norm(z[0]) + std::norm(z[1]); };
    return f;
}

namespace {

// Gap below margin * h scaled by the gap's own slope, so steep branches near poles are caught too.
bool near_branch_crossing(const Field& u, const ComplexPoint& z, const ScanOptions& opts) {
    const double h = opts.fd_step;
    const double gap = u.branch_gap(z);
    double slope = 1.0;
    for (int k = 0; k < 4; ++k) {
        for (double d : {h, -h}) slope = std::max(slope, std::abs(u.branch_gap(shifted(z, k, d)) - gap) / h);
    }
    return !(gap >= opts.branch_margin * h * slope);
}

ScanPoint evaluate_point(const Field& u, const GridRegion& region, const ScanOptions& opts, std::size_t index) {
    ScanPoint p;
    p.z = region.point(index);
    if (region.excluded(p.z)) {
        p.status = PointStatus::Excluded;
        return p;
    }
    if (u.branch_gap && near_branch_crossing(u, p.z, opts)) {
        p.status = PointStatus::BranchCrossing;
        return p;
    }
    try {
        p.det = normalized_ma_det(u.value, p.z, opts.fd_step);
        p.det_half = normalized_ma_det(u.value, p.z, 0.5 * opts.fd_step);
    } catch (const SingularStencil&) {
        p.status = PointStatus::Singular;
    }
    return p;
}

std::vector<ScanPoint> collect(const Field& u, const GridRegion& region, const ScanOptions& opts, bool use_threads) {
    region.validate();
    if (!(opts.fd_step > 0.0)) throw InvalidParameter("finite-difference step must be positive");
    std::vector<ScanPoint> points(region.size());
    const auto n = static_cast<std::int64_t>(points.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64) num_threads(parallel::num_threads()) if (use_threads)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            points[static_cast<std::size_t>(i)] = evaluate_point(u, region, opts, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(plurigreen_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return points;
}

MaximalityReport summarize(const std::vector<ScanPoint>& points, const GridRegion& region, const ScanOptions& opts) {
    MaximalityReport rep;
    rep.fd_step = opts.fd_step;
    rep.control_value = normalized_ma_det(control_field().value, region.center, opts.fd_step);
    rep.threshold = opts.constant * opts.fd_step * opts.fd_step * rep.control_value;
    rep.total_points = points.size();

    std::vector<double> magnitudes;
    for (const auto& p : points) {
        switch (p.status) {
            case PointStatus::Excluded: ++rep.excluded_points; continue;
            case PointStatus::BranchCrossing: ++rep.branch_skipped_points; continue;
            case PointStatus::Singular: ++rep.singular_points; continue;
            case PointStatus::Used: break;
        }
        ++rep.used_points;
        magnitudes.push_back(std::abs(p.det));
        rep.max_abs_det = std::max(rep.max_abs_det, std::abs(p.det));
        rep.max_abs_det_half = std::max(rep.max_abs_det_half, std::abs(p.det_half));
        if (std::abs(p.det) > rep.threshold && rep.violations.size() < opts.max_witnesses) rep.violations.push_back(p);
    }
    if (magnitudes.empty()) throw EmptyGrid("no grid point left after exclusions and branch skips");
    std::sort(magnitudes.begin(), magnitudes.end());
    const double qs[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 5; ++i) {
        rep.quantiles[i] = magnitudes[static_cast<std::size_t>(std::lround(qs[i] * (magnitudes.size() - 1)))];
    }
    rep.pass = rep.max_abs_det <= rep.threshold;
    return rep;
}

}  // namespace

std::vector<ScanPoint> scan_points(const Field& u, const GridRegion& region, const ScanOptions& opts) {
    return collect(u, region, opts, true);
}

std::vector<ScanPoint> scan_points_serial(const Field& u, const GridRegion& region, const ScanOptions& opts) {
    return collect(u, region, opts, false);
}

MaximalityReport maximality_scan(const Field& u, const GridRegion& region, const ScanOptions& opts) {
    return summarize(scan_points(u, region, opts), region, opts);
}

MaximalityReport maximality_scan_serial(const Field& u, const GridRegion& region, const ScanOptions& opts) {
    return summarize(scan_points_serial(u, region, opts), region, opts);
}

}  // namespace plurigreen
