#include "plurigreen/lelong.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plurigreen/errors.hpp"
#include "plurigreen/parallel.hpp"

namespace plurigreen {

namespace {

// sup of u(xi z) over `samples` points of |xi| = r
double circle_sup(const ScalarField& u, const ComplexPoint& z, double r, int samples) {
    double sup = kNegInf;
#pragma omp parallel for reduction(max : sup) num_threads(parallel::num_threads()) if (samples >= 4096)
    for (int k = 0; k < samples; ++k) {
        const Complex xi = std::polar(r, 2.0 * std::numbers::pi * k / samples);
        sup = std::max(sup, u(xi * z));
    }
    return sup;
}

}  // namespace

double psi(const ScalarField& u, const ComplexPoint& z, double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw InvalidParameter("psi: radius must lie in (0, 1)");
    if (samples < 1) throw InvalidParameter("psi: need at least one sample");
    const double sup = circle_sup(u, z, r, samples);
    if (sup == kNegInf) throw DegenerateSlice("u is -inf on every sample of the circle |xi| = r");
    return sup / std::log(r);
}

RadialScan::RadialScan(ComplexPoint direction_, std::vector<double> radii_, int samples_)
    : direction(std::move(direction_)), radii(std::move(radii_)), samples(samples_) {
    if (samples < 16) throw InvalidParameter("radial scan needs at least 16 samples per circle");
    if (radii.empty()) throw InvalidParameter("radial scan needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw InvalidParameter("scan radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] < radii[i - 1])) throw InvalidParameter("scan radii must be strictly decreasing");
    }
}

std::vector<double> default_radii() {
    std::vector<double> r;
    for (int k = 1; k <= 12; ++k) r.push_back(std::pow(10.0, -k));
    return r;
}

double sampling_tolerance(int samples, double psi_value) {
    const double h = std::numbers::pi / samples;
    return 10.0 * h * h * std::max(1.0, std::abs(psi_value));
}

LelongEstimate lelong_estimate(const ScalarField& u, RadialScan& scan) {
    scan.values.clear();
    for (double r : scan.radii) scan.values.push_back(psi(u, scan.direction, r, scan.samples));
    LelongEstimate est;
    est.values = scan.values;
    est.alpha = scan.values.back();
    est.radius = scan.radii.back();
    est.monotone_ok = true;
    for (std::size_t i = 1; i < scan.values.size(); ++i) {
        if (scan.values[i] > scan.values[i - 1] + sampling_tolerance(scan.samples, scan.values[i - 1])) {
            est.monotone_ok = false;
        }
    }
    return est;
}

LelongEstimate lelong_estimate(const ScalarField& u, const ComplexPoint& direction, std::span<const double> radii,
                               int samples) {
    RadialScan scan(direction, std::vector<double>(radii.begin(), radii.end()), samples);
    return lelong_estimate(u, scan);
}

bool log_bound_check(const ScalarField& u, const ComplexPoint& z, double alpha, std::span<const double> moduli,
                     int samples, double tol) {
    for (double m : moduli) {
        if (!(m > 0.0 && m < 1.0)) throw InvalidParameter("log_bound_check: |xi| must lie in (0, 1)");
        if (circle_sup(u, z, m, samples) > alpha * std::log(m) + tol) return false;
    }
    return true;
}

ScalarField recentered(ScalarField u, ComplexPoint center) {
    return [u = std::move(u), center = std::move(center)](const ComplexPoint& x) { return u(center + x); };
}

}  // namespace plurigreen
