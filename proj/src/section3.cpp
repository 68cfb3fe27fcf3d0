#include "plurigreen/section3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plurigreen/errors.hpp"

namespace plurigreen {

double section3_u(const ComplexPoint& z) {
    const double r = z.norm();
    if (!(r < 1.0)) throw DomainViolation("section3_u needs |z| < 1, got " + to_string(z));
    return std::max(log_abs(Complex(r, 0.0)), -1.0);
}

Complex AnnulusSolution::coefficient(int n) const {
    if (std::abs(n) > truncation) return {0.0, 0.0};
    return coefficients[static_cast<std::size_t>(n + truncation)];
}

void AnnulusSolution::validate() const {
    if (!(t > 0.0 && t < std::exp(-1.0))) throw InvalidParameter("annulus parameter t must lie in (0, 1/e)");
    if (truncation < 1) throw InvalidParameter("truncation must be >= 1");
    if (coefficients.size() != static_cast<std::size_t>(2 * truncation + 1)) {
        throw DimensionMismatch("expected 2N+1 Fourier coefficients");
    }
}

AnnulusSolution annulus_from_boundary(const std::function<double(Complex)>& v, double t, int truncation,
                                      int quadrature) {
    if (quadrature < 2 * truncation + 2) throw InvalidParameter("quadrature too coarse for the truncation");
    AnnulusSolution sol;
    sol.t = t;
    sol.truncation = truncation;
    sol.coefficients.assign(static_cast<std::size_t>(2 * truncation + 1), Complex(0.0, 0.0));
    const double radius = std::exp(-1.0);
    std::vector<double> samples(static_cast<std::size_t>(quadrature));
    for (int k = 0; k < quadrature; ++k) {
        const double s = 2.0 * std::numbers::pi * k / quadrature;
        samples[static_cast<std::size_t>(k)] = v(std::polar(radius, s));
    }
    for (int n = -truncation; n <= truncation; ++n) {
        Complex acc(0.0, 0.0);
        for (int k = 0; k < quadrature; ++k) {
            const double s = 2.0 * std::numbers::pi * k / quadrature;
            acc += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -n * s);
        }
        sol.coefficients[static_cast<std::size_t>(n + truncation)] = acc / static_cast<double>(quadrature);
    }
    sol.validate();
    return sol;
}

double annulus_solution(const AnnulusSolution& sol, Complex w) {
    sol.validate();
    const double e = std::numbers::e;
    const double r = std::abs(w);
    const double slack = 1e-12 * sol.t;
    if (r < sol.t - slack || r > e * sol.t + slack) {
        throw DomainViolation("annulus_solution needs t <= |w| <= e t");
    }
    double value = -sol.coefficient(0).real() * std::log(r / (e * sol.t));
    const Complex ew = e * w;
    const Complex ewbar = e * std::conj(w);
    Complex pw(1.0, 0.0), pwbar(1.0, 0.0);
    const double ratio = (e * sol.t / r) * (e * sol.t / r);
    double ratio_n = 1.0, e2n = 1.0;
    for (int n = 1; n <= sol.truncation; ++n) {
        pw *= ew;
        pwbar *= ewbar;
        ratio_n *= ratio;
        e2n *= e * e;
        const Complex term = sol.coefficient(n) * pw + sol.coefficient(-n) * pwbar;
        value += term.real() * (ratio_n - 1.0) / (e2n - 1.0);
    }
    return value;
}

double fourier_synthesis(const AnnulusSolution& sol, Complex w) {
    sol.validate();
    const double er = std::numbers::e * std::abs(w);
    const double theta = std::arg(w);
    double value = sol.coefficient(0).real();
    double scale = 1.0;
    for (int n = 1; n <= sol.truncation; ++n) {
        scale *= er;
        value += scale * (sol.coefficient(n) * std::polar(1.0, n * theta) +
                          sol.coefficient(-n) * std::polar(1.0, -n * theta))
                             .real();
    }
    return value;
}

double truncation_tolerance(const AnnulusSolution& sol) {
    sol.validate();
    const int n = sol.truncation;
    double largest = 0.0;
    for (const auto& c : sol.coefficients) largest = std::max(largest, std::abs(c));
    double tail = 0.0;
    for (int sign : {1, -1}) {
        // coefficients at the quadrature noise floor carry no tail
        if (std::abs(sol.coefficient(sign * n)) <= 1e-14 * std::max(largest, 1.0)) continue;
        const double last = std::abs(sol.coefficient(sign * n)) * std::pow(std::numbers::e, n);
        const double previous = std::abs(sol.coefficient(sign * (n - 1))) * std::pow(std::numbers::e, n - 1);
        const double q = previous > 0.0 ? last / previous : 1.0;
        if (q >= 1.0) return std::numeric_limits<double>::infinity();
        tail += last * q / (1.0 - q);
    }
    return std::max(tail, 1e-12);
}

Complex polynomial_value(std::span<const Complex> coeffs, Complex zeta) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * zeta + *it;
    return acc;
}

namespace {

std::vector<Complex> derivative(std::span<const Complex> coeffs) {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.push_back(static_cast<double>(k) * coeffs[k]);
    return d;
}

}  // namespace

double section3_hessian_det(std::span<const Complex> g_coeffs, const ComplexPoint& w) {
    if (w.size() != 2) throw DimensionMismatch("section3_hessian_det works on C^2");
    const auto d1 = derivative(g_coeffs);
    const auto d2 = derivative(d1);
    const Complex p = std::conj(w[1]) * (1.0 + std::norm(w[0]));
    const Complex inner = std::conj(w[0]) * (polynomial_value(d1, p) + polynomial_value(d2, p) * p);
    return -std::norm(inner);
}

Field section3_htilde(std::vector<Complex> g_coeffs) {
    Field f;
    f.value = [g = std::move(g_coeffs)](const ComplexPoint& w) {
        return 2.0 * polynomial_value(g, std::conj(w[1]) * (1.0 + std::norm(w[0]))).real();
    };
    return f;
}

double slice_laplacian(const ScalarField& u, const ComplexPoint& z, Complex xi, double h) {
    if (!(h > 0.0)) throw InvalidParameter("slice step must be positive");
    auto f = [&](Complex s) { return u(s * z); };
    const double centre = f(xi);
    const Complex dx(h, 0.0), dy(0.0, h);
    return (f(xi + dx) + f(xi - dx) + f(xi + dy) + f(xi - dy) - 4.0 * centre) / (h * h);
}

SliceHarmonicityReport slice_harmonicity(const ScalarField& u, std::span<const ComplexPoint> directions,
                                         double inner, double outer, double h, int radial, int angular) {
    if (directions.empty()) throw EmptyGrid("no slice directions");
    if (radial < 1 || angular < 1) throw InvalidParameter("slice sampling counts must be positive");
    SliceHarmonicityReport rep;
    rep.step = h;
    rep.threshold = kSliceConstant * h * h * 4.0;
    for (const auto& raw : directions) {
        const double zn = raw.norm();
        if (!(zn > 0.0)) throw InvalidParameter("slice direction must be nonzero");
        const ComplexPoint z = Complex(1.0 / zn, 0.0) * raw;
        const double lo = inner + 4.0 * h;
        const double hi = outer - 4.0 * h;
        if (!(lo < hi)) throw EmptyGrid("slice annulus thinner than the stencil");
        for (int i = 0; i < radial; ++i) {
            const double rho = lo + (hi - lo) * (i + 0.5) / radial;
            for (int j = 0; j < angular; ++j) {
                const Complex xi = std::polar(rho, 2.0 * std::numbers::pi * j / angular);
                const double lap = std::abs(slice_laplacian(u, z, xi, h));
                ++rep.points;
                if (lap >= rep.max_abs_laplacian) {
                    rep.max_abs_laplacian = lap;
                    rep.witness = xi * z;
                }
            }
        }
    }
    rep.pass = rep.max_abs_laplacian <= rep.threshold;
    return rep;
}

}  // namespace plurigreen
