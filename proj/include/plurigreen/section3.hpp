#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/field.hpp"

namespace plurigreen {

/// max(log |z|, -1) on the unit ball of C^n. Throws DomainViolation for |z| >= 1.
double section3_u(const ComplexPoint& z);

/// Fourier data of v on the circle |xi| = 1/e, used to build the harmonic
/// function H_t on the annulus t < |w| < e t.
struct AnnulusSolution {
    double t = 0.0;
    int truncation = 32;
    std::vector<Complex> coefficients;   ///< c_{-N}, ..., c_N

    /// c_n for |n| <= truncation, zero beyond.
    Complex coefficient(int n) const;
    void validate() const;
};

inline constexpr int kDefaultTruncation = 32;
inline constexpr int kDefaultQuadrature = 1024;

/// c_n = (1/2pi) int v(e^{-1+is}) e^{-ins} ds by the trapezoid rule.
AnnulusSolution annulus_from_boundary(const std::function<double(Complex)>& v, double t,
                                      int truncation = kDefaultTruncation, int quadrature = kDefaultQuadrature);

/// -c_0 log|w/(et)| + sum_{n=1}^N (c_n (ew)^n + c_{-n} (e conj w)^n) ((et/|w|)^{2n} - 1) / (e^{2n} - 1),
/// real part. Requires t <= |w| <= e t up to rounding; throws DomainViolation otherwise.
double annulus_solution(const AnnulusSolution& sol, Complex w);

/// sum_{n=-N}^{N} c_n (e r)^{|n|} e^{i n theta}: the truncated Fourier synthesis at w = r e^{i theta}.
double fourier_synthesis(const AnnulusSolution& sol, Complex w);

/// Estimate of sum_{|n| > N} |c_n| e^{|n|} from geometric decay of the last
/// coefficients, floored at 1e-12.
double truncation_tolerance(const AnnulusSolution& sol);

/// Polynomial g(zeta) = sum_k coeffs[k] zeta^k.
Complex polynomial_value(std::span<const Complex> coeffs, Complex zeta);

/// -|conj(w_1) (D_1 + D_2 conj(w_2)(1 + |w_1|^2))|^2 with D_1 = g', D_2 = g''
/// taken at conj(w_2)(1 + |w_1|^2).
double section3_hessian_det(std::span<const Complex> g_coeffs, const ComplexPoint& w);

/// 2 Re g(conj(w_2)(1 + |w_1|^2)) on C^2.
Field section3_htilde(std::vector<Complex> g_coeffs);

struct SliceHarmonicityReport {
    double step = 0.0;
    double max_abs_laplacian = 0.0;
    double threshold = 0.0;
    std::size_t points = 0;
    ComplexPoint witness;
    bool pass = false;
};

inline constexpr double kSliceConstant = 25.0;

/// Five-point Laplacian of xi -> u(xi z) at xi, step h.
double slice_laplacian(const ScalarField& u, const ComplexPoint& z, Complex xi, double h);

/// Samples xi z with |z| = 1 and inner < |xi| < outer (kept 4h away from both circles)
/// on each line through 0 spanned by a direction, and compares the slice Laplacian against kSliceConstant * h^2 * 4,
/// 4 being the slice Laplacian of |xi|^2.
SliceHarmonicityReport slice_harmonicity(const ScalarField& u, std::span<const ComplexPoint> directions,
                                         double inner, double outer, double h = 1e-3, int radial = 16,
                                         int angular = 32);

}  // namespace plurigreen
