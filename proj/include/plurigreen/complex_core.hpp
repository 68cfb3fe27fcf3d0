#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace plurigreen {

using Complex = std::complex<double>;

// Extended reals are plain doubles: -inf marks a pole of a Green function,
// +inf marks "no feasible disc". Neither is ever replaced by a large finite value.
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

inline constexpr double kBoundaryEps = 1e-12;

/// coeff * value with the convention 0 * (-inf) = 0.
inline double weighted(double coeff, double value) {
    return coeff == 0.0 ? 0.0 : coeff * value;
}

/// log|z| with log 0 = -inf.
inline double log_abs(Complex z) {
    const double m = std::abs(z);
    return m == 0.0 ? kNegInf : std::log(m);
}

/// A point of C^n.
class ComplexPoint {
public:
    ComplexPoint() = default;
    ComplexPoint(std::initializer_list<Complex> coords) : coords_(coords) {}
    explicit ComplexPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {}
    static ComplexPoint zeros(std::size_t n) { return ComplexPoint(std::vector<Complex>(n)); }

    std::size_t size() const { return coords_.size(); }
    Complex operator[](std::size_t i) const { return coords_[i]; }
    Complex& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Complex> coords() const { return coords_; }

    double norm() const;
    double max_modulus() const;

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

private:
    std::vector<Complex> coords_;
};

ComplexPoint operator+(const ComplexPoint& a, const ComplexPoint& b);
ComplexPoint operator-(const ComplexPoint& a, const ComplexPoint& b);
ComplexPoint operator*(Complex s, const ComplexPoint& p);

std::string to_string(const ComplexPoint& p);

struct DomainTag {
    enum class Kind { UnitDisc, Bidisc, Polydisc, UnitBall };

    Kind kind = Kind::Bidisc;
    std::size_t n = 2;

    static DomainTag unit_disc() { return {Kind::UnitDisc, 1}; }
    static DomainTag bidisc() { return {Kind::Bidisc, 2}; }
    static DomainTag polydisc(std::size_t n);
    static DomainTag unit_ball(std::size_t n);

    std::size_t dimension() const { return n; }
    bool is_product() const { return kind != Kind::UnitBall; }

    friend bool operator==(const DomainTag&, const DomainTag&) = default;
};

std::string to_string(const DomainTag& tag);

/// Disc automorphism z -> (z - a) / (1 - conj(a) z). Requires |a| < 1.
Complex mobius(Complex a, Complex z);

/// Green function of the unit disc with pole a: log|mobius(a, z)|, -inf at z = a.
double disc_green(Complex a, Complex z);

/// rotation * prod_j mobius(zeros[j], zeta). Every zero must lie in the open disc.
Complex blaschke_eval(std::span<const Complex> zeros, Complex rotation, Complex zeta);

/// Open-domain membership: |z_i| < 1 - eps (product domains) or ||z||^2 < 1 - eps (ball).
bool in_domain(const DomainTag& tag, const ComplexPoint& z, double eps = kBoundaryEps);

}  // namespace plurigreen
