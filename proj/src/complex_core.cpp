#include "plurigreen/complex_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plurigreen/errors.hpp"

namespace plurigreen {

double ComplexPoint::norm() const {
    double s = 0.0;
    for (const auto& c : coords_) s += std::norm(c);
    return std::sqrt(s);
}

double ComplexPoint::max_modulus() const {
    double m = 0.0;
    for (const auto& c : coords_) m = std::max(m, std::abs(c));
    return m;
}

namespace {

void require_same_size(const ComplexPoint& a, const ComplexPoint& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("point dimensions differ: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
    }
}

}  // namespace

ComplexPoint operator+(const ComplexPoint& a, const ComplexPoint& b) {
    require_same_size(a, b);
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return ComplexPoint(std::move(out));
}

ComplexPoint operator-(const ComplexPoint& a, const ComplexPoint& b) {
    require_same_size(a, b);
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return ComplexPoint(std::move(out));
}

ComplexPoint operator*(Complex s, const ComplexPoint& p) {
    std::vector<Complex> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = s * p[i];
    return ComplexPoint(std::move(out));
}

std::string to_string(const ComplexPoint& p) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i].real() << (p[i].imag() < 0 ? "-" : "+") << std::abs(p[i].imag()) << 'i';
    }
    os << ')';
    return os.str();
}

DomainTag DomainTag::polydisc(std::size_t n) {
    if (n < 2) throw InvalidParameter("polydisc dimension must be >= 2");
    return {Kind::Polydisc, n};
}

DomainTag DomainTag::unit_ball(std::size_t n) {
    if (n < 2) throw InvalidParameter("ball dimension must be >= 2");
    return {Kind::UnitBall, n};
}

std::string to_string(const DomainTag& tag) {
    switch (tag.kind) {
        case DomainTag::Kind::UnitDisc: return "disc";
        case DomainTag::Kind::Bidisc: return "bidisc";
        case DomainTag::Kind::Polydisc: return "polydisc(" + std::to_string(tag.n) + ")";
        case DomainTag::Kind::UnitBall: return "ball(" + std::to_string(tag.n) + ")";
    }
    return "?";
}

Complex mobius(Complex a, Complex z) {
    if (!(std::abs(a) < 1.0)) throw InvalidParameter("mobius: |a| must be < 1");
    return (z - a) / (1.0 - std::conj(a) * z);
}

double disc_green(Complex a, Complex z) {
    // clamp: on the unit circle rounding may give log|.| = +tiny
    return std::min(0.0, log_abs(mobius(a, z)));
}

Complex blaschke_eval(std::span<const Complex> zeros, Complex rotation, Complex zeta) {
    Complex value = rotation;
    for (const auto& z0 : zeros) {
        if (!(std::abs(z0) < 1.0)) throw InvalidParameter("blaschke_eval: zero outside the open disc");
        value *= mobius(z0, zeta);
    }
    return value;
}

bool in_domain(const DomainTag& tag, const ComplexPoint& z, double eps) {
    if (z.size() != tag.dimension()) {
        throw DimensionMismatch("point of dimension " + std::to_string(z.size()) + " for domain " +
                                to_string(tag));
    }
    if (tag.kind == DomainTag::Kind::UnitBall) {
        const double r = z.norm();
        return r * r < 1.0 - eps;
    }
    for (const auto& c : z.coords()) {
        if (!(std::abs(c) < 1.0 - eps)) return false;
    }
    return true;
}

}  // namespace plurigreen
