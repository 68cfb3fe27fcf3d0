#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/field.hpp"

namespace plurigreen {

struct Pole {
    ComplexPoint location;
    double weight = 1.0;
};

/// Poles with weights in a model domain (the set A).
///
/// The constructor validates: positive weights, pairwise distinct locations,
/// every pole inside the open domain. Closed-form evaluators additionally
/// require axis poles (z_2 = ... = z_n = 0).
class PoleConfiguration {
public:
    PoleConfiguration(DomainTag domain, std::vector<Pole> poles);

    /// Bidisc poles (a_i, 0) with the given weights.
    static PoleConfiguration bidisc_axis(std::span<const Complex> a, std::span<const double> weights);
    static PoleConfiguration bidisc_axis(std::span<const Complex> a);

    const DomainTag& domain() const { return domain_; }
    const std::vector<Pole>& poles() const { return poles_; }
    std::size_t size() const { return poles_.size(); }

    bool is_axis() const;
    /// First coordinates a_i of axis poles; throws GeometryError for non-axis poles.
    std::vector<Complex> axis_coordinates() const;
    std::vector<double> weights() const;

private:
    DomainTag domain_;
    std::vector<Pole> poles_;
};

/// Per-pole weights nu_j >= 0 (zero allowed: it removes the pole).
///
/// Callers need not sort; evaluators sort descending internally with a
/// stable tie-break on pole index.
class WeightVector {
public:
    WeightVector() = default;
    WeightVector(std::initializer_list<double> values);
    explicit WeightVector(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    /// Pole indices ordered by descending weight, stable on ties.
    std::vector<std::size_t> descending_order() const;

    WeightVector operator-(const WeightVector& other) const;
    friend WeightVector operator*(double c, const WeightVector& w);
    friend WeightVector operator+(const WeightVector& a, const WeightVector& b);

    /// Componentwise <=.
    bool dominated_by(const WeightVector& other) const;

private:
    std::vector<double> values_;
};

/// True iff one permutation of the poles makes every vector non-increasing.
bool same_ordered(std::span<const WeightVector> vectors);
bool same_ordered(const WeightVector& a, const WeightVector& b);

/// max(sum_i T_i(z_1), log|z_2|): all weights equal to one.
double green_bidisc_equal(const PoleConfiguration& cfg, const ComplexPoint& z);

/// nu_k h_k + sum_{j<k} (nu_j - nu_{j+1}) h_j with h_j = max(T_1 + ... + T_j, log|z_2|),
/// poles taken in descending weight order.
double green_bidisc_weighted(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z);
double green_bidisc_weighted(const PoleConfiguration& cfg, const ComplexPoint& z);

/// max(u_1, ..., u_k, nu_1 log|z_2|), u_1 = sum nu_i T_i,
/// u_j = nu_j log|z_2| + sum_{i<j} (nu_i - nu_j) T_i.
double green_bidisc_maxform(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z);

/// Weighted form with log|z_2| replaced by max(log|z_2|, ..., log|z_n|).
double green_polydisc_axis(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z);
double green_polydisc_maxform(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z);

/// Closed-form Green function of a bidisc/polydisc axis configuration as a
/// Field whose branch_gap reports the narrowest max among the h_j.
Field green_field(const PoleConfiguration& cfg, const WeightVector& nu);
Field green_field(const PoleConfiguration& cfg);

struct ComanBallParams {
    double c = 0.0;
    double d = 0.0;
    double beta = 0.5;
    Complex gamma{0.0, 0.0};
};

/// (s^2 - c)(|t|^2 - c)|1 - st|^2 - (1 - s^2)(1 - |t|^2)|st + d|^2 for 0 < s < 1, |t| < 1.
double coman_E(double s, Complex t, const ComanBallParams& p);

/// s != t, s^2 > c, |t|^2 > c and E(s, t) >= 0.
bool coman_S_membership(double s, Complex t, const ComanBallParams& p);

}  // namespace plurigreen
