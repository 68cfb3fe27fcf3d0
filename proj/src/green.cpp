#include "plurigreen/green.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "plurigreen/errors.hpp"

namespace plurigreen {

PoleConfiguration::PoleConfiguration(DomainTag domain, std::vector<Pole> poles)
    : domain_(domain), poles_(std::move(poles)) {
    if (poles_.empty()) throw InvalidParameter("pole configuration needs at least one pole");
    for (std::size_t i = 0; i < poles_.size(); ++i) {
        const auto& p = poles_[i];
        if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
            throw InvalidParameter("pole " + std::to_string(i + 1) + ": weight must be positive");
        }
        if (!in_domain(domain_, p.location)) {
            throw DomainViolation("pole " + std::to_string(i + 1) + " " + to_string(p.location) +
                                  " is not inside the " + to_string(domain_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (poles_[j].location == p.location) {
                throw InvalidParameter("poles " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                       " coincide");
            }
        }
    }
}

PoleConfiguration PoleConfiguration::bidisc_axis(std::span<const Complex> a, std::span<const double> weights) {
    if (a.size() != weights.size()) throw InvalidParameter("one weight per pole required");
    std::vector<Pole> poles;
    poles.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) poles.push_back({ComplexPoint{a[i], 0.0}, weights[i]});
    return PoleConfiguration(DomainTag::bidisc(), std::move(poles));
}

PoleConfiguration PoleConfiguration::bidisc_axis(std::span<const Complex> a) {
    const std::vector<double> ones(a.size(), 1.0);
    return bidisc_axis(a, ones);
}

bool PoleConfiguration::is_axis() const {
    return std::all_of(poles_.begin(), poles_.end(), [](const Pole& p) {
        for (std::size_t k = 1; k < p.location.size(); ++k) {
            if (p.location[k] != Complex{}) return false;
        }
        return true;
    });
}

std::vector<Complex> PoleConfiguration::axis_coordinates() const {
    if (!is_axis()) throw GeometryError("closed forms need every pole on the axis z_2 = ... = z_n = 0");
    std::vector<Complex> a;
    a.reserve(poles_.size());
    for (const auto& p : poles_) a.push_back(p.location[0]);
    return a;
}

std::vector<double> PoleConfiguration::weights() const {
    std::vector<double> w;
    w.reserve(poles_.size());
    for (const auto& p : poles_) w.push_back(p.weight);
    return w;
}

WeightVector::WeightVector(std::initializer_list<double> values) : WeightVector(std::vector<double>(values)) {}

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidParameter("weights must be finite and non-negative");
    }
}

std::vector<std::size_t> WeightVector::descending_order() const {
    std::vector<std::size_t> order(values_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [this](std::size_t i, std::size_t j) { return values_[i] > values_[j]; });
    return order;
}

WeightVector WeightVector::operator-(const WeightVector& other) const {
    if (size() != other.size()) throw InvalidParameter("weight vectors differ in length");
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = values_[i] - other.values_[i];
    return WeightVector(std::move(out));
}

WeightVector operator*(double c, const WeightVector& w) {
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = c * w.values_[i];
    return WeightVector(std::move(out));
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size()) throw InvalidParameter("weight vectors differ in length");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.values_[i] + b.values_[i];
    return WeightVector(std::move(out));
}

bool WeightVector::dominated_by(const WeightVector& other) const {
    if (size() != other.size()) throw InvalidParameter("weight vectors differ in length");
    for (std::size_t i = 0; i < size(); ++i) {
        if (values_[i] > other.values_[i]) return false;
    }
    return true;
}

bool same_ordered(std::span<const WeightVector> vectors) {
    if (vectors.empty()) return true;
    const std::size_t k = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != k) return false;
    }
    // A common non-increasing order exists iff no pair of poles is ranked
    // strictly oppositely by two of the vectors.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool up = false, down = false;
            for (const auto& v : vectors) {
                up = up || v[i] < v[j];
                down = down || v[i] > v[j];
            }
            if (up && down) return false;
        }
    }
    return true;
}

bool same_ordered(const WeightVector& a, const WeightVector& b) {
    const WeightVector both[] = {a, b};
    return same_ordered(both);
}

namespace {

struct AxisData {
    std::vector<Complex> a;   // pole coordinates in descending weight order
    std::vector<double> nu;   // weights, descending
};

AxisData sorted_axis(const PoleConfiguration& cfg, const WeightVector& nu) {
    if (nu.size() != cfg.size()) {
        throw InvalidParameter("weight vector has " + std::to_string(nu.size()) + " entries for " +
                               std::to_string(cfg.size()) + " poles");
    }
    const auto a = cfg.axis_coordinates();
    AxisData out;
    for (std::size_t idx : nu.descending_order()) {
        out.a.push_back(a[idx]);
        out.nu.push_back(nu[idx]);
    }
    return out;
}

void require_product_domain(const PoleConfiguration& cfg, const ComplexPoint& z, bool bidisc_only) {
    const auto& tag = cfg.domain();
    const bool ok = bidisc_only ? (tag.is_product() && tag.dimension() == 2)
                                : (tag.is_product() && tag.dimension() >= 2);
    if (!ok) throw InvalidParameter("closed form not available on the " + to_string(tag));
    if (!in_domain(tag, z)) throw DomainViolation("point " + to_string(z) + " is outside the " + to_string(tag));
}

// max_{k >= 2} log|z_k|
double vertical_log(const ComplexPoint& z) {
    double v = kNegInf;
    for (std::size_t k = 1; k < z.size(); ++k) v = std::max(v, log_abs(z[k]));
    return v;
}

double weighted_sum(const AxisData& d, Complex z1, double v) {
    const std::size_t k = d.a.size();
    double partial = 0.0;
    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        partial += disc_green(d.a[j], z1);
        const double h = std::max(partial, v);
        const double coeff = (j + 1 < k) ? d.nu[j] - d.nu[j + 1] : d.nu[j];
        total += weighted(coeff, h);
    }
    return total;
}

double max_form(const AxisData& d, Complex z1, double v) {
    const std::size_t k = d.a.size();
    std::vector<double> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = disc_green(d.a[i], z1);

    double u1 = 0.0;
    for (std::size_t i = 0; i < k; ++i) u1 += weighted(d.nu[i], t[i]);
    double best = std::max(u1, weighted(d.nu[0], v));
    for (std::size_t j = 1; j < k; ++j) {
        double uj = weighted(d.nu[j], v);
        for (std::size_t i = 0; i < j; ++i) uj += weighted(d.nu[i] - d.nu[j], t[i]);
        best = std::max(best, uj);
    }
    return best;
}

double pair_gap(double x, double y) {
    if (x == kNegInf && y == kNegInf) return 0.0;
    if (x == kNegInf || y == kNegInf) return kPosInf;
    return std::abs(x - y);
}

// top-two gap of log|z_2|, ..., log|z_n|
double vertical_gap(const ComplexPoint& z) {
    double first = kNegInf, second = kNegInf;
    for (std::size_t k = 1; k < z.size(); ++k) {
        const double l = log_abs(z[k]);
        if (l > first) {
            second = first;
            first = l;
        } else if (l > second) {
            second = l;
        }
    }
    return z.size() > 2 ? pair_gap(first, second) : kPosInf;
}

}  // namespace

double green_bidisc_equal(const PoleConfiguration& cfg, const ComplexPoint& z) {
    for (const auto& p : cfg.poles()) {
        if (p.weight != 1.0) throw InvalidParameter("green_bidisc_equal needs every weight equal to 1");
    }
    require_product_domain(cfg, z, true);
    double sum = 0.0;
    for (const auto& a : cfg.axis_coordinates()) sum += disc_green(a, z[0]);
    return std::max(sum, log_abs(z[1]));
}

double green_bidisc_weighted(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z) {
    require_product_domain(cfg, z, true);
    return weighted_sum(sorted_axis(cfg, nu), z[0], log_abs(z[1]));
}

double green_bidisc_weighted(const PoleConfiguration& cfg, const ComplexPoint& z) {
    return green_bidisc_weighted(cfg, WeightVector(cfg.weights()), z);
}

double green_bidisc_maxform(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z) {
    require_product_domain(cfg, z, true);
    return max_form(sorted_axis(cfg, nu), z[0], log_abs(z[1]));
}

double green_polydisc_axis(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z) {
    require_product_domain(cfg, z, false);
    return weighted_sum(sorted_axis(cfg, nu), z[0], vertical_log(z));
}

double green_polydisc_maxform(const PoleConfiguration& cfg, const WeightVector& nu, const ComplexPoint& z) {
    require_product_domain(cfg, z, false);
    return max_form(sorted_axis(cfg, nu), z[0], vertical_log(z));
}

Field green_field(const PoleConfiguration& cfg, const WeightVector& nu) {
    auto data = sorted_axis(cfg, nu);
    Field f;
    f.value = [cfg, nu](const ComplexPoint& z) { return green_polydisc_axis(cfg, nu, z); };
    f.branch_gap = [data](const ComplexPoint& z) {
        const double v = vertical_log(z);
        const std::size_t k = data.a.size();
        double partial = 0.0;
        double gap = kPosInf;
        bool vertical_active = false;
        for (std::size_t j = 0; j < k; ++j) {
            partial += disc_green(data.a[j], z[0]);
            const double coeff = (j + 1 < k) ? data.nu[j] - data.nu[j + 1] : data.nu[j];
            if (coeff == 0.0) continue;
            gap = std::min(gap, pair_gap(partial, v));
            vertical_active = vertical_active || v >= partial;
        }
        if (vertical_active) gap = std::min(gap, vertical_gap(z));
        return gap;
    };
    return f;
}

Field green_field(const PoleConfiguration& cfg) { return green_field(cfg, WeightVector(cfg.weights())); }

double coman_E(double s, Complex t, const ComanBallParams& p) {
    if (!(s > 0.0 && s < 1.0)) throw InvalidParameter("coman_E: s must lie in (0, 1)");
    if (!(std::abs(t) < 1.0)) throw InvalidParameter("coman_E: |t| must be < 1");
    const double s2 = s * s;
    const double t2 = std::norm(t);
    return (s2 - p.c) * (t2 - p.c) * std::norm(1.0 - s * t) - (1.0 - s2) * (1.0 - t2) * std::norm(s * t + p.d);
}

bool coman_S_membership(double s, Complex t, const ComanBallParams& p) {
    const double e = coman_E(s, t, p);
    return Complex(s, 0.0) != t && s * s > p.c && std::norm(t) > p.c && e >= 0.0;
}

}  // namespace plurigreen
