#pragma once

#include <functional>

#include "plurigreen/complex_core.hpp"

namespace plurigreen {

/// Extended-real valued function on C^n.
using ScalarField = std::function<double(const ComplexPoint&)>;

/// A scalar field together with an optional branch-gap oracle.
///
/// For functions built as (sums of) maxima of smooth branches, branch_gap(z)
/// returns the smallest difference between the two largest branches of any
/// max taken at z; the function fails to be C^2 where that gap vanishes.
/// Smooth fields leave branch_gap empty.
struct Field {
    ScalarField value;
    std::function<double(const ComplexPoint&)> branch_gap;

    double operator()(const ComplexPoint& z) const { return value(z); }
};

}  // namespace plurigreen
