#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "plurigreen/complex_core.hpp"

namespace plurigreen {

struct PickDatum {
    Complex node;
    Complex target;
};

/// Interpolation data for a holomorphic map D -> closed D.
/// Nodes must be distinct points of D, targets must satisfy |target| <= 1.
class PickProblem {
public:
    explicit PickProblem(std::vector<PickDatum> data);

    const std::vector<PickDatum>& data() const { return data_; }
    std::size_t size() const { return data_.size(); }

private:
    std::vector<PickDatum> data_;
};

/// M_ij = (1 - t_i conj(t_j)) / (1 - z_i conj(z_j)).
Eigen::MatrixXcd pick_matrix(const PickProblem& p);

struct PickVerdict {
    bool feasible = false;
    double min_eigenvalue = 0.0;
};

/// Feasible iff the smallest eigenvalue of the Pick matrix is >= -tol.
PickVerdict pick_feasible(const PickProblem& p, double tol = 1e-10);

/// Smallest Pick-matrix eigenvalue without input validation (search hot path).
double pick_min_eigenvalue(std::span<const Complex> nodes, std::span<const Complex> targets);

}  // namespace plurigreen
