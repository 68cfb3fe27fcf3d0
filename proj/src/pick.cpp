#include "plurigreen/pick.hpp"

#include <Eigen/Eigenvalues>

#include "plurigreen/errors.hpp"

namespace plurigreen {

namespace {

constexpr int kMaxInline = 16;
using SmallMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxInline, kMaxInline>;

template <typename Matrix>
void fill(Matrix& m, std::span<const Complex> nodes, std::span<const Complex> targets) {
    const auto n = static_cast<Eigen::Index>(nodes.size());
    m.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const Complex v = (1.0 - targets[i] * std::conj(targets[j])) / (1.0 - nodes[i] * std::conj(nodes[j]));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
        m(i, i) = m(i, i).real();
    }
}

}  // namespace

PickProblem::PickProblem(std::vector<PickDatum> data) : data_(std::move(data)) {
    if (data_.empty()) throw InvalidParameter("pick problem needs at least one datum");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!(std::abs(data_[i].node) < 1.0)) throw InvalidParameter("pick node outside the open disc");
        if (!(std::abs(data_[i].target) <= 1.0)) throw InvalidParameter("pick target outside the closed disc");
        for (std::size_t j = 0; j < i; ++j) {
            if (data_[j].node == data_[i].node) throw InvalidParameter("duplicate pick nodes");
        }
    }
}

Eigen::MatrixXcd pick_matrix(const PickProblem& p) {
    std::vector<Complex> nodes, targets;
    for (const auto& d : p.data()) {
        nodes.push_back(d.node);
        targets.push_back(d.target);
    }
    Eigen::MatrixXcd m;
    fill(m, nodes, targets);
    return m;
}

double pick_min_eigenvalue(std::span<const Complex> nodes, std::span<const Complex> targets) {
    if (nodes.size() == 1) return 1.0 - std::norm(targets[0]);
    if (nodes.size() <= static_cast<std::size_t>(kMaxInline)) {
        SmallMatrix m;
        fill(m, nodes, targets);
        Eigen::SelfAdjointEigenSolver<SmallMatrix> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues()(0);
    }
    Eigen::MatrixXcd m;
    fill(m, nodes, targets);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

PickVerdict pick_feasible(const PickProblem& p, double tol) {
    if (!(tol >= 0.0)) throw InvalidParameter("pick tolerance must be >= 0");
    std::vector<Complex> nodes, targets;
    for (const auto& d : p.data()) {
        nodes.push_back(d.node);
        targets.push_back(d.target);
    }
    const double lambda = pick_min_eigenvalue(nodes, targets);
    return {lambda >= -tol, lambda};
}

}  // namespace plurigreen
