#pragma once

#include "acmp/grid.hpp"
#include "acmp/potential.hpp"

#include <vector>

namespace acmp {

inline constexpr int kDefaultQuadNodes = 8;

/// Gauss-Legendre nodes and weights on [0, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre_unit(int n);

/// Per-node symmetric m x m matrices (zero on outside nodes).
struct MatrixField {
    DomainPtr domain;
    int m = 0;
    std::vector<Eigen::MatrixXd> matrices;
    double max_operator_norm = 0.0;
    /// Largest Hessian operator norm seen at the quadrature points.
    double hessian_sample_bound = 0.0;
};

/// Q(x) = int_0^1 Hess W(a + t (u(x) - a)) dt, so that grad W(u) = Q (u - a).
MatrixField assemble_Q(const VectorField& u, const Eigen::VectorXd& a, const Potential& W,
                       int quad_nodes = kDefaultQuadNodes);

/// Qbar(x) = int_0^1 Hess W(v + t (u - v)) dt, so that grad W(u) - grad W(v) = Qbar (u - v).
MatrixField assemble_Q_segment(const VectorField& u, const VectorField& v, const Potential& W,
                               int quad_nodes = kDefaultQuadNodes);

/// max over in-set nodes of |grad W(u) - Q (u - a)|
double residual_fundamental(const VectorField& u, const Eigen::VectorXd& a, const Potential& W, const MatrixField& Q);

/// max over in-set nodes of |grad W(u) - grad W(v) - Qbar (u - v)|
double residual_segment(const VectorField& u, const VectorField& v, const Potential& W, const MatrixField& Qbar);

/// max over in-set nodes of |Q - Q^T|
double max_asymmetry(const MatrixField& Q);

} // namespace acmp
