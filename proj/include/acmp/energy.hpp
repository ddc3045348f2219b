#pragma once

#include "acmp/grid.hpp"
#include "acmp/potential.hpp"

namespace acmp {

/// Discrete J(v) = sum_links 1/2 |v_i - v_j|^2 / h^2 h^n + sum_nodes w_k W(v_k) h^n.
struct EnergyBreakdown {
    double dirichlet = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

/// Throws InvalidField if v is not finite on the in-set nodes.
EnergyBreakdown energy(const VectorField& v, const Potential& W);

/// The two pieces on their own; energy() is built from exactly these sums.
double dirichlet_term(const VectorField& v);
double potential_term(const VectorField& v, const Potential& W);

/// Exact gradient of energy() with respect to interior node values. Boundary
/// and outside columns are zero.
VectorField energy_gradient(const VectorField& v, const Potential& W);

/// max over interior nodes of |Lap_h v - grad W(v)|, (2n+1)-point Laplacian.
double el_residual(const VectorField& v, const Potential& W);

/// Max over interior nodes of the Euclidean norm of a field's columns.
double interior_max_norm(const VectorField& f);

} // namespace acmp
