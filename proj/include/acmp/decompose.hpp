#pragma once

#include "acmp/energy.hpp"
#include "acmp/grid.hpp"
#include "acmp/potential.hpp"

#include <cstdint>
#include <vector>

namespace acmp {

/**
 * u - a = rho * nu on the nodes where rho exceeds the zero threshold (A+).
 * On the remaining in-set nodes (A0) nu is stored as the zero vector and the
 * mask entry is 0; outputs never contain NaN.
 */
struct PolarDecomposition {
    ScalarField rho;
    VectorField nu;
    std::vector<std::uint8_t> a_plus; // per grid node
    double eps_zero = 0.0;

    bool in_a_plus(int k) const { return a_plus[static_cast<size_t>(k)] != 0; }
};

/// Three-term energy: 1/2 |grad rho|^2, 1/2 rho^2 |grad nu|^2 on A+, and W.
struct SplitEnergy {
    double rho_dirichlet = 0.0;
    double angular = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

/// Relative zero threshold 1e-12 * (1 + max |u - a|).
double default_eps_zero(const VectorField& u, const Eigen::VectorXd& a);

PolarDecomposition polar(const VectorField& u, const Eigen::VectorXd& a, double eps_zero);
PolarDecomposition polar(const VectorField& u, const Eigen::VectorXd& a);

/// Split terms from an existing decomposition. The potential term is
/// evaluated at a + rho nu on A+ and at a on A0.
SplitEnergy split_energy(const PolarDecomposition& pd, const Eigen::VectorXd& a, const Potential& W);

/// Split terms of u; the potential term is the module-energy potential term of u.
SplitEnergy split_energy(const VectorField& u, const Eigen::VectorXd& a, const Potential& W, double eps_zero);
SplitEnergy split_energy(const VectorField& u, const Eigen::VectorXd& a, const Potential& W);

/// Per-link pieces of the two gradient terms, in Domain::links() order.
struct SplitLinkTerms {
    std::vector<double> rho_dirichlet;
    std::vector<double> angular;
};
SplitLinkTerms split_link_terms(const PolarDecomposition& pd);

/// |split total - energy total| for the same field.
double split_consistency(const VectorField& u, const Eigen::VectorXd& a, const Potential& W);

} // namespace acmp
