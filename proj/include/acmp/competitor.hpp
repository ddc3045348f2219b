#pragma once

#include "acmp/decompose.hpp"
#include "acmp/energy.hpp"
#include "acmp/grid.hpp"
#include "acmp/potential.hpp"

#include <string>

namespace acmp {

/// Cutoff: 1 on [0, r], (2r - tau)/r on [r, 2r], 0 beyond. Throws for r <= 0.
double alpha(double tau, double r);

/// psi(tau) = min(tau, r) alpha(tau): tau on [0, r], 2r - tau on [r, 2r], 0 beyond.
double truncation_profile(double tau, double r);

/// Pointwise competitor map T(p) = a + psi(|p - a|) (p - a)/|p - a|, T(a) = a.
/// Points with |p - a| <= r are returned unchanged.
Eigen::VectorXd competitor_map(const Eigen::VectorXd& p, const Eigen::VectorXd& a, double r);

/// u~ = T(u) nodewise, boundary included.
VectorField build_u_tilde(const VectorField& u, const Eigen::VectorXd& a, double r);

/// u^ = a + r nu; requires |u - a| >= r on every in-set node (PreconditionViolation otherwise).
VectorField build_u_hat(const VectorField& u, const Eigen::VectorXd& a, double r);

struct TermwiseComparison {
    bool rho_dirichlet = false;
    bool angular = false;
    bool potential = false;

    bool all() const { return rho_dirichlet && angular && potential; }
};

struct CompetitorReport {
    double r = 0.0;
    bool boundary_hypothesis = false; // boundary_radius(u, a) <= r
    bool boundary_equal = false;      // u~ == u bit-exactly on boundary nodes
    double sup_bound = 0.0;           // max over in-set nodes of |u~ - a|
    EnergyBreakdown energy_u;
    EnergyBreakdown energy_tilde;
    SplitEnergy split_u;
    SplitEnergy split_tilde;
    TermwiseComparison termwise;  // split totals of u~ <= those of u
    TermwiseComparison linkwise;  // the same per link (gradient terms) and per node (W)
    bool energy_decreased = false; // J(u~) <= J(u), no tolerance
};

/**
 * Builds u~ and compares it with u.
 *
 * The split of u~ reuses the directions of u (the cutoff only rescales rho),
 * so the gradient-term comparisons see exactly the same nu on both sides.
 */
CompetitorReport verify_competitor(const VectorField& u, const Eigen::VectorXd& a, double r, const Potential& W);

/// Fraction of in-set nodes where |u - v| <= tol.
double coincidence_measure(const VectorField& u, const VectorField& v, double tol);

enum class ProofCase { all_within_r, band_r_2r, exceeds_2r, mixed };

std::string to_string(ProofCase c);

struct ProofCaseTrace {
    ProofCase label = ProofCase::all_within_r;
    double min_rho = 0.0;
    double max_rho = 0.0;
    int argmin = -1;
    int argmax = -1;
};

/**
 * Which branch of the competitor argument a field falls into, judged over
 * all in-set nodes. Comparisons against r and 2r carry a relative slack of
 * 1e-12; a value within the slack of a threshold counts as lying on the
 * lower side.
 */
ProofCaseTrace trace_proof_cases(const VectorField& u, const Eigen::VectorXd& a, double r);

} // namespace acmp
