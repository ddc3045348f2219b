#include "acmp/competitor.hpp"

#include "acmp/errors.hpp"

#include <cmath>
#include <limits>

namespace acmp {

namespace {

void require_positive_r(double r, const char* where)
{
    if (!(r > 0.0)) {
        throw InvalidArgument(std::string(where) + ": r must be positive");
    }
}

} // namespace

double alpha(double tau, double r)
{
    require_positive_r(r, "alpha");
    if (tau <= r) {
        return 1.0;
    }
    if (tau >= 2.0 * r) {
        return 0.0;
    }
    return (2.0 * r - tau) / r;
}

double truncation_profile(double tau, double r)
{
    require_positive_r(r, "truncation_profile");
    if (tau <= r) {
        return tau;
    }
    if (tau >= 2.0 * r) {
        return 0.0;
    }
    // exact in floating point: 2r/tau lies in (1, 2)
    return 2.0 * r - tau;
}

Eigen::VectorXd competitor_map(const Eigen::VectorXd& p, const Eigen::VectorXd& a, double r)
{
    require_positive_r(r, "competitor_map");
    const Eigen::VectorXd shifted = p - a;
    const double rho = shifted.norm();
    if (rho <= r) {
        return p;
    }
    if (rho >= 2.0 * r) {
        return a;
    }
    return a + (truncation_profile(rho, r) / rho) * shifted;
}

VectorField build_u_tilde(const VectorField& u, const Eigen::VectorXd& a, double r)
{
    require_positive_r(r, "build_u_tilde");
    VectorField out = u;
    for (int k : u.domain->in_set_nodes()) {
        out.values.col(k) = competitor_map(u.values.col(k), a, r);
    }
    return out;
}

VectorField build_u_hat(const VectorField& u, const Eigen::VectorXd& a, double r)
{
    require_positive_r(r, "build_u_hat");
    VectorField out = u;
    for (int k : u.domain->in_set_nodes()) {
        const Eigen::VectorXd shifted = u.values.col(k) - a;
        const double rho = shifted.norm();
        if (rho < r) {
            throw PreconditionViolation("build_u_hat: |u - a| < r at node " + std::to_string(k));
        }
        if (rho != r) {
            out.values.col(k) = a + (r / rho) * shifted;
        }
    }
    return out;
}

CompetitorReport verify_competitor(const VectorField& u, const Eigen::VectorXd& a, double r, const Potential& W)
{
    require_positive_r(r, "verify_competitor");
    CompetitorReport rep;
    rep.r = r;
    rep.boundary_hypothesis = boundary_radius(u, a) <= r;

    const VectorField tilde = build_u_tilde(u, a, r);
    const Domain& d = *u.domain;

    rep.boundary_equal = true;
    for (int k : d.boundary_nodes()) {
        for (int c = 0; c < u.m; ++c) {
            rep.boundary_equal = rep.boundary_equal && tilde.values(c, k) == u.values(c, k);
        }
    }
    for (int k : d.in_set_nodes()) {
        rep.sup_bound = std::max(rep.sup_bound, (tilde.values.col(k) - a).norm());
    }

    rep.energy_u = energy(u, W);
    rep.energy_tilde = energy(tilde, W);
    rep.energy_decreased = rep.energy_tilde.total <= rep.energy_u.total;

    const PolarDecomposition pd = polar(u, a);
    PolarDecomposition pd_tilde = pd;
    for (int k : d.in_set_nodes()) {
        const double psi = truncation_profile(pd.rho.values[k], r);
        pd_tilde.rho.values[k] = psi;
        if (!(psi > pd.eps_zero)) {
            pd_tilde.a_plus[static_cast<size_t>(k)] = 0;
            pd_tilde.nu.values.col(k).setZero();
        }
    }

    rep.split_u = split_energy(pd, a, W);
    rep.split_u.potential = rep.energy_u.potential;
    rep.split_u.total = rep.split_u.rho_dirichlet + rep.split_u.angular + rep.split_u.potential;
    rep.split_tilde = split_energy(pd_tilde, a, W);
    rep.split_tilde.potential = rep.energy_tilde.potential;
    rep.split_tilde.total = rep.split_tilde.rho_dirichlet + rep.split_tilde.angular + rep.split_tilde.potential;

    rep.termwise.rho_dirichlet = rep.split_tilde.rho_dirichlet <= rep.split_u.rho_dirichlet;
    rep.termwise.angular = rep.split_tilde.angular <= rep.split_u.angular;
    rep.termwise.potential = rep.split_tilde.potential <= rep.split_u.potential;

    const SplitLinkTerms links_u = split_link_terms(pd);
    const SplitLinkTerms links_tilde = split_link_terms(pd_tilde);
    rep.linkwise.rho_dirichlet = true;
    rep.linkwise.angular = true;
    for (size_t l = 0; l < links_u.rho_dirichlet.size(); ++l) {
        rep.linkwise.rho_dirichlet = rep.linkwise.rho_dirichlet && links_tilde.rho_dirichlet[l] <= links_u.rho_dirichlet[l];
        rep.linkwise.angular = rep.linkwise.angular && links_tilde.angular[l] <= links_u.angular[l];
    }
    rep.linkwise.potential = true;
    for (int k : d.in_set_nodes()) {
        rep.linkwise.potential = rep.linkwise.potential && W.eval(tilde.node_span(k)) <= W.eval(u.node_span(k));
    }
    return rep;
}

double coincidence_measure(const VectorField& u, const VectorField& v, double tol)
{
    if (!same_domain(u, v)) {
        throw InvalidArgument("coincidence_measure: fields live on different domains");
    }
    const auto& nodes = u.domain->in_set_nodes();
    std::size_t hits = 0;
    for (int k : nodes) {
        if ((u.values.col(k) - v.values.col(k)).norm() <= tol) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(nodes.size());
}

std::string to_string(ProofCase c)
{
    switch (c) {
    case ProofCase::all_within_r:
        return "ALL_WITHIN_R";
    case ProofCase::band_r_2r:
        return "BAND_R_2R";
    case ProofCase::exceeds_2r:
        return "EXCEEDS_2R";
    case ProofCase::mixed:
        return "MIXED";
    }
    return "UNKNOWN";
}

ProofCaseTrace trace_proof_cases(const VectorField& u, const Eigen::VectorXd& a, double r)
{
    require_positive_r(r, "trace_proof_cases");
    ProofCaseTrace trace;
    trace.min_rho = std::numeric_limits<double>::infinity();
    trace.max_rho = -1.0;
    for (int k : u.domain->in_set_nodes()) {
        const double rho = (u.values.col(k) - a).norm();
        if (rho < trace.min_rho) {
            trace.min_rho = rho;
            trace.argmin = k;
        }
        if (rho > trace.max_rho) {
            trace.max_rho = rho;
            trace.argmax = k;
        }
    }
    constexpr double slack = 1e-12;
    const bool above_r = trace.max_rho > r * (1.0 + slack);
    const bool below_r = trace.min_rho < r * (1.0 - slack);
    const bool above_2r = trace.max_rho > 2.0 * r * (1.0 + slack);
    if (!above_r) {
        trace.label = ProofCase::all_within_r;
    } else if (below_r) {
        trace.label = ProofCase::mixed;
    } else if (above_2r) {
        trace.label = ProofCase::exceeds_2r;
    } else {
        trace.label = ProofCase::band_r_2r;
    }
    return trace;
}

} // namespace acmp
