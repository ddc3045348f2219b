#include "acmp/decompose.hpp"

#include "acmp/errors.hpp"

#include <cmath>

namespace acmp {

double default_eps_zero(const VectorField& u, const Eigen::VectorXd& a)
{
    double largest = 0.0;
    for (int k : u.domain->in_set_nodes()) {
        largest = std::max(largest, (u.values.col(k) - a).norm());
    }
    return 1e-12 * (1.0 + largest);
}

PolarDecomposition polar(const VectorField& u, const Eigen::VectorXd& a, double eps_zero)
{
    if (!(eps_zero >= 0.0)) {
        throw InvalidArgument("polar: eps_zero must be nonnegative");
    }
    if (a.size() != u.m) {
        throw InvalidArgument("polar: a has the wrong dimension");
    }
    PolarDecomposition pd{ScalarField(u.domain, 0.0), VectorField(u.domain, u.m, 0.0),
                          std::vector<std::uint8_t>(static_cast<size_t>(u.domain->num_nodes()), 0), eps_zero};
    for (int k : u.domain->in_set_nodes()) {
        const Eigen::VectorXd shifted = u.values.col(k) - a;
        const double rho = shifted.norm();
        pd.rho.values[k] = rho;
        if (rho > eps_zero) {
            pd.nu.values.col(k) = shifted / rho;
            pd.a_plus[static_cast<size_t>(k)] = 1;
        }
    }
    return pd;
}

PolarDecomposition polar(const VectorField& u, const Eigen::VectorXd& a)
{
    return polar(u, a, default_eps_zero(u, a));
}

SplitLinkTerms split_link_terms(const PolarDecomposition& pd)
{
    const Domain& d = *pd.rho.domain;
    const double scale = 0.5 * d.cell_volume() / (d.h() * d.h());
    SplitLinkTerms terms;
    terms.rho_dirichlet.reserve(d.links().size());
    terms.angular.reserve(d.links().size());
    for (const auto& [i, j] : d.links()) {
        const double drho = pd.rho.values[i] - pd.rho.values[j];
        terms.rho_dirichlet.push_back(scale * drho * drho);
        double ang = 0.0;
        if (pd.in_a_plus(i) && pd.in_a_plus(j)) {
            const double ri = pd.rho.values[i];
            const double rj = pd.rho.values[j];
            const double mean_sq = 0.5 * (ri * ri + rj * rj);
            ang = scale * mean_sq * (pd.nu.values.col(i) - pd.nu.values.col(j)).squaredNorm();
        }
        terms.angular.push_back(ang);
    }
    return terms;
}

namespace {

SplitEnergy gradient_terms(const PolarDecomposition& pd)
{
    const SplitLinkTerms terms = split_link_terms(pd);
    SplitEnergy s;
    for (size_t l = 0; l < terms.rho_dirichlet.size(); ++l) {
        s.rho_dirichlet += terms.rho_dirichlet[l];
        s.angular += terms.angular[l];
    }
    return s;
}

} // namespace

SplitEnergy split_energy(const PolarDecomposition& pd, const Eigen::VectorXd& a, const Potential& W)
{
    SplitEnergy s = gradient_terms(pd);
    const Domain& d = *pd.rho.domain;
    double sum = 0.0;
    Eigen::VectorXd point(a.size());
    for (int k : d.in_set_nodes()) {
        if (pd.in_a_plus(k)) {
            point = a + pd.rho.values[k] * pd.nu.values.col(k);
        } else {
            point = a;
        }
        sum += d.node_weight(k) * W.eval(point);
    }
    s.potential = d.cell_volume() * sum;
    s.total = s.rho_dirichlet + s.angular + s.potential;
    return s;
}

SplitEnergy split_energy(const VectorField& u, const Eigen::VectorXd& a, const Potential& W, double eps_zero)
{
    SplitEnergy s = gradient_terms(polar(u, a, eps_zero));
    s.potential = potential_term(u, W);
    s.total = s.rho_dirichlet + s.angular + s.potential;
    return s;
}

SplitEnergy split_energy(const VectorField& u, const Eigen::VectorXd& a, const Potential& W)
{
    return split_energy(u, a, W, default_eps_zero(u, a));
}

double split_consistency(const VectorField& u, const Eigen::VectorXd& a, const Potential& W)
{
    return std::abs(split_energy(u, a, W).total - energy(u, W).total);
}

} // namespace acmp
