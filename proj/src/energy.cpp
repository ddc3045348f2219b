#include "acmp/energy.hpp"

#include "acmp/errors.hpp"

namespace acmp {

namespace {

void require_finite(const VectorField& v, const char* where)
{
    if (!v.is_finite()) {
        throw InvalidField(std::string(where) + ": field has non-finite values");
    }
}

void require_matching(const VectorField& v, const Potential& W, const char* where)
{
    if (v.m != W.m) {
        throw InvalidArgument(std::string(where) + ": field and potential dimensions differ");
    }
}

} // namespace

double dirichlet_term(const VectorField& v)
{
    const Domain& d = *v.domain;
    const double scale = 0.5 * d.cell_volume() / (d.h() * d.h());
    double sum = 0.0;
    const double* data = v.values.data();
    const auto m = static_cast<ptrdiff_t>(v.m);
    for (const auto& [i, j] : d.links()) {
        const double* vi = data + m * i;
        const double* vj = data + m * j;
        double link = 0.0;
        for (ptrdiff_t c = 0; c < m; ++c) {
            const double diff = vi[c] - vj[c];
            link += diff * diff;
        }
        sum += link;
    }
    return scale * sum;
}

double potential_term(const VectorField& v, const Potential& W)
{
    const Domain& d = *v.domain;
    double sum = 0.0;
    for (int k : d.in_set_nodes()) {
        sum += d.node_weight(k) * W.eval(v.node_span(k));
    }
    return d.cell_volume() * sum;
}

EnergyBreakdown energy(const VectorField& v, const Potential& W)
{
    require_matching(v, W, "energy");
    require_finite(v, "energy");
    EnergyBreakdown e;
    e.dirichlet = dirichlet_term(v);
    e.potential = potential_term(v, W);
    e.total = e.dirichlet + e.potential;
    return e;
}

VectorField energy_gradient(const VectorField& v, const Potential& W)
{
    require_matching(v, W, "energy_gradient");
    require_finite(v, "energy_gradient");
    const Domain& d = *v.domain;
    VectorField g(v.domain, v.m, 0.0);
    const double link_scale = d.cell_volume() / (d.h() * d.h());
    const double* data = v.values.data();
    double* out = g.values.data();
    const auto m = static_cast<ptrdiff_t>(v.m);
    for (const auto& [i, j] : d.links()) {
        for (ptrdiff_t c = 0; c < m; ++c) {
            const double diff = link_scale * (data[m * i + c] - data[m * j + c]);
            out[m * i + c] += diff;
            out[m * j + c] -= diff;
        }
    }
    Eigen::VectorXd dW(v.m);
    for (int k : d.interior_nodes()) {
        W.grad(v.node_span(k), {dW.data(), static_cast<size_t>(v.m)});
        g.values.col(k) += d.cell_volume() * dW;
    }
    for (int k : d.boundary_nodes()) {
        g.values.col(k).setZero();
    }
    return g;
}

double el_residual(const VectorField& v, const Potential& W)
{
    require_matching(v, W, "el_residual");
    require_finite(v, "el_residual");
    const Domain& d = *v.domain;
    const double inv_h2 = 1.0 / (d.h() * d.h());
    Eigen::VectorXd lap(v.m);
    Eigen::VectorXd dW(v.m);
    double worst = 0.0;
    for (int k : d.interior_nodes()) {
        lap.setZero();
        for (int nb : d.neighbors(k)) {
            lap += v.values.col(nb) - v.values.col(k);
        }
        lap *= inv_h2;
        W.grad(v.node_span(k), {dW.data(), static_cast<size_t>(v.m)});
        worst = std::max(worst, (lap - dW).norm());
    }
    return worst;
}

double interior_max_norm(const VectorField& f)
{
    double worst = 0.0;
    for (int k : f.domain->interior_nodes()) {
        worst = std::max(worst, f.values.col(k).norm());
    }
    return worst;
}

} // namespace acmp
