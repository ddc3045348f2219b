#include "acmp/linearize.hpp"

#include "acmp/errors.hpp"

#include <cmath>
#include <numbers>

namespace acmp {

QuadratureRule gauss_legendre_unit(int n)
{
    if (n < 1) {
        throw InvalidArgument("gauss_legendre_unit: need at least one node");
    }
    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    const auto degree = static_cast<unsigned>(n);
    for (int i = 0; i < n; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            const double p = std::legendre(degree, x);
            const double pm = n > 1 ? std::legendre(degree - 1, x) : 1.0;
            dp = n * (x * p - pm) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        {
            const double p = std::legendre(degree, x);
            const double pm = n > 1 ? std::legendre(degree - 1, x) : 1.0;
            dp = n * (x * p - pm) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
        rule.weights[static_cast<size_t>(n - 1 - i)] = 0.5 * w;
    }
    return rule;
}

namespace {

double operator_norm(const Eigen::MatrixXd& M)
{
    const Eigen::MatrixXd sym = 0.5 * (M + M.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseAbs().maxCoeff();
}

MatrixField integrate_segments(const VectorField& from, const VectorField& to, const Potential& W, int quad_nodes)
{
    if (quad_nodes < 2) {
        throw InvalidArgument("linearization: quad_nodes must be >= 2");
    }
    if (from.m != W.m) {
        throw InvalidArgument("linearization: field and potential dimensions differ");
    }
    const QuadratureRule rule = gauss_legendre_unit(quad_nodes);
    MatrixField Q;
    Q.domain = from.domain;
    Q.m = from.m;
    Q.matrices.assign(static_cast<size_t>(from.domain->num_nodes()), Eigen::MatrixXd::Zero(from.m, from.m));
    Eigen::VectorXd point(from.m);
    for (int k : from.domain->in_set_nodes()) {
        const Eigen::VectorXd start = from.values.col(k);
        const Eigen::VectorXd delta = to.values.col(k) - start;
        Eigen::MatrixXd& acc = Q.matrices[static_cast<size_t>(k)];
        for (size_t q = 0; q < rule.nodes.size(); ++q) {
            point = start + rule.nodes[q] * delta;
            const Eigen::MatrixXd H = W.hess(point);
            Q.hessian_sample_bound = std::max(Q.hessian_sample_bound, operator_norm(H));
            acc += rule.weights[q] * H;
        }
        Q.max_operator_norm = std::max(Q.max_operator_norm, operator_norm(acc));
    }
    return Q;
}

} // namespace

MatrixField assemble_Q(const VectorField& u, const Eigen::VectorXd& a, const Potential& W, int quad_nodes)
{
    if (a.size() != u.m) {
        throw InvalidArgument("assemble_Q: a has the wrong dimension");
    }
    const VectorField base(u.domain, a);
    return integrate_segments(base, u, W, quad_nodes);
}

MatrixField assemble_Q_segment(const VectorField& u, const VectorField& v, const Potential& W, int quad_nodes)
{
    if (!same_domain(u, v)) {
        throw InvalidArgument("assemble_Q_segment: fields live on different domains");
    }
    return integrate_segments(v, u, W, quad_nodes);
}

double residual_fundamental(const VectorField& u, const Eigen::VectorXd& a, const Potential& W, const MatrixField& Q)
{
    double worst = 0.0;
    for (int k : u.domain->in_set_nodes()) {
        const Eigen::VectorXd uk = u.values.col(k);
        const Eigen::VectorXd lhs = W.grad(uk);
        const Eigen::VectorXd rhs = Q.matrices[static_cast<size_t>(k)] * (uk - a);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

double residual_segment(const VectorField& u, const VectorField& v, const Potential& W, const MatrixField& Qbar)
{
    if (!same_domain(u, v)) {
        throw InvalidArgument("residual_segment: fields live on different domains");
    }
    double worst = 0.0;
    for (int k : u.domain->in_set_nodes()) {
        const Eigen::VectorXd uk = u.values.col(k);
        const Eigen::VectorXd vk = v.values.col(k);
        const Eigen::VectorXd lhs = W.grad(uk) - W.grad(vk);
        const Eigen::VectorXd rhs = Qbar.matrices[static_cast<size_t>(k)] * (uk - vk);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

double max_asymmetry(const MatrixField& Q)
{
    double worst = 0.0;
    for (int k : Q.domain->in_set_nodes()) {
        const Eigen::MatrixXd& M = Q.matrices[static_cast<size_t>(k)];
        worst = std::max(worst, (M - M.transpose()).cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace acmp
