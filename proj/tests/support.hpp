#pragma once

#include "acmp/grid.hpp"
#include "acmp/potential.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace acmp::testing {

inline DomainPtr interval(double h, double length = 1.0)
{
    const std::vector<double> ext{length};
    return build_box_domain(1, ext, h);
}

inline DomainPtr square(double h, double side = 1.0)
{
    const std::vector<double> ext{side, side};
    return build_box_domain(2, ext, h);
}

/// Every in-set node drawn uniformly from the ball B(a, radius).
inline VectorField random_ball_field(const DomainPtr& d, const Eigen::VectorXd& a, double radius, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int m = static_cast<int>(a.size());
    VectorField f(d, a);
    for (int k : d->in_set_nodes()) {
        Eigen::VectorXd dir(m);
        for (int c = 0; c < m; ++c) {
            dir[c] = normal(rng);
        }
        const double n = dir.norm();
        if (n == 0.0) {
            continue;
        }
        f.values.col(k) = a + radius * std::pow(unit(rng), 1.0 / m) * dir / n;
    }
    return f;
}

/// Interior nodes only, entries uniform in [-scale, scale].
inline VectorField random_interior_direction(const DomainPtr& d, int m, double scale, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    VectorField w(d, m, 0.0);
    for (int k : d->interior_nodes()) {
        for (int c = 0; c < m; ++c) {
            w.values(c, k) = u(rng);
        }
    }
    return w;
}

/// W(u) = cosh(u - a) - 1 on R: smooth, not polynomial, single well at a.
inline Potential make_cosh_well(double a)
{
    Potential W;
    W.name = "cosh_well";
    W.m = 1;
    W.a = Eigen::VectorXd::Constant(1, a);
    W.r0 = 1.0;
    W.known_zeros = {W.a};
    W.eval_fn = [a](std::span<const double> u) { return std::cosh(u[0] - a) - 1.0; };
    W.grad_fn = [a](std::span<const double> u, std::span<double> g) { g[0] = std::sinh(u[0] - a); };
    W.hess_fn = [a](std::span<const double> u) { return Eigen::MatrixXd::Constant(1, 1, std::cosh(u[0] - a)); };
    return W;
}

/// W identically zero in R^m.
inline Potential make_zero_potential(int m)
{
    Potential W;
    W.name = "zero";
    W.m = m;
    W.a = Eigen::VectorXd::Zero(m);
    W.r0 = 1.0;
    W.eval_fn = [](std::span<const double>) { return 0.0; };
    W.grad_fn = [](std::span<const double>, std::span<double> g) {
        for (double& x : g) {
            x = 0.0;
        }
    };
    return W;
}

} // namespace acmp::testing
