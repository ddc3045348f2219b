#include "acmp/potential.hpp"

#include "acmp/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <array>
#include <limits>

namespace acmp {

namespace {

Eigen::Map<const Eigen::VectorXd> as_vector(std::span<const double> u)
{
    return {u.data(), static_cast<Eigen::Index>(u.size())};
}

std::span<const double> as_span(const Eigen::VectorXd& u)
{
    return {u.data(), static_cast<size_t>(u.size())};
}

} // namespace

Eigen::VectorXd Potential::grad(const Eigen::VectorXd& u) const
{
    Eigen::VectorXd g(m);
    grad_fn(as_span(u), {g.data(), static_cast<size_t>(m)});
    return g;
}

Eigen::MatrixXd Potential::hess(const Eigen::VectorXd& u) const
{
    if (hess_fn) {
        return hess_fn(as_span(u));
    }
    return hess_fd_fallback(*this, u, kDefaultHessianStep);
}

Potential make_double_well_1d(double a, double r0)
{
    if (a != 1.0 && a != -1.0) {
        throw InvalidArgument("double_well_1d: a must be a well (+1 or -1)");
    }
    if (!(r0 > 0.0)) {
        throw InvalidArgument("double_well_1d: r0 must be positive");
    }
    Potential W;
    W.name = "double_well_1d";
    W.m = 1;
    W.a = Eigen::VectorXd::Constant(1, a);
    W.r0 = r0;
    W.known_zeros = {Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(1, -1.0)};
    W.eval_fn = [](std::span<const double> u) {
        const double s = 1.0 - u[0] * u[0];
        return s * s;
    };
    W.grad_fn = [](std::span<const double> u, std::span<double> g) {
        g[0] = -4.0 * u[0] * (1.0 - u[0] * u[0]);
    };
    W.hess_fn = [](std::span<const double> u) {
        return Eigen::MatrixXd::Constant(1, 1, 12.0 * u[0] * u[0] - 4.0);
    };
    return W;
}

std::vector<Eigen::VectorXd> default_triple_wells()
{
    const double s = std::sqrt(3.0) / 2.0;
    return {Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(-0.5, s), Eigen::Vector2d(-0.5, -s)};
}

Potential make_triple_well_2d(std::vector<Eigen::VectorXd> wells, std::optional<Eigen::VectorXd> a, double r0)
{
    if (wells.size() != 3) {
        throw InvalidArgument("triple_well_2d: exactly three wells required");
    }
    for (const auto& w : wells) {
        if (w.size() != 2) {
            throw InvalidArgument("triple_well_2d: wells must lie in R^2");
        }
    }
    if (!(r0 > 0.0)) {
        throw InvalidArgument("triple_well_2d: r0 must be positive");
    }
    const Eigen::VectorXd well = a.value_or(wells[0]);
    bool is_well = false;
    for (const auto& w : wells) {
        is_well = is_well || (w == well);
    }
    if (!is_well) {
        throw InvalidArgument("triple_well_2d: a must coincide with one of the wells");
    }

    Potential W;
    W.name = "triple_well_2d";
    W.m = 2;
    W.a = well;
    W.r0 = r0;
    W.known_zeros = wells;

    W.eval_fn = [wells](std::span<const double> u) {
        double value = 1.0;
        for (const auto& w : wells) {
            value *= (as_vector(u) - w).squaredNorm();
        }
        return value;
    };
    W.grad_fn = [wells](std::span<const double> u, std::span<double> g) {
        const auto x = as_vector(u);
        std::array<Eigen::Vector2d, 3> d;
        std::array<double, 3> p{};
        for (size_t i = 0; i < 3; ++i) {
            d[i] = x - wells[i];
            p[i] = d[i].squaredNorm();
        }
        const Eigen::Vector2d out =
            2.0 * (d[0] * p[1] * p[2] + d[1] * p[0] * p[2] + d[2] * p[0] * p[1]);
        g[0] = out[0];
        g[1] = out[1];
    };
    W.hess_fn = [wells](std::span<const double> u) {
        const auto x = as_vector(u);
        std::array<Eigen::Vector2d, 3> d;
        std::array<double, 3> p{};
        for (size_t i = 0; i < 3; ++i) {
            d[i] = x - wells[i];
            p[i] = d[i].squaredNorm();
        }
        // H = sum_i 2 I prod_{j!=i} p_j + sum_{i!=j} 4 d_i d_j^T p_k
        Eigen::MatrixXd H = Eigen::MatrixXd::Zero(2, 2);
        for (size_t i = 0; i < 3; ++i) {
            const size_t j = (i + 1) % 3;
            const size_t k = (i + 2) % 3;
            H += 2.0 * p[j] * p[k] * Eigen::Matrix2d::Identity();
            H += 4.0 * p[k] * (d[i] * d[j].transpose() + d[j] * d[i].transpose());
        }
        return H;
    };
    return W;
}

Potential make_quadratic(Eigen::VectorXd a, double r0)
{
    if (a.size() < 1) {
        throw InvalidArgument("quadratic: a must be nonempty");
    }
    if (!(r0 > 0.0)) {
        throw InvalidArgument("quadratic: r0 must be positive");
    }
    Potential W;
    W.name = "quadratic";
    W.m = static_cast<int>(a.size());
    W.a = a;
    W.r0 = r0;
    W.known_zeros = {a};
    W.eval_fn = [a](std::span<const double> u) { return (as_vector(u) - a).squaredNorm(); };
    W.grad_fn = [a](std::span<const double> u, std::span<double> g) {
        for (size_t k = 0; k < u.size(); ++k) {
            g[k] = 2.0 * (u[k] - a[static_cast<Eigen::Index>(k)]);
        }
    };
    const auto m = a.size();
    W.hess_fn = [m](std::span<const double>) -> Eigen::MatrixXd {
        return 2.0 * Eigen::MatrixXd::Identity(m, m);
    };
    return W;
}

Eigen::MatrixXd hess_fd_fallback(const Potential& W, const Eigen::VectorXd& u, double h)
{
    if (!(h > 0.0)) {
        throw InvalidArgument("hess_fd_fallback: step must be positive");
    }
    const int m = W.m;
    Eigen::MatrixXd H(m, m);
    Eigen::VectorXd up = u;
    Eigen::VectorXd um = u;
    for (int j = 0; j < m; ++j) {
        up[j] = u[j] + h;
        um[j] = u[j] - h;
        H.col(j) = (W.grad(up) - W.grad(um)) / (2.0 * h);
        up[j] = u[j];
        um[j] = u[j];
    }
    Eigen::MatrixXd S(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            S(i, j) = 0.5 * (H(i, j) + H(j, i));
        }
    }
    return S;
}

HypothesisReport merge(HypothesisReport lhs, const HypothesisReport& rhs)
{
    if (rhs.radial) {
        lhs.radial = rhs.radial;
    }
    if (rhs.positivity) {
        lhs.positivity = rhs.positivity;
    }
    return lhs;
}

std::vector<Eigen::VectorXd> sphere_directions(int m, int n_dirs)
{
    std::vector<Eigen::VectorXd> dirs;
    if (m == 1) {
        dirs.push_back(Eigen::VectorXd::Constant(1, 1.0));
        dirs.push_back(Eigen::VectorXd::Constant(1, -1.0));
        return dirs;
    }
    if (m == 2) {
        for (int k = 0; k < n_dirs; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / n_dirs;
            dirs.push_back(Eigen::Vector2d(std::cos(theta), std::sin(theta)));
        }
        return dirs;
    }
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> normal;
    while (static_cast<int>(dirs.size()) < n_dirs) {
        Eigen::VectorXd v(m);
        for (int k = 0; k < m; ++k) {
            v[k] = normal(rng);
        }
        const double n = v.norm();
        if (n > 1e-12) {
            dirs.push_back(v / n);
        }
    }
    return dirs;
}

HypothesisReport check_radial_monotonicity(const Potential& W, int n_dirs, int n_radii)
{
    if (n_dirs < 1 || n_radii < 2) {
        throw InvalidArgument("check_radial_monotonicity: need n_dirs >= 1 and n_radii >= 2");
    }
    RadialCheck check;
    check.n_dirs = n_dirs;
    check.n_radii = n_radii;
    check.worst_violation = -std::numeric_limits<double>::infinity();

    Eigen::VectorXd point(W.m);
    for (const auto& nu : sphere_directions(W.m, n_dirs)) {
        for (int k = 1; k <= n_radii; ++k) {
            const double r = W.r0 * k / n_radii;
            point = W.a + r * nu;
            const double slope = W.grad(point).dot(nu);
            if (-slope > check.worst_violation) {
                check.worst_violation = -slope;
                check.witness_direction = nu;
                check.witness_radius = r;
            }
        }
    }
    check.passed = check.worst_violation <= kMonotonicityTol;

    HypothesisReport report;
    report.radial = check;
    return report;
}

HypothesisReport check_positivity_punctured(const Potential& W, int n_samples)
{
    if (n_samples < 1) {
        throw InvalidArgument("check_positivity_punctured: need n_samples >= 1");
    }
    PositivityCheck check;
    check.n_samples = n_samples;
    check.worst_violation = -std::numeric_limits<double>::infinity();
    const double outer = 2.0 * W.r0;

    auto probe = [&](const Eigen::VectorXd& u) {
        const double violation = 0.0 - W.eval(u); // +0 rather than -0 at a zero
        if (violation > check.worst_violation) {
            check.worst_violation = violation;
            check.witness = u;
        }
    };

    for (const auto& z : W.known_zeros) {
        const double dist = (z - W.a).norm();
        if (dist > 0.0 && dist < outer) {
            ++check.n_zeros_probed;
            probe(z);
        }
    }

    if (W.m <= 2) {
        const int n_dirs = W.m == 1 ? 2 : std::max(1, static_cast<int>(std::ceil(std::sqrt(n_samples))));
        const int n_radii = (n_samples + n_dirs - 1) / n_dirs;
        for (const auto& nu : sphere_directions(W.m, n_dirs)) {
            for (int k = 0; k < n_radii; ++k) {
                probe(W.a + outer * (k + 0.5) / n_radii * nu);
            }
        }
    } else {
        std::mt19937_64 rng(0xba11);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const auto dirs = sphere_directions(W.m, n_samples);
        for (const auto& nu : dirs) {
            double radius = outer * std::pow(unit(rng), 1.0 / W.m);
            if (radius <= 0.0 || radius >= outer) {
                radius = 0.5 * outer;
            }
            probe(W.a + radius * nu);
        }
    }

    check.passed = check.worst_violation < 0.0;

    HypothesisReport report;
    report.positivity = check;
    return report;
}

} // namespace acmp
