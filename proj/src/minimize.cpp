#include "acmp/minimize.hpp"

#include "acmp/errors.hpp"
#include "acmp/linearize.hpp"

#include <cmath>
#include <random>

namespace acmp {

void SolveOptions::validate() const
{
    if (max_iters < 1) {
        throw InvalidArgument("SolveOptions: max_iters must be >= 1");
    }
    if (!(grad_tol > 0.0)) {
        throw InvalidArgument("SolveOptions: grad_tol must be positive");
    }
    if (!(initial_step > 0.0)) {
        throw InvalidArgument("SolveOptions: initial_step must be positive");
    }
    if (!(backtrack > 0.0 && backtrack < 1.0)) {
        throw InvalidArgument("SolveOptions: backtrack factor must lie in (0,1)");
    }
    if (!(armijo > 0.0 && armijo < 1.0)) {
        throw InvalidArgument("SolveOptions: sufficient-decrease constant must lie in (0,1)");
    }
    if (max_halvings < 1) {
        throw InvalidArgument("SolveOptions: max_halvings must be >= 1");
    }
}

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::converged:
        return "converged";
    case SolveStatus::max_iterations:
        return "max_iterations";
    case SolveStatus::stalled:
        return "stalled";
    }
    return "unknown";
}

namespace {

void copy_boundary(const VectorField& from, VectorField& to)
{
    for (int k : from.domain->boundary_nodes()) {
        to.values.col(k) = from.values.col(k);
    }
}

// Unchecked total; non-finite results are handled by the caller.
double raw_energy(const VectorField& v, const Potential& W)
{
    return dirichlet_term(v) + potential_term(v, W);
}

/**
 * J(v + t d) - J(v), assembled without subtracting two totals: link terms are
 * expanded as 2t e.delta + t^2 |delta|^2 and the potential change at each node
 * is t * int_0^1 grad W(v + s t d) . d ds by Gauss-Legendre. Near a minimizer
 * the change is far below the rounding error of J itself.
 */
double energy_change(const VectorField& v, const VectorField& d, double t, const Potential& W,
                     const QuadratureRule& rule, Eigen::VectorXd& point, Eigen::VectorXd& dW)
{
    const Domain& dom = *v.domain;
    const auto m = static_cast<ptrdiff_t>(v.m);
    const double* vv = v.values.data();
    const double* dd = d.values.data();

    double links = 0.0;
    for (const auto& [i, j] : dom.links()) {
        double e_dot = 0.0;
        double dd2 = 0.0;
        for (ptrdiff_t c = 0; c < m; ++c) {
            const double e = vv[m * i + c] - vv[m * j + c];
            const double delta = dd[m * i + c] - dd[m * j + c];
            e_dot += e * delta;
            dd2 += delta * delta;
        }
        links += t * (2.0 * e_dot + t * dd2);
    }
    links *= 0.5 * dom.cell_volume() / (dom.h() * dom.h());

    double nodes = 0.0;
    for (int k : dom.interior_nodes()) {
        double integral = 0.0;
        for (size_t q = 0; q < rule.nodes.size(); ++q) {
            for (ptrdiff_t c = 0; c < m; ++c) {
                point[c] = vv[m * k + c] + rule.nodes[q] * t * dd[m * k + c];
            }
            W.grad({point.data(), static_cast<size_t>(m)}, {dW.data(), static_cast<size_t>(m)});
            double proj = 0.0;
            for (ptrdiff_t c = 0; c < m; ++c) {
                proj += dW[c] * dd[m * k + c];
            }
            integral += rule.weights[q] * proj;
        }
        nodes += t * integral;
    }
    // boundary nodes never move, so only interior nodes (weight 1) contribute
    return links + dom.cell_volume() * nodes;
}

} // namespace

VectorField harmonic_extension(const VectorField& g)
{
    const Domain& d = *g.domain;
    const auto& interior = d.interior_nodes();
    const auto n = static_cast<Eigen::Index>(interior.size());

    std::vector<int> slot(static_cast<size_t>(d.num_nodes()), -1);
    for (Eigen::Index s = 0; s < n; ++s) {
        slot[static_cast<size_t>(interior[static_cast<size_t>(s)])] = static_cast<int>(s);
    }
    std::vector<std::vector<int>> nbrs(interior.size());
    for (size_t s = 0; s < interior.size(); ++s) {
        nbrs[s] = d.neighbors(interior[s]);
    }

    // graph Laplacian restricted to interior unknowns, applied matrix-free
    auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        for (Eigen::Index s = 0; s < n; ++s) {
            const auto& nb = nbrs[static_cast<size_t>(s)];
            double acc = static_cast<double>(nb.size()) * x[s];
            for (int k : nb) {
                const int t = slot[static_cast<size_t>(k)];
                if (t >= 0) {
                    acc -= x[t];
                }
            }
            y[s] = acc;
        }
    };

    // solve for the offset from one boundary value, so constant data extend exactly
    const int ref = d.boundary_nodes().front();
    VectorField out = g;
    Eigen::VectorXd x(n), b(n), r(n), p(n), Ap(n);
    for (int c = 0; c < g.m; ++c) {
        const double base = g.values(c, ref);
        for (Eigen::Index s = 0; s < n; ++s) {
            double acc = 0.0;
            for (int k : nbrs[static_cast<size_t>(s)]) {
                if (d.is_boundary(k)) {
                    acc += g.values(c, k) - base;
                }
            }
            b[s] = acc;
        }
        x.setZero();
        r = b;
        p = r;
        double rr = r.squaredNorm();
        const double stop = 1e-28 * std::max(1.0, b.squaredNorm());
        for (Eigen::Index it = 0; it < 10 * n + 100 && rr > stop; ++it) {
            apply(p, Ap);
            const double alpha = rr / p.dot(Ap);
            x += alpha * p;
            r -= alpha * Ap;
            const double rr_next = r.squaredNorm();
            p = r + (rr_next / rr) * p;
            rr = rr_next;
        }
        for (Eigen::Index s = 0; s < n; ++s) {
            out.values(c, interior[static_cast<size_t>(s)]) = base + x[s];
        }
    }
    return out;
}

VectorField initial_field(const VectorField& g, const Potential& W, InitPolicy policy)
{
    if (policy == InitPolicy::harmonic) {
        VectorField v = harmonic_extension(g);
        if (v.is_finite()) {
            return v;
        }
    }
    VectorField v(g.domain, W.a);
    copy_boundary(g, v);
    return v;
}

VectorField random_start(const VectorField& g, const Eigen::VectorXd& a, double radius, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    VectorField v = g;
    Eigen::VectorXd dir(g.m);
    for (int k : g.domain->interior_nodes()) {
        double len = 0.0;
        do {
            for (int c = 0; c < g.m; ++c) {
                dir[c] = normal(rng);
            }
            len = dir.norm();
        } while (len < 1e-12);
        const double rho = radius * std::pow(unit(rng), 1.0 / g.m);
        v.values.col(k) = a + (rho / len) * dir;
    }
    return v;
}

SolveResult minimize(const VectorField& g, const Potential& W, const VectorField& init, const SolveOptions& opts)
{
    opts.validate();
    if (!same_domain(g, init) || g.m != W.m) {
        throw InvalidArgument("minimize: boundary data, initial field and potential disagree");
    }
    if (!g.is_finite()) {
        throw InvalidField("minimize: boundary data is not finite");
    }

    const Domain& dom = *g.domain;
    auto max_node_norm = [&](const VectorField& f) {
        double worst = 0.0;
        for (int k : dom.interior_nodes()) {
            worst = std::max(worst, f.values.col(k).norm());
        }
        return worst;
    };

    SolveResult result{init, {}};
    VectorField& v = result.field;
    copy_boundary(g, v);
    SolveStats& stats = result.stats;

    double E = raw_energy(v, W);
    if (!std::isfinite(E)) {
        throw DivergenceError("minimize: initial energy is not finite");
    }
    stats.energy_history.push_back(E);

    VectorField grad = energy_gradient(v, W);
    double gnorm = max_node_norm(grad);
    VectorField dir = grad;
    dir.values = -grad.values;
    VectorField trial = v;
    double step = opts.initial_step;

    const QuadratureRule rule = gauss_legendre_unit(4);
    Eigen::VectorXd point(W.m);
    Eigen::VectorXd dW(W.m);
    auto change_along = [&](double t) { return energy_change(v, dir, t, W, rule, point, dW); };

    auto finish = [&](SolveStatus status) {
        stats.status = status;
        stats.converged = status == SolveStatus::converged;
        stats.final_energy = raw_energy(v, W);
        stats.final_grad_norm = gnorm;
    };

    if (gnorm <= opts.grad_tol) {
        finish(SolveStatus::converged);
        return result;
    }

    for (int it = 0; it < opts.max_iters; ++it) {
        double slope = (grad.values.array() * dir.values.array()).sum();
        bool steepest = opts.method == DescentMethod::gradient_descent;
        if (!(slope < 0.0)) {
            dir.values = -grad.values;
            slope = -grad.values.squaredNorm();
            steepest = true;
        }

        double accepted_step = 0.0;
        double accepted_change = 0.0;
        for (int attempt = 0; attempt < 2 && accepted_step == 0.0; ++attempt) {
            double t = step;
            for (int halving = 0; halving <= opts.max_halvings; ++halving) {
                const double change = change_along(t);
                if (std::isfinite(change) && change <= opts.armijo * t * slope) {
                    accepted_step = t;
                    accepted_change = change;
                    break;
                }
                t *= opts.backtrack;
            }
            if (accepted_step == 0.0) {
                if (steepest) {
                    break;
                }
                dir.values = -grad.values;
                slope = -grad.values.squaredNorm();
                steepest = true;
                step = opts.initial_step;
            }
        }
        if (accepted_step == 0.0) {
            finish(SolveStatus::stalled);
            return result;
        }

        // try the minimizer of the quadratic model through the Armijo point once
        const double curvature = (accepted_change - slope * accepted_step) / (accepted_step * accepted_step);
        if (curvature > 0.0) {
            const double t_model = -slope / (2.0 * curvature);
            if (std::isfinite(t_model) && std::abs(t_model - accepted_step) > 1e-2 * accepted_step) {
                const double change = change_along(t_model);
                if (std::isfinite(change) && change < accepted_change && change <= opts.armijo * t_model * slope) {
                    accepted_step = t_model;
                    accepted_change = change;
                }
            }
        }
        trial.values = v.values + accepted_step * dir.values;

        std::swap(v.values, trial.values);
        E += accepted_change;
        stats.energy_history.push_back(E);
        stats.iterations = it + 1;

        VectorField grad_next = energy_gradient(v, W);
        if (!grad_next.is_finite()) {
            throw DivergenceError("minimize: gradient became non-finite");
        }
        gnorm = max_node_norm(grad_next);
        if (gnorm <= opts.grad_tol) {
            finish(SolveStatus::converged);
            return result;
        }

        const double old_dot = (grad.values.array() * dir.values.array()).sum();
        double beta = 0.0;
        if (opts.method == DescentMethod::nonlinear_cg) {
            const double denom = grad.values.squaredNorm();
            beta = std::max(0.0, (grad_next.values.array() * (grad_next.values - grad.values).array()).sum() / denom);
        }
        dir.values = -grad_next.values + beta * dir.values;
        const double new_dot = (grad_next.values.array() * dir.values.array()).sum();
        grad = std::move(grad_next);

        step = accepted_step * old_dot / new_dot;
        if (!std::isfinite(step) || step <= 0.0) {
            step = opts.initial_step;
        }
    }
    finish(SolveStatus::max_iterations);
    return result;
}

SolveResult minimize(const VectorField& g, const Potential& W, InitPolicy init, const SolveOptions& opts)
{
    return minimize(g, W, initial_field(g, W, init), opts);
}

} // namespace acmp
