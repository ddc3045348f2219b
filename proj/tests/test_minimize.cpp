#include "acmp/errors.hpp"
#include "acmp/minimize.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace acmp;

namespace {

VectorField constant_boundary(const DomainPtr& d, const Eigen::VectorXd& fill, const Eigen::VectorXd& boundary)
{
    return set_boundary(VectorField(d, fill), [&](const Eigen::VectorXd&) { return boundary; });
}

void check_history_nonincreasing(const SolveStats& s)
{
    for (size_t k = 1; k < s.energy_history.size(); ++k) {
        REQUIRE(s.energy_history[k] <= s.energy_history[k - 1]);
    }
}

} // namespace

TEST_SUITE("minimize")
{
    TEST_CASE("closed-form linear problem")
    {
        const Potential W = make_quadratic(Eigen::VectorXd::Zero(1));
        const auto d = testing::interval(1.0 / 64.0);
        const VectorField g = constant_boundary(d, W.a, Eigen::VectorXd::Constant(1, 0.1));
        const SolveResult res = minimize(g, W, InitPolicy::harmonic, SolveOptions{});
        CHECK(res.stats.converged);
        CHECK(res.stats.status == SolveStatus::converged);
        CHECK(res.stats.final_grad_norm <= 1e-8);
        const double centre = res.field.values(0, d->index(32));
        CHECK(std::abs(centre - 0.1 / std::cosh(std::sqrt(2.0) / 2.0)) <= 2e-3);
        CHECK(interior_radius(res.field, W.a).first <= 0.1);
        check_history_nonincreasing(res.stats);
    }

    TEST_CASE("already optimal data")
    {
        const Potential W = make_triple_well_2d();
        const auto d = testing::square(1.0 / 16.0);
        const VectorField g(d, W.a);
        const SolveResult res = minimize(g, W, g, SolveOptions{});
        CHECK(res.stats.iterations <= 1);
        CHECK(res.stats.converged);
        CHECK(res.stats.final_energy == 0.0);
        CHECK(res.field.values == g.values);
    }

    TEST_CASE("a single iteration does not raise the energy")
    {
        const Potential W = make_double_well_1d();
        const auto d = testing::interval(1.0 / 32.0);
        const VectorField g = constant_boundary(d, W.a, Eigen::VectorXd::Constant(1, 1.2));
        const VectorField init = constant_boundary(d, Eigen::VectorXd::Constant(1, 0.5), Eigen::VectorXd::Constant(1, 1.2));
        SolveOptions opts;
        opts.max_iters = 1;
        const SolveResult res = minimize(g, W, init, opts);
        CHECK_FALSE(res.stats.converged);
        CHECK(res.stats.status == SolveStatus::max_iterations);
        CHECK(res.stats.iterations == 1);
        CHECK(energy(res.field, W).total <= energy(init, W).total);
    }

    TEST_CASE("boundary preserved bit-exactly and history monotone")
    {
        const Potential W = make_triple_well_2d();
        const auto d = testing::square(1.0 / 16.0);
        std::mt19937_64 rng(4);
        const VectorField g = testing::random_ball_field(d, W.a, 0.09, rng);
        for (auto method : {DescentMethod::nonlinear_cg, DescentMethod::gradient_descent}) {
            SolveOptions opts;
            opts.method = method;
            opts.max_iters = 3000;
            const SolveResult res = minimize(g, W, random_start(g, W.a, 0.09, 17), opts);
            for (int k : d->boundary_nodes()) {
                REQUIRE(res.field.values.col(k) == g.values.col(k));
            }
            check_history_nonincreasing(res.stats);
            CHECK(res.stats.energy_history.size() == static_cast<size_t>(res.stats.iterations) + 1);
        }
    }

    TEST_CASE("converged solution is a local minimum")
    {
        const Potential W = make_double_well_1d();
        const auto d = testing::interval(1.0 / 32.0);
        const VectorField g = constant_boundary(d, W.a, Eigen::VectorXd::Constant(1, 1.2));
        const SolveResult res = minimize(g, W, InitPolicy::harmonic, SolveOptions{});
        REQUIRE(res.stats.converged);
        const double J = energy(res.field, W).total;
        const double eps = 1e-4 * res.field.values.cwiseAbs().maxCoeff();
        std::mt19937_64 rng(6);
        for (int s = 0; s < 100; ++s) {
            const VectorField w = testing::random_interior_direction(d, 1, 1.0, rng);
            VectorField pert = res.field;
            pert.values += eps * w.values;
            CHECK(energy(pert, W).total >= J - 1e-12);
        }
        CHECK(el_residual(res.field, W) <= 1e-8 / d->h() * 4.0);
    }

    TEST_CASE("stalled line search keeps the best iterate")
    {
        const Potential W = make_double_well_1d();
        const auto d = testing::interval(1.0 / 16.0);
        const VectorField g = constant_boundary(d, W.a, Eigen::VectorXd::Constant(1, 1.2));
        const VectorField init = constant_boundary(d, Eigen::VectorXd::Constant(1, 0.5), Eigen::VectorXd::Constant(1, 1.2));
        SolveOptions opts;
        opts.initial_step = 1e12;
        opts.max_halvings = 1;
        const SolveResult res = minimize(g, W, init, opts);
        CHECK(res.stats.status == SolveStatus::stalled);
        CHECK_FALSE(res.stats.converged);
        CHECK(res.field.values == init.values);
    }

    TEST_CASE("harmonic extension is linear in 1-d")
    {
        const auto d = testing::interval(1.0 / 16.0);
        VectorField g(d, 2, 0.0);
        g.values.col(0) = Eigen::Vector2d(1.0, -1.0);
        g.values.col(16) = Eigen::Vector2d(3.0, 1.0);
        const VectorField h = harmonic_extension(g);
        for (int k : d->in_set_nodes()) {
            const double x = d->position(k)[0];
            CHECK(h.values(0, k) == doctest::Approx(1.0 + 2.0 * x).epsilon(1e-12));
            CHECK(h.values(1, k) == doctest::Approx(-1.0 + 2.0 * x).epsilon(1e-12));
        }
        const VectorField start = initial_field(g, make_quadratic(Eigen::Vector2d::Zero()), InitPolicy::constant_a);
        CHECK(start.values.col(5).isZero());
        CHECK(start.values.col(16) == g.values.col(16));
    }

    TEST_CASE("random starts stay in the ball and are seeded")
    {
        const auto d = testing::square(1.0 / 16.0);
        const Eigen::Vector2d a(1.0, 0.0);
        const VectorField g(d, Eigen::VectorXd(a));
        const VectorField s1 = random_start(g, a, 0.1, 42);
        const VectorField s2 = random_start(g, a, 0.1, 42);
        const VectorField s3 = random_start(g, a, 0.1, 43);
        CHECK(s1.values == s2.values);
        CHECK(s1.values != s3.values);
        for (int k : d->interior_nodes()) {
            CHECK((s1.values.col(k) - a).norm() <= 0.1);
        }
        for (int k : d->boundary_nodes()) {
            CHECK(s1.values.col(k) == g.values.col(k));
        }
    }

    TEST_CASE("invalid options and inputs")
    {
        SolveOptions o;
        o.max_iters = 0;
        CHECK_THROWS_AS(o.validate(), InvalidArgument);
        o = {};
        o.grad_tol = 0.0;
        CHECK_THROWS_AS(o.validate(), InvalidArgument);
        o = {};
        o.backtrack = 1.0;
        CHECK_THROWS_AS(o.validate(), InvalidArgument);
        o = {};
        o.armijo = 0.0;
        CHECK_THROWS_AS(o.validate(), InvalidArgument);

        const Potential W = make_double_well_1d();
        const auto d = testing::interval(1.0 / 16.0);
        const VectorField g(d, W.a);
        VectorField bad = g;
        bad.values(0, 4) = std::nan("");
        CHECK_THROWS_AS(minimize(g, W, bad, SolveOptions{}), DivergenceError);
        CHECK_THROWS_AS(minimize(bad, W, g, SolveOptions{}), InvalidField);
        CHECK_THROWS_AS(minimize(g, make_triple_well_2d(), g, SolveOptions{}), InvalidArgument);
        CHECK(to_string(SolveStatus::stalled) == "stalled");
    }
}
