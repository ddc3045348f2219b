#include "acmp/decompose.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace acmp;

namespace {

double weighted_measure(const Domain& d)
{
    double total = 0.0;
    for (int k : d.in_set_nodes()) {
        total += d.node_weight(k) * d.cell_volume();
    }
    return total;
}

VectorField rotating_field(const DomainPtr& d, const Eigen::Vector2d& a)
{
    VectorField u(d, 2, 0.0);
    for (int k : d->in_set_nodes()) {
        const Eigen::VectorXd x = d->position(k);
        const double R = 0.3 + 0.2 * x[0] * x[1];
        const double theta = 3.0 * x[0] + 1.0 * x[1];
        u.values.col(k) = a + R * Eigen::Vector2d(std::cos(theta), std::sin(theta));
    }
    return u;
}

} // namespace

TEST_SUITE("decompose")
{
    TEST_CASE("field at the well has empty A+")
    {
        const Eigen::Vector2d a(1.0, 0.0);
        const VectorField u(testing::square(0.125), Eigen::VectorXd(a));
        const PolarDecomposition pd = polar(u, a);
        CHECK(pd.rho.values.isZero());
        CHECK(pd.nu.values.isZero());
        for (int k : u.domain->in_set_nodes()) {
            CHECK_FALSE(pd.in_a_plus(k));
        }
        const SplitEnergy s = split_energy(u, a, make_triple_well_2d());
        CHECK(s.total == 0.0);
    }

    TEST_CASE("normalisation of a 3-4-5 offset")
    {
        const Eigen::Vector2d a(-0.5, 0.25);
        const double t = 0.125;
        const VectorField u(testing::square(0.25), Eigen::VectorXd(a + t * Eigen::Vector2d(3.0, 4.0)));
        const PolarDecomposition pd = polar(u, a);
        for (int k : u.domain->in_set_nodes()) {
            CHECK(pd.rho.values[k] == doctest::Approx(5.0 * t).epsilon(1e-15));
            CHECK(pd.nu.values(0, k) == doctest::Approx(0.6).epsilon(1e-15));
            CHECK(pd.nu.values(1, k) == doctest::Approx(0.8).epsilon(1e-15));
        }
    }

    TEST_CASE("reconstruction and unit directions on random fields")
    {
        std::mt19937_64 rng(12);
        const Eigen::Vector2d a(0.2, -0.1);
        const auto d = testing::square(1.0 / 16.0);
        for (int s = 0; s < 20; ++s) {
            VectorField u = testing::random_ball_field(d, a, 2.0, rng);
            u.values.col(d->index(3, 3)) = a; // one node in A0
            const PolarDecomposition pd = polar(u, a);
            CHECK(pd.eps_zero == doctest::Approx(default_eps_zero(u, a)));
            CHECK_FALSE(pd.in_a_plus(d->index(3, 3)));
            CHECK(pd.nu.values.allFinite());
            for (int k : d->in_set_nodes()) {
                CHECK(pd.rho.values[k] >= 0.0);
                if (pd.in_a_plus(k)) {
                    CHECK(std::abs(pd.nu.values.col(k).norm() - 1.0) <= 1e-12);
                    CHECK((a + pd.rho.values[k] * pd.nu.values.col(k) - u.values.col(k)).norm() <= 1e-12);
                }
            }
            const SplitEnergy e = split_energy(u, a, make_triple_well_2d());
            CHECK(e.rho_dirichlet >= 0.0);
            CHECK(e.angular >= 0.0);
            CHECK(e.potential >= 0.0);
            CHECK(e.total == e.rho_dirichlet + e.angular + e.potential);
        }
    }

    TEST_CASE("tiny offsets fall in A0")
    {
        const Eigen::VectorXd a = Eigen::VectorXd::Constant(1, 1.0);
        VectorField u(testing::interval(0.125), a);
        u.values(0, 3) = 1.0 + 1e-14;
        u.values(0, 4) = 2.0;
        const PolarDecomposition pd = polar(u, a);
        CHECK_FALSE(pd.in_a_plus(3));
        CHECK(pd.in_a_plus(4));
        CHECK(pd.rho.values[3] > 0.0);
        CHECK(polar(u, a, 0.0).in_a_plus(3));
    }

    TEST_CASE("constant offset field")
    {
        const Potential W = make_triple_well_2d();
        const Eigen::Vector2d c(0.05, -0.07);
        const auto d = testing::square(1.0 / 8.0);
        const VectorField u(d, Eigen::VectorXd(W.a + c));
        const SplitEnergy s = split_energy(u, W.a, W);
        CHECK(s.rho_dirichlet == 0.0);
        CHECK(s.angular == 0.0);
        CHECK(s.potential == doctest::Approx(weighted_measure(*d) * W.eval(Eigen::VectorXd(W.a + c))).epsilon(1e-14));
    }

    TEST_CASE("scalar fields split exactly")
    {
        const Potential W = make_double_well_1d();
        const auto d = testing::interval(1.0 / 32.0);
        VectorField u(d, 1, 0.0);
        for (int k : d->in_set_nodes()) {
            u.values(0, k) = 1.4 + 0.3 * std::sin(7.0 * d->position(k)[0]);
        }
        const SplitEnergy s = split_energy(u, W.a, W);
        CHECK(s.angular == 0.0);
        CHECK(std::abs(s.rho_dirichlet - dirichlet_term(u)) <= 1e-12 * (1.0 + dirichlet_term(u)));
        CHECK(split_consistency(u, W.a, W) <= 1e-12);
    }

    TEST_CASE("constant-direction vector fields split exactly")
    {
        const Potential W = make_triple_well_2d();
        const Eigen::Vector2d nu0(0.6, -0.8);
        const auto d = testing::square(1.0 / 16.0);
        VectorField u(d, 2, 0.0);
        for (int k : d->in_set_nodes()) {
            const Eigen::VectorXd x = d->position(k);
            u.values.col(k) = W.a + (0.05 + 0.1 * x[0] * x[0] + 0.03 * x[1]) * nu0;
        }
        CHECK(split_consistency(u, W.a, W) <= 1e-12);
    }

    TEST_CASE("rotating field: split gap shrinks under refinement")
    {
        const Potential W = make_quadratic(Eigen::Vector2d(0.0, 0.0));
        std::vector<double> gaps;
        for (double h : {1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0}) {
            const VectorField u = rotating_field(testing::square(h), W.a);
            gaps.push_back(split_consistency(u, W.a, W));
        }
        CHECK(gaps[0] > 0.0);
        for (size_t s = 1; s < gaps.size(); ++s) {
            CHECK(gaps[s] > 0.0);
            CHECK(std::log2(gaps[s - 1] / gaps[s]) >= 1.0);
        }
    }

    TEST_CASE("per-link pieces sum to the split terms")
    {
        const Eigen::Vector2d a(0.0, 0.0);
        const VectorField u = rotating_field(testing::square(1.0 / 16.0), a);
        const PolarDecomposition pd = polar(u, a);
        const SplitLinkTerms links = split_link_terms(pd);
        REQUIRE(links.rho_dirichlet.size() == u.domain->links().size());
        double rd = 0.0;
        double ang = 0.0;
        for (size_t l = 0; l < links.angular.size(); ++l) {
            rd += links.rho_dirichlet[l];
            ang += links.angular[l];
        }
        const SplitEnergy s = split_energy(pd, a, make_quadratic(Eigen::VectorXd(a)));
        CHECK(rd == doctest::Approx(s.rho_dirichlet).epsilon(1e-13));
        CHECK(ang == doctest::Approx(s.angular).epsilon(1e-13));
    }
}
