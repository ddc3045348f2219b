#include "acmp/competitor.hpp"
#include "acmp/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace acmp;

namespace {

/// a + rho(x) e1 on a 1-d grid, m = 2.
VectorField radial_profile(const DomainPtr& d, const Eigen::Vector2d& a, const std::function<double(double)>& rho)
{
    VectorField u(d, 2, 0.0);
    for (int k : d->in_set_nodes()) {
        u.values.col(k) = a + rho(d->position(k)[0]) * Eigen::Vector2d(1.0, 0.0);
    }
    return u;
}

} // namespace

TEST_SUITE("competitor")
{
    TEST_CASE("cutoff values")
    {
        for (double r : {1.0, 0.25, 0.2}) {
            CAPTURE(r);
            CHECK(alpha(0.5 * r, r) == 1.0);
            CHECK(alpha(1.5 * r, r) == doctest::Approx(0.5).epsilon(1e-15));
            CHECK(alpha(2.0 * r, r) == 0.0);
            CHECK(alpha(r, r) == 1.0);
            CHECK(alpha(3.0 * r, r) == 0.0);
            CHECK(truncation_profile(0.5 * r, r) == 0.5 * r);
            CHECK(truncation_profile(1.5 * r, r) == doctest::Approx(0.5 * r).epsilon(1e-15));
            CHECK(truncation_profile(2.5 * r, r) == 0.0);
            CHECK(truncation_profile(r, r) == r);
            CHECK(truncation_profile(2.0 * r, r) == 0.0);
        }
        CHECK(alpha(1.5, 1.0) == 0.5);
        CHECK(truncation_profile(1.5, 1.0) == 0.5);
        CHECK_THROWS_AS(alpha(0.1, 0.0), InvalidArgument);
        CHECK_THROWS_AS(truncation_profile(0.1, -1.0), InvalidArgument);
    }

    TEST_CASE("profile is 1-Lipschitz and below the identity")
    {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> tau(0.0, 1.0);
        const double r = 0.2;
        for (int s = 0; s < 10000; ++s) {
            const double t1 = tau(rng);
            const double t2 = tau(rng);
            const double p1 = truncation_profile(t1, r);
            REQUIRE(std::abs(p1 - truncation_profile(t2, r)) <= std::abs(t1 - t2) + 1e-15);
            REQUIRE(p1 <= t1);
            REQUIRE(p1 >= 0.0);
            REQUIRE(p1 <= r);
            REQUIRE(p1 == std::min(t1, r) * alpha(t1, r));
        }
    }

    TEST_CASE("competitor map")
    {
        const Eigen::Vector2d a(1.0, 0.0);
        const double r = 0.1;
        const Eigen::VectorXd inside = a + Eigen::Vector2d(0.06, -0.07);
        CHECK(competitor_map(inside, a, r) == inside);
        CHECK(competitor_map(a, a, r) == Eigen::VectorXd(a));
        const Eigen::VectorXd band = competitor_map(a + 1.5 * r * Eigen::Vector2d(1.0, 0.0), a, r);
        CHECK((band - a - 0.5 * r * Eigen::Vector2d(1.0, 0.0)).norm() <= 1e-16);
        CHECK(competitor_map(a + 3.0 * r * Eigen::Vector2d(0.6, 0.8), a, r) == Eigen::VectorXd(a));
    }

    TEST_CASE("u tilde")
    {
        const Eigen::Vector2d a(0.0, 0.0);
        const double r = 0.25;
        const auto d = testing::interval(1.0 / 8.0);
        std::mt19937_64 rng(8);
        const VectorField small = testing::random_ball_field(d, a, r, rng);
        CHECK(build_u_tilde(small, a, r).values == small.values);

        VectorField u(d, Eigen::VectorXd(a));
        u.values.col(2) = a + 1.5 * r * Eigen::Vector2d(1.0, 0.0);
        u.values.col(5) = a + 3.0 * r * Eigen::Vector2d(0.0, 1.0);
        const VectorField t = build_u_tilde(u, a, r);
        CHECK(t.values(0, 2) == 0.5 * r);
        CHECK(t.values(1, 2) == 0.0);
        CHECK(t.values.col(5) == Eigen::VectorXd(a));
    }

    TEST_CASE("u hat")
    {
        const Eigen::Vector2d a(0.0, 0.0);
        const double r = 0.25;
        const auto d = testing::interval(1.0 / 32.0);

        const VectorField on_sphere = radial_profile(d, a, [&](double) { return r; });
        CHECK(build_u_hat(on_sphere, a, r).values == on_sphere.values);

        const Potential W = make_quadratic(Eigen::VectorXd(a), 4.0 * r);
        const VectorField band = radial_profile(d, a, [&](double x) { return 1.5 * r + 0.4 * r * std::sin(2.0 * std::numbers::pi * x); });
        const VectorField hat = build_u_hat(band, a, r);
        for (int k : d->in_set_nodes()) {
            CHECK(std::abs((hat.values.col(k) - a).norm() - r) <= 1e-15);
        }
        CHECK(energy(hat, W).total < energy(band, W).total);

        VectorField low = on_sphere;
        low.values.col(4) = a + 0.9 * r * Eigen::Vector2d(0.0, 1.0);
        CHECK_THROWS_AS(build_u_hat(low, a, r), PreconditionViolation);
    }

    TEST_CASE("manufactured bump")
    {
        const Potential W = make_triple_well_2d();
        const double r = 0.08;
        const auto d = testing::square(1.0 / 16.0);
        VectorField u(d, 2, 0.0);
        for (int k : d->in_set_nodes()) {
            const Eigen::VectorXd x = d->position(k);
            const double bump =
                d->is_boundary(k) ? 0.0 : std::sin(std::numbers::pi * x[0]) * std::sin(std::numbers::pi * x[1]);
            const double theta = 2.0 * x[0] - x[1];
            // boundary just inside distance r so rounding in |u - a| cannot push it out
            const double rho = d->is_boundary(k) ? r * (1.0 - 1e-15) : r + 1.5 * r * bump;
            u.values.col(k) = W.a + rho * Eigen::Vector2d(std::cos(theta), std::sin(theta));
        }
        const CompetitorReport rep = verify_competitor(u, W.a, r, W);
        CHECK(rep.boundary_hypothesis);
        CHECK(rep.boundary_equal);
        CHECK(rep.sup_bound <= r + 1e-12);
        CHECK(rep.energy_decreased);
        CHECK(rep.energy_tilde.total < rep.energy_u.total);
        CHECK(rep.termwise.all());
        CHECK(rep.linkwise.all());
    }

    TEST_CASE("fields inside the ball are left alone")
    {
        const Potential W = make_double_well_1d();
        std::mt19937_64 rng(9);
        const VectorField u = testing::random_ball_field(testing::interval(1.0 / 16.0), W.a, 0.1, rng);
        const CompetitorReport rep = verify_competitor(u, W.a, 0.1, W);
        CHECK(rep.energy_tilde.total == rep.energy_u.total);
        CHECK(rep.boundary_equal);
        CHECK(rep.termwise.all());
    }

    TEST_CASE("random fields satisfy every termwise inequality")
    {
        std::mt19937_64 rng(10);
        const Potential W = make_triple_well_2d();
        const double r = 0.4 * W.r0;
        const auto d = testing::square(1.0 / 8.0);
        for (int s = 0; s < 50; ++s) {
            const VectorField u = testing::random_ball_field(d, W.a, 3.0 * r, rng);
            const CompetitorReport rep = verify_competitor(u, W.a, r, W);
            CHECK(rep.termwise.all());
            CHECK(rep.linkwise.all());
            CHECK(rep.energy_decreased);
            CHECK(rep.sup_bound <= r + 1e-12);
        }
    }

    TEST_CASE("coincidence measure")
    {
        const Eigen::VectorXd a = Eigen::VectorXd::Constant(1, 1.0);
        const double r = 0.1;
        const double tol = 1e-9;
        const auto d = testing::interval(1.0 / 16.0);
        std::mt19937_64 rng(13);
        const VectorField u = testing::random_ball_field(d, a, 1.0, rng);
        CHECK(coincidence_measure(u, u, tol) == 1.0);
        VectorField shifted = u;
        shifted.values.array() += 10.0 * tol;
        CHECK(coincidence_measure(u, shifted, tol) == 0.0);

        // 4 of the 16 nodes sit beyond 2r; their competitor values are exactly a
        const auto d16 = build_box_domain(1, std::vector<double>{15.0 / 16.0}, 1.0 / 16.0);
        REQUIRE(d16->in_set_nodes().size() == 16);
        VectorField v(d16, 1, 0.0);
        for (int k : d16->in_set_nodes()) {
            v.values(0, k) = 1.0 + (k % 4 == 0 ? 2.5 * r : 0.5 * r);
        }
        const VectorField t = build_u_tilde(v, a, r);
        CHECK(coincidence_measure(t, VectorField(d16, a), 0.0) >= 0.25);
        CHECK_THROWS_AS(coincidence_measure(u, v, tol), InvalidArgument);
    }

    TEST_CASE("proof-case labels")
    {
        const Eigen::Vector2d a(0.0, 0.0);
        const double r = 0.2;
        const auto d = testing::interval(1.0 / 16.0);
        auto labelled = [&](const std::function<double(double)>& rho) {
            return trace_proof_cases(radial_profile(d, a, rho), a, r);
        };
        CHECK(labelled([&](double) { return 1.5 * r; }).label == ProofCase::band_r_2r);
        const ProofCaseTrace exceeds = labelled([&](double x) { return r + 2.0 * r * x; });
        CHECK(exceeds.label == ProofCase::exceeds_2r);
        CHECK(exceeds.argmax == 16);
        CHECK(exceeds.max_rho == doctest::Approx(3.0 * r));
        const ProofCaseTrace mixed = labelled([&](double x) { return 0.5 * r + r * x; });
        CHECK(mixed.label == ProofCase::mixed);
        CHECK(mixed.argmin == 0);
        CHECK(labelled([&](double x) { return r * x; }).label == ProofCase::all_within_r);
        // ties go to the lower case
        CHECK(labelled([&](double) { return r * (1.0 + 1e-14); }).label == ProofCase::all_within_r);
        CHECK(labelled([&](double x) { return r + r * x * (1.0 + 1e-14); }).label == ProofCase::band_r_2r);
        CHECK(to_string(ProofCase::exceeds_2r) == "EXCEEDS_2R");
        CHECK(to_string(ProofCase::mixed) == "MIXED");
    }
}
