#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acmp {

/// Sampled radial derivatives below -kMonotonicityTol count as violations.
inline constexpr double kMonotonicityTol = 1e-10;

/// Step used when a potential has no analytic Hessian.
inline constexpr double kDefaultHessianStep = 1e-4;

/**
 * Multi-well energy density W : R^m -> R.
 *
 * `a` is the well under study and `r0` the radius on which r -> W(a + r nu)
 * is expected to be nondecreasing. `known_zeros` lists every zero of W the
 * constructor knows about (including `a`); the positivity checker probes
 * them in addition to its samples.
 *
 * Potentials are immutable once built and safe to share between threads.
 */
struct Potential {
    using EvalFn = std::function<double(std::span<const double>)>;
    using GradFn = std::function<void(std::span<const double>, std::span<double>)>;
    using HessFn = std::function<Eigen::MatrixXd(std::span<const double>)>;

    std::string name;
    int m = 0;
    Eigen::VectorXd a;
    double r0 = 0.0;
    std::vector<Eigen::VectorXd> known_zeros;

    EvalFn eval_fn;
    GradFn grad_fn;
    HessFn hess_fn; // empty: central differences of grad_fn

    double eval(std::span<const double> u) const { return eval_fn(u); }
    double eval(const Eigen::VectorXd& u) const { return eval_fn({u.data(), static_cast<size_t>(u.size())}); }

    void grad(std::span<const double> u, std::span<double> out) const { grad_fn(u, out); }
    Eigen::VectorXd grad(const Eigen::VectorXd& u) const;

    /// Analytic Hessian when available, otherwise `hess_fd_fallback` at kDefaultHessianStep.
    Eigen::MatrixXd hess(const Eigen::VectorXd& u) const;

    bool has_analytic_hessian() const { return static_cast<bool>(hess_fn); }
};

/// W(u) = (1 - u^2)^2 on R; `a` must be one of the wells +1, -1.
Potential make_double_well_1d(double a = 1.0, double r0 = 0.5);

/// The three wells of the default triple well: cube roots of unity in R^2.
std::vector<Eigen::VectorXd> default_triple_wells();

/// W(u) = prod_i |u - w_i|^2 on R^2. `a` defaults to the first well and must be one of them.
Potential make_triple_well_2d(std::vector<Eigen::VectorXd> wells = default_triple_wells(),
                              std::optional<Eigen::VectorXd> a = std::nullopt,
                              double r0 = 0.2);

/// W(u) = |u - a|^2. Radially increasing everywhere, so any r0 > 0 is admissible.
Potential make_quadratic(Eigen::VectorXd a, double r0 = 0.4);

/// Symmetrized central-difference Hessian built from W.grad.
Eigen::MatrixXd hess_fd_fallback(const Potential& W, const Eigen::VectorXd& u, double h);

// ---------------------------------------------------------------------------
// Hypothesis checks

struct RadialCheck {
    bool passed = true;
    double worst_violation = 0.0; // max over samples of -d/dr W(a + r nu)
    Eigen::VectorXd witness_direction;
    double witness_radius = 0.0;
    int n_dirs = 0;
    int n_radii = 0;
};

struct PositivityCheck {
    bool passed = true;
    double worst_violation = 0.0; // -min W over the punctured ball
    Eigen::VectorXd witness;
    int n_samples = 0;       // requested samples
    int n_zeros_probed = 0;  // known zeros that fell inside the punctured ball
};

/// Sampling evidence for the hypotheses on W; a passing report is not a proof.
struct HypothesisReport {
    std::optional<RadialCheck> radial;
    std::optional<PositivityCheck> positivity;

    bool radial_monotone() const { return radial && radial->passed; }
    bool positive_on_punctured_ball() const { return positivity && positivity->passed; }
    bool all_passed() const { return radial_monotone() && positive_on_punctured_ball(); }
};

HypothesisReport merge(HypothesisReport lhs, const HypothesisReport& rhs);

/// Unit directions used by the radial check: {+1,-1} for m = 1, equispaced
/// angles for m = 2, a fixed-seed uniform sample otherwise.
std::vector<Eigen::VectorXd> sphere_directions(int m, int n_dirs);

HypothesisReport check_radial_monotonicity(const Potential& W, int n_dirs, int n_radii);

/// Probes W on 0 < |u - a| < 2 r0 (strict positivity required).
HypothesisReport check_positivity_punctured(const Potential& W, int n_samples);

} // namespace acmp
