#pragma once

#include "acmp/energy.hpp"
#include "acmp/grid.hpp"
#include "acmp/potential.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace acmp {

enum class DescentMethod { gradient_descent, nonlinear_cg };

struct SolveOptions {
    int max_iters = 50000;
    /// Convergence when the largest interior node norm of energy_gradient
    /// (the raw gradient, which carries the h^n cell factor) drops below this.
    double grad_tol = 1e-8;
    double initial_step = 1.0;
    double backtrack = 0.5;
    double armijo = 1e-4;
    int max_halvings = 60;
    DescentMethod method = DescentMethod::nonlinear_cg;

    /// Throws InvalidArgument on out-of-range parameters.
    void validate() const;
};

enum class SolveStatus { converged, max_iterations, stalled };

std::string to_string(SolveStatus status);

struct SolveStats {
    int iterations = 0;
    double final_grad_norm = 0.0;
    double final_energy = 0.0;
    std::vector<double> energy_history; // energy of every accepted iterate, starting with init
    bool converged = false;
    SolveStatus status = SolveStatus::max_iterations;
};

struct SolveResult {
    VectorField field;
    SolveStats stats;
};

enum class InitPolicy { harmonic, constant_a };

/// Interior values solving the discrete Laplace equation with the boundary values of `g`.
VectorField harmonic_extension(const VectorField& g);

/// Named starting fields. `harmonic` falls back to the constant a when the
/// Laplace solve does not produce a finite field.
VectorField initial_field(const VectorField& g, const Potential& W, InitPolicy policy);

/// Boundary from g, interior nodes drawn uniformly from the ball B(a, radius).
VectorField random_start(const VectorField& g, const Eigen::VectorXd& a, double radius, std::uint64_t seed);

/**
 * Minimize the discrete energy over fields whose boundary values equal those
 * of `g`. Armijo backtracking keeps the energy history nonincreasing; with
 * `nonlinear_cg` the direction is Polak-Ribiere+ with steepest-descent
 * restarts. Output boundary values are bit-equal to g.
 *
 * A line search that exhausts `max_halvings` (even after a steepest-descent
 * restart) ends the solve with status `stalled` and the best iterate.
 * Throws DivergenceError if the starting energy or a gradient is non-finite.
 */
SolveResult minimize(const VectorField& g, const Potential& W, const VectorField& init, const SolveOptions& opts);

SolveResult minimize(const VectorField& g, const Potential& W, InitPolicy init, const SolveOptions& opts);

} // namespace acmp
