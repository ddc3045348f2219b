#pragma once

#include "acmp/competitor.hpp"
#include "acmp/decompose.hpp"
#include "acmp/energy.hpp"
#include "acmp/grid.hpp"
#include "acmp/linearize.hpp"
#include "acmp/minimize.hpp"
#include "acmp/potential.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acmp {

using Json = nlohmann::ordered_json;

struct PotentialSpec {
    std::string name = "double_well_1d";
    std::optional<Eigen::VectorXd> a;
    std::optional<double> r0;
    std::optional<std::vector<Eigen::VectorXd>> wells;
};

/// Builds "double_well_1d", "triple_well_2d" or "quadratic" with overrides.
Potential make_potential(const PotentialSpec& spec);

struct DomainSpec {
    int dim = 1;
    std::vector<double> extents{1.0};
    std::string mask_file; // takes precedence over extents when set
    double h = 1.0 / 64.0;
};

DomainPtr make_domain(const DomainSpec& spec);

enum class BoundaryKind { constant, ring, tabulated };

struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::constant;
    Eigen::VectorXd value;        // constant
    std::optional<double> radius; // ring; defaults to the experiment's r
    int winding = 1;
    double phase = 0.0;
    std::string file; // tabulated: field csv on the same grid
};

/**
 * Ring data: a + radius * (cos phi, sin phi, 0, ...) with phi = winding *
 * theta + phase, where theta is the polar angle about the domain centre in
 * 2-d and 2 pi (x - x_min) / length in 1-d. For m = 1 the ring is the pair
 * a +/- radius, picked by the sign of cos phi.
 */
VectorField make_boundary_data(const BoundarySpec& spec, const DomainPtr& domain, const Potential& W, double r);

struct HypothesisOptions {
    int n_dirs = 64;
    int n_radii = 50;
    int n_samples = 4096;
};

struct OutputSpec {
    std::string report;
    std::string field_csv;
    std::string history_csv;
};

struct ExperimentConfig {
    PotentialSpec potential;
    DomainSpec domain;
    BoundarySpec boundary;
    double r = 0.1;
    bool out_of_regime = false;
    SolveOptions solver;
    int starts = 3;
    std::uint64_t seed = 0;
    int quad_nodes = kDefaultQuadNodes;
    HypothesisOptions hypotheses;
    OutputSpec output;
};

/// Throws ConfigError for malformed documents and for r >= r0/2 without
/// "out_of_regime": true.
ExperimentConfig parse_config(const Json& doc);
ExperimentConfig load_config_file(const std::string& path);
Json to_json(const ExperimentConfig& cfg);

struct MaxPrincipleCheck {
    bool holds = false;
    bool vacuous = false; // boundary radius exceeds r; never counted as a pass
    int worst_node = -1;
    double worst_value = 0.0;
};

MaxPrincipleCheck verify_max_principle(const VectorField& u, const Eigen::VectorXd& a, double r, double tol_mp);

/// 2 h (1 + max |grad W| over the in-set values of u)
double max_principle_tolerance(const VectorField& u, const Potential& W);

struct StartRecord {
    std::string label;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    SolveStats stats;
};

struct LinearizationSummary {
    int quad_nodes = kDefaultQuadNodes;
    double max_operator_norm = 0.0;
    double hessian_sample_bound = 0.0;
    double residual_fundamental = 0.0;
    double segment_max_operator_norm = 0.0;
    double residual_segment = 0.0;
    double max_asymmetry = 0.0;
};

struct ExperimentReport {
    Json config;
    std::string potential;
    bool in_regime = true;
    HypothesisReport hypotheses;
    bool hypothesis_failed = false;
    std::vector<StartRecord> starts;
    int chosen_start = -1;
    std::optional<VectorField> minimizer;

    EnergyBreakdown minimizer_energy;
    double el_residual = 0.0;
    double boundary_radius = 0.0;
    double interior_radius = 0.0;
    double overshoot = 0.0;
    double tol_mp = 0.0;
    MaxPrincipleCheck max_principle;
    CompetitorReport competitor;
    SplitEnergy split;
    double split_gap = 0.0;
    LinearizationSummary linearization;
    double tilde_coincidence = 0.0; // fraction of nodes with u~ == u
    double tilde_zero_set = 0.0;    // fraction of nodes with u~ == a
    ProofCaseTrace proof_case;
};

/// Hypothesis checks, multi-start minimization, then every diagnostic on the
/// lowest-energy start. Deterministic in (config, seed).
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// run_experiment once per grid spacing.
std::vector<ExperimentReport> run_sweep(const ExperimentConfig& cfg, const std::vector<double>& h_list);

Json to_json(const HypothesisReport& rep);
Json to_json(const EnergyBreakdown& e);
Json to_json(const SplitEnergy& s, double gap);
Json to_json(const SolveStats& s);
Json to_json(const CompetitorReport& rep);
Json to_json(const ExperimentReport& rep);
Json sweep_to_json(const std::vector<ExperimentReport>& reports);

/// Writes the report and any configured CSV dumps.
void write_outputs(const ExperimentConfig& cfg, const ExperimentReport& rep);

} // namespace acmp
