#include "acmp/harness.hpp"

#include "acmp/errors.hpp"
#include "acmp/io.hpp"

#include <cmath>
#include <limits>
#include <filesystem>
#include <fstream>
#include <numbers>

namespace acmp {

namespace {

Json vec_json(const Eigen::VectorXd& v)
{
    Json arr = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        arr.push_back(v[k]);
    }
    return arr;
}

Eigen::VectorXd vec_from_json(const Json& j, const char* what)
{
    if (j.is_number()) {
        return Eigen::VectorXd::Constant(1, j.get<double>());
    }
    if (!j.is_array() || j.empty()) {
        throw ConfigError(std::string(what) + ": expected a nonempty numeric array");
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (size_t k = 0; k < j.size(); ++k) {
        v[static_cast<Eigen::Index>(k)] = j[k].get<double>();
    }
    return v;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string method_name(DescentMethod m)
{
    return m == DescentMethod::nonlinear_cg ? "cg" : "gd";
}

std::string boundary_kind_name(BoundaryKind k)
{
    switch (k) {
    case BoundaryKind::constant:
        return "constant";
    case BoundaryKind::ring:
        return "ring";
    case BoundaryKind::tabulated:
        return "tabulated";
    }
    return "constant";
}

} // namespace

Potential make_potential(const PotentialSpec& spec)
{
    if (spec.name == "double_well_1d") {
        const double a = spec.a ? (*spec.a)[0] : 1.0;
        if (spec.a && spec.a->size() != 1) {
            throw InvalidArgument("double_well_1d: a must have one component");
        }
        return make_double_well_1d(a, spec.r0.value_or(0.5));
    }
    if (spec.name == "triple_well_2d") {
        return make_triple_well_2d(spec.wells.value_or(default_triple_wells()), spec.a, spec.r0.value_or(0.2));
    }
    if (spec.name == "quadratic") {
        return make_quadratic(spec.a.value_or(Eigen::VectorXd::Zero(2)), spec.r0.value_or(0.4));
    }
    throw InvalidArgument("unknown potential '" + spec.name + "'");
}

DomainPtr make_domain(const DomainSpec& spec)
{
    if (!spec.mask_file.empty()) {
        return build_masked_domain(read_mask_file(spec.mask_file), spec.h);
    }
    return build_box_domain(spec.dim, spec.extents, spec.h);
}

VectorField make_boundary_data(const BoundarySpec& spec, const DomainPtr& domain, const Potential& W, double r)
{
    VectorField g(domain, W.a);
    switch (spec.kind) {
    case BoundaryKind::constant: {
        if (spec.value.size() != W.m) {
            throw ConfigError("boundary: constant value has the wrong dimension");
        }
        const Eigen::VectorXd value = spec.value;
        return set_boundary(g, [&](const Eigen::VectorXd&) { return value; });
    }
    case BoundaryKind::ring: {
        const double radius = spec.radius.value_or(r);
        const Eigen::VectorXd centre = domain->center();
        const double length = domain->h() * (domain->nx() - 1);
        const double x_min = centre[0] - 0.5 * length;
        return set_boundary(g, [&](const Eigen::VectorXd& x) {
            const double theta = domain->dim() == 2 ? std::atan2(x[1] - centre[1], x[0] - centre[0])
                                                    : 2.0 * std::numbers::pi * (x[0] - x_min) / length;
            const double phi = spec.winding * theta + spec.phase;
            Eigen::VectorXd offset = Eigen::VectorXd::Zero(W.m);
            if (W.m == 1) {
                offset[0] = std::cos(phi) >= 0.0 ? radius : -radius;
            } else {
                offset[0] = radius * std::cos(phi);
                offset[1] = radius * std::sin(phi);
            }
            // keep rounded values inside the closed ball of the requested radius
            Eigen::VectorXd value = W.a + offset;
            while ((value - W.a).norm() > radius) {
                offset *= 1.0 - 1e-15;
                value = W.a + offset;
            }
            return value;
        });
    }
    case BoundaryKind::tabulated: {
        const VectorField table = read_field_csv_file(spec.file, domain->h());
        if (table.m != W.m) {
            throw ConfigError("boundary: tabulated field has the wrong dimension");
        }
        for (int k : domain->boundary_nodes()) {
            const auto [i, j] = domain->grid_index(k);
            if (i >= table.domain->nx() || j >= table.domain->ny()) {
                throw ConfigError("boundary: tabulated field does not cover the domain");
            }
            const int t = table.domain->index(i, j);
            if (!table.domain->in_set(t)) {
                throw ConfigError("boundary: tabulated field misses a boundary node");
            }
            g.values.col(k) = table.values.col(t);
        }
        return g;
    }
    }
    return g;
}

ExperimentConfig parse_config(const Json& doc)
{
    ExperimentConfig cfg;
    try {
        if (!doc.is_object()) {
            throw ConfigError("config must be a JSON object");
        }
        if (doc.contains("potential")) {
            const Json& p = doc.at("potential");
            cfg.potential.name = p.value("name", cfg.potential.name);
            if (p.contains("a")) {
                cfg.potential.a = vec_from_json(p.at("a"), "potential.a");
            }
            if (p.contains("r0")) {
                cfg.potential.r0 = p.at("r0").get<double>();
            }
            if (p.contains("wells")) {
                std::vector<Eigen::VectorXd> wells;
                for (const auto& w : p.at("wells")) {
                    wells.push_back(vec_from_json(w, "potential.wells"));
                }
                cfg.potential.wells = wells;
            }
        }
        if (doc.contains("domain")) {
            const Json& d = doc.at("domain");
            cfg.domain.dim = d.value("dim", cfg.domain.dim);
            if (d.contains("extents")) {
                cfg.domain.extents = d.at("extents").get<std::vector<double>>();
            } else {
                cfg.domain.extents.assign(static_cast<size_t>(cfg.domain.dim), 1.0);
            }
            cfg.domain.mask_file = d.value("mask_file", std::string());
            cfg.domain.h = d.value("h", cfg.domain.h);
        }
        cfg.r = doc.value("r", cfg.r);
        cfg.out_of_regime = doc.value("out_of_regime", false);
        cfg.starts = doc.value("starts", cfg.starts);
        cfg.seed = doc.value("seed", cfg.seed);
        cfg.quad_nodes = doc.value("quad_nodes", cfg.quad_nodes);

        if (doc.contains("boundary")) {
            const Json& b = doc.at("boundary");
            const std::string type = b.value("type", std::string("constant"));
            if (type == "constant") {
                cfg.boundary.kind = BoundaryKind::constant;
                if (!b.contains("value")) {
                    throw ConfigError("boundary: constant boundary needs 'value'");
                }
                cfg.boundary.value = vec_from_json(b.at("value"), "boundary.value");
            } else if (type == "ring") {
                cfg.boundary.kind = BoundaryKind::ring;
                if (b.contains("radius")) {
                    cfg.boundary.radius = b.at("radius").get<double>();
                }
                cfg.boundary.winding = b.value("winding", 1);
                cfg.boundary.phase = b.value("phase", 0.0);
            } else if (type == "tabulated") {
                cfg.boundary.kind = BoundaryKind::tabulated;
                cfg.boundary.file = b.at("file").get<std::string>();
            } else {
                throw ConfigError("boundary: unknown type '" + type + "'");
            }
        } else {
            cfg.boundary.kind = BoundaryKind::ring;
        }

        if (doc.contains("solver")) {
            const Json& s = doc.at("solver");
            SolveOptions& o = cfg.solver;
            o.max_iters = s.value("max_iters", o.max_iters);
            o.grad_tol = s.value("grad_tol", o.grad_tol);
            o.initial_step = s.value("initial_step", o.initial_step);
            o.backtrack = s.value("backtrack", o.backtrack);
            o.armijo = s.value("armijo", o.armijo);
            o.max_halvings = s.value("max_halvings", o.max_halvings);
            const std::string method = s.value("method", method_name(o.method));
            if (method == "cg") {
                o.method = DescentMethod::nonlinear_cg;
            } else if (method == "gd") {
                o.method = DescentMethod::gradient_descent;
            } else {
                throw ConfigError("solver: method must be 'cg' or 'gd'");
            }
        }
        if (doc.contains("hypotheses")) {
            const Json& h = doc.at("hypotheses");
            cfg.hypotheses.n_dirs = h.value("n_dirs", cfg.hypotheses.n_dirs);
            cfg.hypotheses.n_radii = h.value("n_radii", cfg.hypotheses.n_radii);
            cfg.hypotheses.n_samples = h.value("n_samples", cfg.hypotheses.n_samples);
        }
        if (doc.contains("output")) {
            const Json& o = doc.at("output");
            cfg.output.report = o.value("report", std::string());
            cfg.output.field_csv = o.value("field_csv", std::string());
            cfg.output.history_csv = o.value("history_csv", std::string());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    try {
        cfg.solver.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (!(cfg.r > 0.0)) {
        throw ConfigError("config: r must be positive");
    }
    if (cfg.starts < 1) {
        throw ConfigError("config: starts must be >= 1");
    }
    if (cfg.quad_nodes < 2) {
        throw ConfigError("config: quad_nodes must be >= 2");
    }
    Potential W;
    try {
        W = make_potential(cfg.potential);
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (cfg.boundary.kind == BoundaryKind::constant && cfg.boundary.value.size() != W.m) {
        throw ConfigError("boundary: constant value has the wrong dimension");
    }
    if (!(cfg.r < 0.5 * W.r0) && !cfg.out_of_regime) {
        throw ConfigError("config: r must be below r0/2 unless \"out_of_regime\" is set");
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config " + path);
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config " + path + ": " + e.what());
    }
    // input files are resolved relative to the config file
    const auto base = std::filesystem::path(path).parent_path();
    auto resolve = [&](Json& node, const char* key) {
        if (node.is_object() && node.contains(key) && node.at(key).is_string()) {
            const std::filesystem::path p = node.at(key).get<std::string>();
            if (!p.empty() && p.is_relative()) {
                node[key] = (base / p).string();
            }
        }
    };
    if (doc.contains("domain")) {
        resolve(doc["domain"], "mask_file");
    }
    if (doc.contains("boundary")) {
        resolve(doc["boundary"], "file");
    }
    return parse_config(doc);
}

Json to_json(const ExperimentConfig& cfg)
{
    Json j;
    Json p;
    p["name"] = cfg.potential.name;
    if (cfg.potential.a) {
        p["a"] = vec_json(*cfg.potential.a);
    }
    if (cfg.potential.r0) {
        p["r0"] = *cfg.potential.r0;
    }
    if (cfg.potential.wells) {
        Json wells = Json::array();
        for (const auto& w : *cfg.potential.wells) {
            wells.push_back(vec_json(w));
        }
        p["wells"] = wells;
    }
    j["potential"] = p;
    Json d;
    d["dim"] = cfg.domain.dim;
    d["extents"] = cfg.domain.extents;
    if (!cfg.domain.mask_file.empty()) {
        d["mask_file"] = cfg.domain.mask_file;
    }
    d["h"] = cfg.domain.h;
    j["domain"] = d;
    Json b;
    b["type"] = boundary_kind_name(cfg.boundary.kind);
    switch (cfg.boundary.kind) {
    case BoundaryKind::constant:
        b["value"] = vec_json(cfg.boundary.value);
        break;
    case BoundaryKind::ring:
        if (cfg.boundary.radius) {
            b["radius"] = *cfg.boundary.radius;
        }
        b["winding"] = cfg.boundary.winding;
        b["phase"] = cfg.boundary.phase;
        break;
    case BoundaryKind::tabulated:
        b["file"] = cfg.boundary.file;
        break;
    }
    j["boundary"] = b;
    j["r"] = cfg.r;
    j["out_of_regime"] = cfg.out_of_regime;
    Json s;
    s["max_iters"] = cfg.solver.max_iters;
    s["grad_tol"] = cfg.solver.grad_tol;
    s["initial_step"] = cfg.solver.initial_step;
    s["backtrack"] = cfg.solver.backtrack;
    s["armijo"] = cfg.solver.armijo;
    s["max_halvings"] = cfg.solver.max_halvings;
    s["method"] = method_name(cfg.solver.method);
    j["solver"] = s;
    j["starts"] = cfg.starts;
    j["seed"] = cfg.seed;
    j["quad_nodes"] = cfg.quad_nodes;
    j["hypotheses"] = {{"n_dirs", cfg.hypotheses.n_dirs},
                       {"n_radii", cfg.hypotheses.n_radii},
                       {"n_samples", cfg.hypotheses.n_samples}};
    j["output"] = {{"report", cfg.output.report},
                   {"field_csv", cfg.output.field_csv},
                   {"history_csv", cfg.output.history_csv}};
    return j;
}

MaxPrincipleCheck verify_max_principle(const VectorField& u, const Eigen::VectorXd& a, double r, double tol_mp)
{
    MaxPrincipleCheck check;
    check.vacuous = boundary_radius(u, a) > r + 1e-12;
    const auto [worst, node] = interior_radius(u, a);
    check.worst_value = worst;
    check.worst_node = node;
    check.holds = !check.vacuous && worst <= r + tol_mp;
    return check;
}

double max_principle_tolerance(const VectorField& u, const Potential& W)
{
    double max_grad = 0.0;
    Eigen::VectorXd g(u.m);
    for (int k : u.domain->in_set_nodes()) {
        W.grad(u.node_span(k), {g.data(), static_cast<size_t>(u.m)});
        max_grad = std::max(max_grad, g.norm());
    }
    return 2.0 * u.domain->h() * (1.0 + max_grad);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg)
{
    ExperimentReport rep;
    rep.config = to_json(cfg);

    const Potential W = make_potential(cfg.potential);
    rep.potential = W.name;
    rep.in_regime = cfg.r < 0.5 * W.r0;
    const DomainPtr domain = make_domain(cfg.domain);
    const VectorField g = make_boundary_data(cfg.boundary, domain, W, cfg.r);

    rep.hypotheses = merge(check_radial_monotonicity(W, cfg.hypotheses.n_dirs, cfg.hypotheses.n_radii),
                           check_positivity_punctured(W, cfg.hypotheses.n_samples));
    rep.hypothesis_failed = !rep.hypotheses.all_passed();

    std::vector<VectorField> fields;
    for (int s = 0; s < cfg.starts; ++s) {
        StartRecord record;
        std::optional<VectorField> init;
        if (s == 0) {
            record.label = "harmonic";
            init = initial_field(g, W, InitPolicy::harmonic);
        } else {
            record.label = "random";
            record.seed = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(s)));
            init = random_start(g, W.a, cfg.r, record.seed);
        }
        try {
            SolveResult res = minimize(g, W, *init, cfg.solver);
            record.ok = true;
            record.stats = std::move(res.stats);
            fields.push_back(std::move(res.field));
        } catch (const std::runtime_error& e) {
            record.ok = false;
            record.error = e.what();
            fields.push_back(*init);
        }
        rep.starts.push_back(std::move(record));
    }
    for (int s = 0; s < cfg.starts; ++s) {
        const auto& rec = rep.starts[static_cast<size_t>(s)];
        if (rec.ok
            && (rep.chosen_start < 0
                || rec.stats.final_energy < rep.starts[static_cast<size_t>(rep.chosen_start)].stats.final_energy)) {
            rep.chosen_start = s;
        }
    }
    if (rep.chosen_start < 0) {
        return rep;
    }

    const VectorField& u = fields[static_cast<size_t>(rep.chosen_start)];
    rep.minimizer = u;
    rep.minimizer_energy = energy(u, W);
    rep.el_residual = el_residual(u, W);
    rep.boundary_radius = boundary_radius(u, W.a);
    rep.interior_radius = interior_radius(u, W.a).first;
    rep.overshoot = std::max(0.0, rep.interior_radius - cfg.r);
    rep.tol_mp = max_principle_tolerance(u, W);
    rep.max_principle = verify_max_principle(u, W.a, cfg.r, rep.tol_mp);

    rep.competitor = verify_competitor(u, W.a, cfg.r, W);
    const VectorField tilde = build_u_tilde(u, W.a, cfg.r);
    rep.tilde_coincidence = coincidence_measure(tilde, u, 0.0);
    rep.tilde_zero_set = coincidence_measure(tilde, VectorField(domain, W.a), 0.0);

    rep.split = split_energy(u, W.a, W);
    rep.split_gap = std::abs(rep.split.total - rep.minimizer_energy.total);

    const MatrixField Q = assemble_Q(u, W.a, W, cfg.quad_nodes);
    const MatrixField Qbar = assemble_Q_segment(u, tilde, W, cfg.quad_nodes);
    rep.linearization.quad_nodes = cfg.quad_nodes;
    rep.linearization.max_operator_norm = Q.max_operator_norm;
    rep.linearization.hessian_sample_bound = Q.hessian_sample_bound;
    rep.linearization.residual_fundamental = residual_fundamental(u, W.a, W, Q);
    rep.linearization.segment_max_operator_norm = Qbar.max_operator_norm;
    rep.linearization.residual_segment = residual_segment(u, tilde, W, Qbar);
    rep.linearization.max_asymmetry = std::max(max_asymmetry(Q), max_asymmetry(Qbar));

    rep.proof_case = trace_proof_cases(u, W.a, cfg.r);
    return rep;
}

std::vector<ExperimentReport> run_sweep(const ExperimentConfig& cfg, const std::vector<double>& h_list)
{
    std::vector<ExperimentReport> reports;
    for (double h : h_list) {
        ExperimentConfig c = cfg;
        c.domain.h = h;
        reports.push_back(run_experiment(c));
    }
    return reports;
}

Json to_json(const HypothesisReport& rep)
{
    Json j;
    if (rep.radial) {
        const auto& r = *rep.radial;
        j["radial_monotone"] = {{"passed", r.passed},
                                {"worst_violation", r.worst_violation},
                                {"witness_direction", vec_json(r.witness_direction)},
                                {"witness_radius", r.witness_radius},
                                {"tolerance", kMonotonicityTol},
                                {"n_dirs", r.n_dirs},
                                {"n_radii", r.n_radii}};
    }
    if (rep.positivity) {
        const auto& p = *rep.positivity;
        j["positive_on_punctured_ball"] = {{"passed", p.passed},
                                           {"worst_violation", p.worst_violation},
                                           {"witness", vec_json(p.witness)},
                                           {"n_samples", p.n_samples},
                                           {"n_zeros_probed", p.n_zeros_probed}};
    }
    return j;
}

Json to_json(const EnergyBreakdown& e)
{
    return {{"dirichlet", e.dirichlet}, {"potential", e.potential}, {"total", e.total}};
}

Json to_json(const SplitEnergy& s, double gap)
{
    return {{"rho_dirichlet", s.rho_dirichlet},
            {"angular", s.angular},
            {"potential", s.potential},
            {"split_total", s.total},
            {"split_gap", gap}};
}

Json to_json(const SolveStats& s)
{
    return {{"status", to_string(s.status)},
            {"converged", s.converged},
            {"iterations", s.iterations},
            {"final_energy", s.final_energy},
            {"final_grad_norm", s.final_grad_norm},
            {"initial_energy", s.energy_history.empty() ? 0.0 : s.energy_history.front()},
            {"history_length", s.energy_history.size()}};
}

Json to_json(const CompetitorReport& rep)
{
    auto termwise = [](const TermwiseComparison& t) {
        return Json{{"rho_dirichlet", t.rho_dirichlet}, {"angular", t.angular}, {"potential", t.potential}};
    };
    return {{"r", rep.r},
            {"boundary_hypothesis", rep.boundary_hypothesis},
            {"boundary_equal", rep.boundary_equal},
            {"sup_bound", rep.sup_bound},
            {"energy_u", to_json(rep.energy_u)},
            {"energy_tilde", to_json(rep.energy_tilde)},
            {"split_u", to_json(rep.split_u, 0.0)},
            {"split_tilde", to_json(rep.split_tilde, 0.0)},
            {"termwise", termwise(rep.termwise)},
            {"linkwise", termwise(rep.linkwise)},
            {"energy_decreased", rep.energy_decreased}};
}

Json to_json(const ExperimentReport& rep)
{
    Json j;
    j["config"] = rep.config;
    j["potential"] = rep.potential;
    j["in_regime"] = rep.in_regime;
    j["hypotheses"] = to_json(rep.hypotheses);
    j["hypothesis_failed"] = rep.hypothesis_failed;
    Json starts = Json::array();
    for (const auto& s : rep.starts) {
        Json e;
        e["label"] = s.label;
        e["seed"] = s.seed;
        e["ok"] = s.ok;
        if (s.ok) {
            e["stats"] = to_json(s.stats);
        } else {
            e["error"] = s.error;
        }
        starts.push_back(e);
    }
    j["starts"] = starts;
    j["chosen_start"] = rep.chosen_start;
    j["minimality"] = "lowest energy of the listed starts; stationary to solver tolerance; global optimality not certified";
    if (!rep.minimizer) {
        j["solve_failed"] = true;
        return j;
    }
    const Domain& d = *rep.minimizer->domain;
    j["grid"] = {{"dim", d.dim()},
                 {"h", d.h()},
                 {"shape", {d.nx(), d.ny()}},
                 {"interior_nodes", d.interior_nodes().size()},
                 {"boundary_nodes", d.boundary_nodes().size()}};
    j["energy"] = to_json(rep.minimizer_energy);
    j["el_residual"] = rep.el_residual;
    j["boundary_radius"] = rep.boundary_radius;
    j["interior_radius"] = rep.interior_radius;
    j["overshoot"] = rep.overshoot;
    j["tol_mp"] = rep.tol_mp;
    j["max_principle"] = {{"holds", rep.max_principle.holds},
                          {"vacuous", rep.max_principle.vacuous},
                          {"worst_node", rep.max_principle.worst_node},
                          {"worst_position", vec_json(d.position(rep.max_principle.worst_node))},
                          {"worst_value", rep.max_principle.worst_value}};
    j["max_principle_holds"] = rep.max_principle.holds;
    j["competitor"] = to_json(rep.competitor);
    j["split"] = to_json(rep.split, rep.split_gap);
    j["linearization"] = {{"quad_nodes", rep.linearization.quad_nodes},
                          {"max_operator_norm", rep.linearization.max_operator_norm},
                          {"hessian_sample_bound", rep.linearization.hessian_sample_bound},
                          {"residual_fundamental", rep.linearization.residual_fundamental},
                          {"segment_max_operator_norm", rep.linearization.segment_max_operator_norm},
                          {"residual_segment", rep.linearization.residual_segment},
                          {"max_asymmetry", rep.linearization.max_asymmetry}};
    j["coincidence"] = {{"tilde_equals_u", rep.tilde_coincidence}, {"tilde_equals_a", rep.tilde_zero_set}};
    j["proof_case"] = {{"label", to_string(rep.proof_case.label)},
                       {"min_rho", rep.proof_case.min_rho},
                       {"max_rho", rep.proof_case.max_rho},
                       {"argmin", rep.proof_case.argmin},
                       {"argmax", rep.proof_case.argmax}};
    return j;
}

Json sweep_to_json(const std::vector<ExperimentReport>& reports)
{
    Json j;
    Json items = Json::array();
    Json hs = Json::array();
    Json overshoot = Json::array();
    bool nonincreasing = true;
    double previous = std::numeric_limits<double>::infinity();
    for (const auto& rep : reports) {
        items.push_back(to_json(rep));
        if (rep.minimizer) {
            hs.push_back(rep.minimizer->domain->h());
            overshoot.push_back(rep.overshoot);
            nonincreasing = nonincreasing && rep.overshoot <= previous;
            previous = rep.overshoot;
        }
    }
    j["h"] = hs;
    j["overshoot"] = overshoot;
    j["overshoot_nonincreasing"] = nonincreasing;
    j["reports"] = items;
    return j;
}

void write_outputs(const ExperimentConfig& cfg, const ExperimentReport& rep)
{
    if (!cfg.output.report.empty()) {
        std::ofstream out(cfg.output.report);
        if (!out) {
            throw ConfigError("cannot write report " + cfg.output.report);
        }
        out << to_json(rep).dump(2) << '\n';
    }
    if (!cfg.output.field_csv.empty() && rep.minimizer) {
        write_field_csv_file(*rep.minimizer, cfg.output.field_csv);
    }
    if (!cfg.output.history_csv.empty() && rep.chosen_start >= 0) {
        std::ofstream out(cfg.output.history_csv);
        if (!out) {
            throw ConfigError("cannot write " + cfg.output.history_csv);
        }
        write_history_csv(rep.starts[static_cast<size_t>(rep.chosen_start)].stats.energy_history, out);
    }
}

} // namespace acmp
