// acmp: command line front end for the Allen-Cahn maximum-principle harness.
//
//   acmp check-potential <config.json>
//   acmp run <config.json> [--out report.json]
//   acmp sweep <config.json> --h-list 0.0625,0.03125 [--out sweep.json]
//   acmp competitor <field.csv> --a 1 --r 0.2 --potential double_well_1d
//
// Exit status is 0 whenever the command completed, whatever the pass/fail
// flags inside the report say; configuration and I/O problems exit with 2.

#include "acmp/errors.hpp"
#include "acmp/harness.hpp"
#include "acmp/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void emit(const acmp::Json& doc, const std::string& path)
{
    if (path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw acmp::ConfigError("cannot write " + path);
    }
    out << doc.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discrete vector Allen-Cahn minimizers and maximum-principle diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    auto* check = app.add_subcommand("check-potential", "Run the hypothesis checks for the configured potential");
    check->add_option("config", config_path, "Experiment config (JSON)")->required();
    check->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    auto* run = app.add_subcommand("run", "Run one experiment");
    run->add_option("config", config_path, "Experiment config (JSON)")->required();
    run->add_option("--out", out_path, "Report path (overrides output.report)");

    std::vector<double> h_list;
    auto* sweep = app.add_subcommand("sweep", "Repeat an experiment over several grid spacings");
    sweep->add_option("config", config_path, "Experiment config (JSON)")->required();
    sweep->add_option("--h-list", h_list, "Grid spacings")->required()->delimiter(',');
    sweep->add_option("--out", out_path, "Write the sweep JSON here instead of stdout");

    std::string field_path;
    std::vector<double> a_values;
    double r = 0.0;
    std::string potential_name;
    double r0 = 0.0;
    double h_override = 0.0;
    auto* comp = app.add_subcommand("competitor", "Build the cutoff competitor of a field dump and compare energies");
    comp->add_option("field", field_path, "Field CSV (i[,j],x[,y],u0,...)")->required();
    comp->add_option("--a", a_values, "Well a")->required()->delimiter(',');
    comp->add_option("--r", r, "Cutoff radius r")->required();
    comp->add_option("--potential", potential_name, "double_well_1d | triple_well_2d | quadratic")->required();
    comp->add_option("--r0", r0, "Override r0 of the potential");
    comp->add_option("--spacing", h_override, "Grid spacing, when it cannot be inferred from the CSV");
    comp->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            const acmp::ExperimentConfig cfg = acmp::load_config_file(config_path);
            const acmp::Potential W = acmp::make_potential(cfg.potential);
            const auto report = acmp::merge(
                acmp::check_radial_monotonicity(W, cfg.hypotheses.n_dirs, cfg.hypotheses.n_radii),
                acmp::check_positivity_punctured(W, cfg.hypotheses.n_samples));
            acmp::Json doc;
            doc["potential"] = W.name;
            doc["a"] = std::vector<double>(W.a.data(), W.a.data() + W.a.size());
            doc["r0"] = W.r0;
            doc["hypotheses"] = acmp::to_json(report);
            doc["all_passed"] = report.all_passed();
            emit(doc, out_path.empty() ? cfg.output.report : out_path);
        } else if (*run) {
            acmp::ExperimentConfig cfg = acmp::load_config_file(config_path);
            if (!out_path.empty()) {
                cfg.output.report = out_path;
            }
            const auto report = acmp::run_experiment(cfg);
            if (cfg.output.report.empty()) {
                std::cout << acmp::to_json(report).dump(2) << '\n';
            }
            acmp::write_outputs(cfg, report);
        } else if (*sweep) {
            const acmp::ExperimentConfig cfg = acmp::load_config_file(config_path);
            emit(acmp::sweep_to_json(acmp::run_sweep(cfg, h_list)), out_path);
        } else if (*comp) {
            const acmp::VectorField u = h_override > 0.0 ? acmp::read_field_csv_file(field_path, h_override)
                                                         : acmp::read_field_csv_file(field_path);
            acmp::PotentialSpec spec;
            spec.name = potential_name;
            spec.a = Eigen::Map<const Eigen::VectorXd>(a_values.data(), static_cast<Eigen::Index>(a_values.size()));
            if (r0 > 0.0) {
                spec.r0 = r0;
            }
            const acmp::Potential W = acmp::make_potential(spec);
            if (u.m != W.m) {
                throw acmp::ConfigError("field dimension does not match the potential");
            }
            acmp::Json doc;
            doc["field"] = field_path;
            doc["potential"] = W.name;
            doc["competitor"] = acmp::to_json(acmp::verify_competitor(u, W.a, r, W));
            doc["proof_case"] = acmp::to_string(acmp::trace_proof_cases(u, W.a, r).label);
            emit(doc, out_path);
        }
    } catch (const acmp::ConfigError& e) {
        std::cerr << "acmp: " << e.what() << '\n';
        return 2;
    } catch (const acmp::InvalidArgument& e) {
        std::cerr << "acmp: " << e.what() << '\n';
        return 2;
    } catch (const acmp::DomainNotConnected& e) {
        std::cerr << "acmp: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
