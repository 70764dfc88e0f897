#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "gms/analysis.hpp"
#include "gms/bnb.hpp"
#include "gms/formulations.hpp"
#include "gms/instance.hpp"
#include "gms/kernels.hpp"
#include "gms/serialize.hpp"
#include "gms/simplex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolverLimit = 3;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GMS formulation workbench: builds the seven maintenance-"
                 "scheduling MIP formulations, solves their relaxations and "
                 "integer programs, and verifies the tightness hierarchy"};
    app.require_subcommand(1);

    int threads = 0;
    std::string kernel_mode = "parallel";
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    app.add_option("--kernels", kernel_mode, "dense kernel dispatch: serial|parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded instance JSON");
    std::uint64_t gen_seed = 1;
    int gen_horizon = 12, gen_tasks = 2;
    bool gen_coupling = false, gen_no_coupling = false;
    std::string gen_out = "instance.json";
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--horizon", gen_horizon, "number of periods");
    gen->add_option("--tasks", gen_tasks, "number of maintenance tasks");
    gen->add_flag("--coupling", gen_coupling, "emit demand/capacity coupling data");
    gen->add_flag("--no-coupling", gen_no_coupling, "plain cost-only instance (default)");
    gen->add_option("--out", gen_out, "output path");

    // solve
    auto* solve = app.add_subcommand("solve", "LP relaxation + branch-and-bound solve");
    std::string solve_formulation, solve_instance, solve_out, solve_trace;
    long solve_node_limit = 1'000'000;
    solve->add_option("--formulation", solve_formulation, "F1..F7")->required();
    solve->add_option("--instance", solve_instance, "instance JSON path")->required();
    solve->add_option("--node-limit", solve_node_limit, "branch-and-bound node budget");
    solve->add_option("--out", solve_out, "write solution JSON here (default stdout)");
    solve->add_option("--trace", solve_trace, "per-node CSV trace path");

    // compare
    auto* compare_cmd = app.add_subcommand(
        "compare", "tightness verdicts for all 21 formulation pairs");
    std::string compare_instance, compare_out = "compare.csv", compare_witnesses;
    int compare_samples = 200;
    std::uint64_t compare_seed = 1;
    compare_cmd->add_option("--instance", compare_instance, "instance JSON path")
        ->required();
    compare_cmd->add_option("--samples", compare_samples, "vertices sampled per side");
    compare_cmd->add_option("--seed", compare_seed, "sampling seed");
    compare_cmd->add_option("--witnesses", compare_witnesses,
                            "JSON array of candidate witness points to inject");
    compare_cmd->add_option("--out", compare_out, "verdict matrix CSV path");

    // verify-paper
    auto* verify = app.add_subcommand(
        "verify-paper", "run the full lemma/proposition verification program");
    std::uint64_t verify_seed = 1;
    std::string verify_out;
    verify->add_option("--seed", verify_seed, "bundle seed");
    verify->add_option("--out", verify_out, "write the JSON report here");

    // export
    auto* export_cmd = app.add_subcommand("export", "write a model in CPLEX LP format");
    std::string export_formulation, export_instance, export_out = "model.lp";
    bool export_relaxed = false;
    export_cmd->add_option("--formulation", export_formulation, "F1..F7")->required();
    export_cmd->add_option("--instance", export_instance, "instance JSON path")
        ->required();
    export_cmd->add_flag("--relax", export_relaxed, "export the LP relaxation");
    export_cmd->add_option("--out", export_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        gms::kernels::set_mode(kernel_mode == "serial" ? gms::kernels::Mode::serial
                                                       : gms::kernels::Mode::parallel);

        if (gen->parsed()) {
            gms::GenProfile profile;
            profile.coupling = gen_coupling && !gen_no_coupling;
            const gms::Instance instance =
                gms::generate(gen_seed, gen_horizon, gen_tasks, profile);
            gms::save_instance(instance, gen_out);
            std::cout << "wrote " << gen_out << "\n";
            return kExitOk;
        }

        if (solve->parsed()) {
            const auto instance = gms::load_instance(solve_instance);
            const auto id = gms::formulation_from_string(solve_formulation);
            const gms::MipModel model = gms::build(id, instance);
            const gms::LpSolution lp = gms::lp_solve(model);
            gms::BnbOptions options;
            options.node_limit = solve_node_limit;
            options.trace_path = solve_trace;
            const gms::MipSolution mip = gms::bnb_solve(model, options);

            std::ostringstream out;
            out << "{\n  \"formulation\": \"" << gms::to_string(id) << "\",\n"
                << "  \"lp\": " << gms::lp_solution_to_json(lp)
                << ",\n  \"mip\": " << gms::mip_solution_to_json(mip) << "}\n";
            if (solve_out.empty())
                std::cout << out.str();
            else
                write_text(solve_out, out.str());
            if (lp.status == gms::LpStatus::iteration_limit ||
                mip.status == gms::MipStatus::node_limit)
                return kExitSolverLimit;
            return kExitOk;
        }

        if (compare_cmd->parsed()) {
            const auto instance = gms::load_instance(compare_instance);
            std::vector<gms::FractionalPoint> injected;
            if (!compare_witnesses.empty())
                injected = gms::witnesses_from_json(slurp(compare_witnesses));

            std::vector<std::pair<gms::FormulationId, gms::FormulationId>> pairs;
            for (int a = 0; a < 7; ++a)
                for (int b = a + 1; b < 7; ++b)
                    pairs.emplace_back(gms::kAllFormulations[a], gms::kAllFormulations[b]);

            std::vector<gms::TightnessVerdict> verdicts(pairs.size());
#pragma omp parallel for schedule(dynamic)
            for (std::size_t i = 0; i < pairs.size(); ++i)
                verdicts[i] = gms::compare(pairs[i].first, pairs[i].second, instance,
                                           compare_samples, compare_seed, injected);

            const std::string csv = gms::verdict_matrix_to_csv(verdicts);
            write_text(compare_out, csv);
            std::cout << csv;
            return kExitOk;
        }

        if (verify->parsed()) {
            const gms::PaperReport report = gms::verify_paper(verify_seed);
            std::cout << gms::report_to_text(report);
            if (!verify_out.empty()) write_text(verify_out, gms::report_to_json(report));
            return report.all_pass() ? kExitOk : kExitVerificationFailed;
        }

        if (export_cmd->parsed()) {
            const auto instance = gms::load_instance(export_instance);
            const auto id = gms::formulation_from_string(export_formulation);
            gms::MipModel model = gms::build(id, instance);
            if (export_relaxed) model = gms::relax(model);
            std::ofstream out(export_out);
            if (!out) throw std::runtime_error("cannot write " + export_out);
            gms::write_lp(model, out);
            std::cout << "wrote " << export_out << "\n";
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
