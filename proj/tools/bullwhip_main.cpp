#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bullwhip/charts.hpp"
#include "bullwhip/config.hpp"
#include "bullwhip/csvio.hpp"
#include "bullwhip/harness.hpp"
#include "bullwhip/version.hpp"

namespace {

using namespace bullwhip;

// Exit codes: 0 success, 1 usage, 2 configuration error, 3 runtime error.
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct CommonFlags {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
};

RunConfig load_or_default(const CommonFlags& flags) {
    RunConfig config = flags.config_path.empty() ? parse_run_config("{}", ".")
                                                 : load_run_config(flags.config_path);
    apply_env_seed(config);
    if (flags.seed) config.base_seed = *flags.seed;
    return config;
}

std::optional<std::pair<int, int>> shade_window(const DisruptionScenario& sc) {
    if (sc.kind == DisruptionKind::None) return std::nullopt;
    return std::pair{sc.start_day, sc.start_day + std::max(1, sc.duration_days)};
}

void report_files(const std::vector<std::filesystem::path>& files) {
    for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
}

int cmd_run(const CommonFlags& flags, const std::string& policy_name,
            const std::string& scenario_name) {
    RunConfig config = load_or_default(flags);
    if (!policy_name.empty()) {
        const auto policy = policy_from_string(policy_name);
        if (!policy) throw ConfigError("unknown policy '" + policy_name + "'");
        config.policy = *policy;
        config.policy_source =
            requires_sga(*policy) ? PolicySource::SgaAtT0 : PolicySource::Fixed;
    }
    if (!scenario_name.empty()) {
        const auto kind = disruption_from_string(scenario_name);
        if (!kind) throw ConfigError("unknown scenario '" + scenario_name + "'");
        config.scenario = DisruptionScenario::defaults_for(*kind);
    }
    config.validate();

    const RunResult result = run_simulation(config);

    std::vector<std::filesystem::path> files;
    files.push_back(write_text_file(flags.out_dir, "trace.csv", trace_csv_string(result.trace)));
    std::ostringstream kpi;
    write_kpi_csv(kpi, result.report);
    files.push_back(write_text_file(flags.out_dir, "kpi.csv", kpi.str()));
    const std::string title = std::string("Inventory dynamics (") +
                              std::string(to_string(config.policy)) + ", " +
                              std::string(to_string(config.scenario.kind)) + ")";
    files.push_back(write_text_file(
        flags.out_dir, "inventory.svg",
        render_timeseries_svg(result.trace, shade_window(config.scenario), title)));

    std::cout << "policy " << to_string(config.policy) << ", scenario "
              << to_string(config.scenario.kind) << ", seed " << config.base_seed << '\n';
    std::cout << "total cost " << format_double(result.report.total_cost) << ", service level "
              << format_double(result.report.service_level) << "%\n";
    report_files(files);
    return 0;
}

int cmd_suite(const CommonFlags& flags, int reps, const std::vector<std::string>& policy_names) {
    RunConfig config = load_or_default(flags);

    std::vector<PolicyKind> policies;
    for (const auto& name : policy_names) {
        const auto policy = policy_from_string(name);
        if (!policy) throw ConfigError("unknown policy '" + name + "'");
        policies.push_back(*policy);
    }
    const std::vector<DisruptionKind> scenarios{
        DisruptionKind::SupplierFailure, DisruptionKind::TransportDisruption,
        DisruptionKind::DemandSurge, DisruptionKind::QualityFailure};

    const SuiteReport suite = scenario_suite(config, policies, scenarios, reps);

    std::ostringstream csv;
    write_suite_csv(csv, suite);
    const auto path = write_text_file(flags.out_dir, "suite.csv", csv.str());

    for (const SuiteCell& cell : suite.cells) {
        std::cout << to_string(cell.scenario) << " / " << to_string(cell.policy) << ": cost "
                  << format_double(cell.stats.mean_cost) << " +- "
                  << format_double(cell.stats.std_cost) << ", service "
                  << format_double(cell.stats.mean_service) << " +- "
                  << format_double(cell.stats.std_service) << " (n=" << cell.stats.n << ")\n";
    }
    report_files({path});
    return 0;
}

int cmd_strategic_choice(const CommonFlags& flags) {
    RunConfig config = load_or_default(flags);
    const StrategicChoiceResult result = strategic_choice_experiment(config);

    std::vector<std::filesystem::path> files;
    std::ostringstream frontier_csv;
    write_frontier_csv(frontier_csv, result.frontier);
    files.push_back(write_text_file(flags.out_dir, "frontier.csv", frontier_csv.str()));

    std::ostringstream evals_csv;
    write_evaluations_csv(evals_csv, result.evaluations);
    files.push_back(write_text_file(flags.out_dir, "evaluations.csv", evals_csv.str()));

    files.push_back(write_text_file(
        flags.out_dir, "frontier.svg",
        render_frontier_svg(result.frontier, "Strategic trade-off frontier")));

    for (const auto& [name, trace] : result.traces) {
        std::string lower = name;
        for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        files.push_back(write_text_file(
            flags.out_dir, "strategy_" + lower + ".svg",
            render_timeseries_svg(trace, shade_window(config.scenario),
                                  "Inventory dynamics under " + name)));
    }

    for (const FrontierPoint& p : result.frontier) {
        std::cout << p.strategy_name << ": cost " << format_double(p.total_cost)
                  << ", service " << format_double(p.service_level) << "%, rated "
                  << to_string(p.cost_rating) << " cost / " << to_string(p.speed_rating)
                  << " speed" << (p.dominated ? " (dominated)" : "") << '\n';
    }
    report_files(files);
    return 0;
}

int cmd_hoarding_demo(const CommonFlags& flags) {
    RunConfig config = load_or_default(flags);
    config.policy = PolicyKind::HoardingVmi;
    config.policy_source = PolicySource::SgaAtT0;

    const HoardingDemoResult result = hoarding_demo(config);

    std::vector<std::filesystem::path> files;
    files.push_back(write_text_file(flags.out_dir, "trace.csv", trace_csv_string(result.trace)));
    std::ostringstream kpi;
    write_kpi_csv(kpi, result.report);
    files.push_back(write_text_file(flags.out_dir, "kpi.csv", kpi.str()));
    files.push_back(write_text_file(
        flags.out_dir, "inventory.svg",
        render_timeseries_svg(result.trace, shade_window(config.scenario),
                              "Inventory dynamics under the hoarding failure mode")));

    std::cout << "service level " << format_double(result.report.service_level)
              << "%, total cost " << format_double(result.report.total_cost) << '\n';
    report_files(files);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bullwhip: three-echelon supply chain simulator and strategy harness"};
    app.set_version_flag("--version", BULLWHIP_VERSION);
    app.require_subcommand(1);

    CommonFlags run_flags, suite_flags, choice_flags, demo_flags;
    std::string run_policy, run_scenario;
    int suite_reps = 30;
    std::vector<std::string> suite_policies{"static-baseline", "selfish-rag"};

    CLI::App* run = app.add_subcommand("run", "Run one simulation and export its trace");
    run->add_option("--config", run_flags.config_path, "Configuration file (JSON)")
        ->required();
    run->add_option("--seed", run_flags.seed, "Seed override");
    run->add_option("--policy", run_policy,
                    "Policy override: static-baseline | selfish-rag | hoarding-vmi | "
                    "collaborative-vmi");
    run->add_option("--scenario", run_scenario,
                    "Scenario override: none | supplier_failure | transport_disruption | "
                    "demand_surge | quality_failure");
    run->add_option("--out", run_flags.out_dir, "Output directory");

    CLI::App* suite = app.add_subcommand("suite", "Replicated policy x scenario benchmark grid");
    suite->add_option("--config", suite_flags.config_path, "Configuration file (JSON)");
    suite->add_option("--reps", suite_reps, "Replications per cell")->check(CLI::PositiveNumber);
    suite->add_option("--seed", suite_flags.seed, "Base seed override");
    suite->add_option("--policies", suite_policies, "Policies to benchmark");
    suite->add_option("--out", suite_flags.out_dir, "Output directory");

    CLI::App* choice = app.add_subcommand(
        "strategic-choice", "Retrieve, evaluate, and simulate a strategy portfolio");
    choice->add_option("--config", choice_flags.config_path, "Configuration file (JSON)")
        ->required();
    choice->add_option("--seed", choice_flags.seed, "Seed override");
    choice->add_option("--out", choice_flags.out_dir, "Output directory");

    CLI::App* demo =
        app.add_subcommand("hoarding-demo", "Deterministic run of the VMI hoarding failure");
    demo->add_option("--config", demo_flags.config_path, "Configuration file (JSON)");
    demo->add_option("--seed", demo_flags.seed, "Seed override");
    demo->add_option("--out", demo_flags.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags, run_policy, run_scenario);
        if (suite->parsed()) return cmd_suite(suite_flags, suite_reps, suite_policies);
        if (choice->parsed()) return cmd_strategic_choice(choice_flags);
        if (demo->parsed()) return cmd_hoarding_demo(demo_flags);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const KbParseError& e) {
        std::cerr << "knowledge base error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
