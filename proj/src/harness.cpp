#include "bullwhip/harness.hpp"

#include <algorithm>
#include <cmath>

namespace bullwhip {

namespace {

constexpr std::string_view kPortfolioQuery = "transportation disruption response";

}  // namespace

MeanStd mean_std(std::span<const double> values) {
    MeanStd out;
    if (values.empty()) return out;
    double mean = 0.0;
    double m2 = 0.0;
    std::int64_t n = 0;
    for (double v : values) {
        ++n;
        const double delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }
    out.mean = mean;
    out.stddev = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
    return out;
}

ReplicationStats run_replications(const RunConfig& config, int n,
                                  std::vector<KpiReport>* reports) {
    if (n < 1) throw ConfigError("replication count must be >= 1");
    config.validate();

    std::vector<double> costs;
    std::vector<double> services;
    costs.reserve(static_cast<std::size_t>(n));
    services.reserve(static_cast<std::size_t>(n));

    for (int r = 0; r < n; ++r) {
        RunConfig rep = config;
        rep.base_seed = config.base_seed + static_cast<std::uint64_t>(r);
        const RunResult result = run_simulation(rep);
        costs.push_back(result.report.total_cost);
        services.push_back(result.report.service_level);
        if (reports) reports->push_back(result.report);
    }

    const MeanStd cost = mean_std(costs);
    const MeanStd service = mean_std(services);
    return ReplicationStats{cost.mean, cost.stddev, service.mean, service.stddev, n};
}

SuiteReport scenario_suite(const RunConfig& base, std::span<const PolicyKind> policies,
                           std::span<const DisruptionKind> scenarios, int reps) {
    if (policies.empty() || scenarios.empty())
        throw ConfigError("scenario_suite needs at least one policy and one scenario");

    SuiteReport report;
    report.reps = reps;
    for (DisruptionKind scenario : scenarios) {
        for (PolicyKind policy : policies) {
            RunConfig cell_config = base;
            cell_config.policy = policy;
            cell_config.policy_source =
                requires_sga(policy) ? PolicySource::SgaAtT0 : PolicySource::Fixed;
            cell_config.scenario = DisruptionScenario::defaults_for(scenario);

            SuiteCell cell;
            cell.scenario = scenario;
            cell.policy = policy;
            cell.stats = run_replications(cell_config, reps, &cell.runs);
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

void flag_dominated(std::vector<FrontierPoint>& points) {
    for (auto& p : points) {
        p.dominated = std::any_of(points.begin(), points.end(), [&](const FrontierPoint& q) {
            if (&q == &p) return false;
            return q.total_cost <= p.total_cost && q.service_level >= p.service_level &&
                   (q.total_cost < p.total_cost || q.service_level > p.service_level);
        });
    }
}

StrategicChoiceResult strategic_choice_experiment(const RunConfig& config) {
    if (config.policy != PolicyKind::CollaborativeVmi)
        throw ConfigError("strategic choice runs on the collaborative-vmi policy");
    if (config.scenario.kind != DisruptionKind::TransportDisruption)
        throw ConfigError("strategic choice expects a transport_disruption scenario");
    if (config.strategies_kb_path.empty())
        throw ConfigError("strategic choice needs a strategy knowledge base");

    const KnowledgeBase kb = KnowledgeBase::load(config.strategies_kb_path);

    StrategicChoiceResult result;
    result.portfolio = kb.retrieve_portfolio(kPortfolioQuery);

    for (const KnowledgeDocument& doc : result.portfolio)
        result.extracted.emplace_back(doc, extract_parameters(doc));

    result.evaluations = evaluate_portfolio(result.extracted);

    // One what-if run per strategy under a common seed, so differences come
    // from the strategy parameters alone.
    for (std::size_t i = 0; i < result.extracted.size(); ++i) {
        const auto& [doc, params] = result.extracted[i];
        RunConfig run_config = config;
        run_config.strategy_override = params;
        const RunResult run = run_simulation(run_config);

        FrontierPoint point;
        point.strategy_name = doc.name;
        point.total_cost = run.report.total_cost;
        point.service_level = run.report.service_level;
        point.cost_rating = result.evaluations[i].cost;
        point.speed_rating = result.evaluations[i].speed;
        result.frontier.push_back(std::move(point));
        result.traces.emplace_back(doc.name, run.trace);
    }
    flag_dominated(result.frontier);
    return result;
}

HoardingDemoResult hoarding_demo(const RunConfig& config) {
    if (config.policy != PolicyKind::HoardingVmi)
        throw ConfigError("hoarding demo runs on the hoarding-vmi policy");
    const RunResult run = run_simulation(config);
    return HoardingDemoResult{run.trace, run.report};
}

}  // namespace bullwhip
