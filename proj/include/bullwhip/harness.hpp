#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bullwhip/panel.hpp"
#include "bullwhip/sim.hpp"

namespace bullwhip {

/// Mean and sample standard deviation (n-1 denominator, 0 when n == 1).
struct ReplicationStats {
    double mean_cost = 0.0;
    double std_cost = 0.0;
    double mean_service = 0.0;
    double std_service = 0.0;
    int n = 0;
};

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
};

/// Streaming (Welford) mean and sample standard deviation.
MeanStd mean_std(std::span<const double> values);

/// n runs with derived seeds base_seed + r. Per-run reports are appended to
/// `reports` when given.
ReplicationStats run_replications(const RunConfig& config, int n,
                                  std::vector<KpiReport>* reports = nullptr);

struct SuiteCell {
    DisruptionKind scenario = DisruptionKind::None;
    PolicyKind policy = PolicyKind::StaticBaseline;
    ReplicationStats stats;
    std::vector<KpiReport> runs;
};

struct SuiteReport {
    std::vector<SuiteCell> cells;  // scenario-major, policy-minor
    int reps = 0;
};

/// Full policy x scenario grid of replication statistics.
SuiteReport scenario_suite(const RunConfig& base, std::span<const PolicyKind> policies,
                           std::span<const DisruptionKind> scenarios, int reps);

struct FrontierPoint {
    std::string strategy_name;
    double total_cost = 0.0;
    double service_level = 0.0;
    CostRating cost_rating = CostRating::Low;
    SpeedRating speed_rating = SpeedRating::VeryFast;
    bool dominated = false;
};

/// Marks every point for which some other point costs no more and serves at
/// least as well.
void flag_dominated(std::vector<FrontierPoint>& points);

struct StrategicChoiceResult {
    std::vector<KnowledgeDocument> portfolio;
    std::vector<std::pair<KnowledgeDocument, StrategyParameters>> extracted;
    std::vector<Evaluation> evaluations;
    std::vector<FrontierPoint> frontier;
    std::vector<std::pair<std::string, std::vector<DayRecord>>> traces;
};

/// Retrieval -> extraction -> panel -> one what-if run per strategy under a
/// common seed. Requires the collaborative policy and a transport scenario.
StrategicChoiceResult strategic_choice_experiment(const RunConfig& config);

struct HoardingDemoResult {
    std::vector<DayRecord> trace;
    KpiReport report;
};

/// Single deterministic hoarding run, trace kept for chart emission.
HoardingDemoResult hoarding_demo(const RunConfig& config);

}  // namespace bullwhip
