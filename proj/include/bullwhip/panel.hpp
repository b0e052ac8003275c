#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bullwhip/knowledge.hpp"
#include "bullwhip/types.hpp"

namespace bullwhip {

enum class CostRating { Low = 0, Medium = 1, High = 2, VeryHigh = 3 };
enum class SpeedRating { VerySlow = 0, Slow = 1, Medium = 2, Fast = 3, VeryFast = 4 };

std::string_view to_string(CostRating r);
std::string_view to_string(SpeedRating r);

/// Band edges for the qualitative ratings. Defaults are the coarsest bands
/// consistent with the shipped strategy set; override per experiment if a
/// different knowledge base needs different granularity.
struct RatingRules {
    // premium >= edge[i] selects band i+1. Sorted ascending.
    std::array<double, 3> cost_edges{1.0, 100.0, 200.0};
    // lead >= edge[i] slows the rating by one band.
    std::array<int, 4> speed_edges{1, 2, 3, 4};
};

CostRating rate_cost(const StrategyParameters& params, const RatingRules& rules = {});
SpeedRating rate_speed(const StrategyParameters& params, const RatingRules& rules = {});

struct Evaluation {
    std::string strategy_name;
    CostRating cost = CostRating::Low;
    SpeedRating speed = SpeedRating::VeryFast;
    std::string rendered_prompt;  // audit trail of the evaluation request
};

/// Prompt text submitted (notionally) to the panel for one strategy.
std::string render_prompt(const KnowledgeDocument& doc);

/// One Evaluation per strategy, in input order.
std::vector<Evaluation> evaluate_portfolio(
    const std::vector<std::pair<KnowledgeDocument, StrategyParameters>>& strategies,
    const RatingRules& rules = {});

}  // namespace bullwhip
