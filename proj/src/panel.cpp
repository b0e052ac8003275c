#include "bullwhip/panel.hpp"

namespace bullwhip {

std::string_view to_string(CostRating r) {
    switch (r) {
        case CostRating::Low: return "Low";
        case CostRating::Medium: return "Medium";
        case CostRating::High: return "High";
        case CostRating::VeryHigh: return "Very High";
    }
    return "?";
}

std::string_view to_string(SpeedRating r) {
    switch (r) {
        case SpeedRating::VerySlow: return "Very Slow";
        case SpeedRating::Slow: return "Slow";
        case SpeedRating::Medium: return "Medium";
        case SpeedRating::Fast: return "Fast";
        case SpeedRating::VeryFast: return "Very Fast";
    }
    return "?";
}

CostRating rate_cost(const StrategyParameters& params, const RatingRules& rules) {
    if (params.transport_cost_premium < 0)
        throw std::invalid_argument("rate_cost: negative premium");
    int band = 0;
    for (double edge : rules.cost_edges)
        if (params.transport_cost_premium >= edge) ++band;
    return static_cast<CostRating>(band);
}

SpeedRating rate_speed(const StrategyParameters& params, const RatingRules& rules) {
    if (params.extra_lead_time < 0)
        throw std::invalid_argument("rate_speed: negative lead time");
    int slowdown = 0;
    for (int edge : rules.speed_edges)
        if (params.extra_lead_time >= edge) ++slowdown;
    return static_cast<SpeedRating>(static_cast<int>(SpeedRating::VeryFast) - slowdown);
}

std::string render_prompt(const KnowledgeDocument& doc) {
    std::string prompt = "Context: ";
    prompt += doc.description;
    prompt +=
        "\n\nBased on the context provided, evaluate the strategy on two\n"
        "criteria: Cost and Speed. Provide your ratings in a simple\n"
        "'key: value' format.\n";
    return prompt;
}

std::vector<Evaluation> evaluate_portfolio(
    const std::vector<std::pair<KnowledgeDocument, StrategyParameters>>& strategies,
    const RatingRules& rules) {
    std::vector<Evaluation> out;
    out.reserve(strategies.size());
    for (const auto& [doc, params] : strategies) {
        Evaluation e;
        e.strategy_name = doc.name;
        e.cost = rate_cost(params, rules);
        e.speed = rate_speed(params, rules);
        e.rendered_prompt = render_prompt(doc);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace bullwhip
