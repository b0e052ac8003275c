#include "bullwhip/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bullwhip {

namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (std::string_view a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + " must be an integer");
    return j.get<int>();
}

std::int64_t get_int64(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + " must be an integer");
    return j.get<std::int64_t>();
}

void parse_scenario(const json& j, DisruptionScenario& scenario) {
    check_keys(j, {"kind", "start_day", "duration_days", "magnitude"}, "scenario");
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw ConfigError("scenario.kind must be a string");
        const auto kind = disruption_from_string(j["kind"].get<std::string>());
        if (!kind)
            throw ConfigError("unknown scenario kind '" + j["kind"].get<std::string>() + "'");
        scenario = DisruptionScenario::defaults_for(*kind);
    }
    if (j.contains("start_day")) scenario.start_day = get_int(j["start_day"], "scenario.start_day");
    if (j.contains("duration_days"))
        scenario.duration_days = get_int(j["duration_days"], "scenario.duration_days");
    if (j.contains("magnitude")) scenario.magnitude = get_number(j["magnitude"], "scenario.magnitude");
}

void parse_costs(const json& j, CostParameters& costs) {
    check_keys(j, {"holding_rate", "backorder_penalty", "premium_per_shipment"}, "costs");
    if (j.contains("holding_rate")) {
        const json& h = j["holding_rate"];
        if (h.is_number()) {
            costs.holding_rate.fill(h.get<double>());
        } else if (h.is_object()) {
            check_keys(h, {"supplier", "manufacturer", "retailer"}, "costs.holding_rate");
            for (Role r : kAllRoles) {
                const std::string name(to_string(r));
                if (h.contains(name))
                    costs.holding_rate[index_of(r)] = get_number(h[name], "costs.holding_rate");
            }
        } else {
            throw ConfigError("costs.holding_rate must be a number or per-role object");
        }
    }
    if (j.contains("backorder_penalty"))
        costs.backorder_penalty = get_number(j["backorder_penalty"], "costs.backorder_penalty");
    if (j.contains("premium_per_shipment"))
        costs.premium_per_shipment =
            get_number(j["premium_per_shipment"], "costs.premium_per_shipment");
}

void parse_demand(const json& j, DemandModel& demand) {
    check_keys(j, {"base_rate", "surge_multiplier", "surge_window", "deterministic"}, "demand");
    if (j.contains("base_rate")) demand.base_rate = get_number(j["base_rate"], "demand.base_rate");
    if (j.contains("surge_multiplier"))
        demand.surge_multiplier = get_number(j["surge_multiplier"], "demand.surge_multiplier");
    if (j.contains("surge_window")) {
        const json& w = j["surge_window"];
        if (!w.is_array() || w.size() != 2)
            throw ConfigError("demand.surge_window must be [start_day, end_day)");
        demand.surge_window = {get_int(w[0], "surge_window start"),
                               get_int(w[1], "surge_window end")};
    }
    if (j.contains("deterministic")) {
        if (!j["deterministic"].is_boolean())
            throw ConfigError("demand.deterministic must be a boolean");
        demand.deterministic = j["deterministic"].get<bool>();
    }
}

void parse_sim(const json& j, SimParameters& sim) {
    check_keys(j,
               {"lead_supplier_to_manufacturer", "lead_manufacturer_to_retailer",
                "production_lead", "production_capacity", "initial_on_hand"},
               "sim");
    if (j.contains("lead_supplier_to_manufacturer"))
        sim.lead_supplier_to_manufacturer =
            get_int(j["lead_supplier_to_manufacturer"], "sim.lead_supplier_to_manufacturer");
    if (j.contains("lead_manufacturer_to_retailer"))
        sim.lead_manufacturer_to_retailer =
            get_int(j["lead_manufacturer_to_retailer"], "sim.lead_manufacturer_to_retailer");
    if (j.contains("production_lead"))
        sim.production_lead = get_int(j["production_lead"], "sim.production_lead");
    if (j.contains("production_capacity"))
        sim.production_capacity = get_int64(j["production_capacity"], "sim.production_capacity");
    if (j.contains("initial_on_hand")) {
        const json& init = j["initial_on_hand"];
        if (!init.is_object())
            throw ConfigError("sim.initial_on_hand must map roles to unit counts");
        check_keys(init, {"supplier", "manufacturer", "retailer"}, "sim.initial_on_hand");
        for (Role r : kAllRoles) {
            const std::string name(to_string(r));
            if (init.contains(name))
                sim.initial_on_hand[index_of(r)] = get_int64(init[name], "sim.initial_on_hand");
        }
    }
}

void parse_out_levels(const json& j, std::array<std::int64_t, 3>& levels) {
    if (!j.is_object()) throw ConfigError("out_levels must map roles to unit counts");
    check_keys(j, {"supplier", "manufacturer", "retailer"}, "out_levels");
    for (Role r : kAllRoles) {
        const std::string name(to_string(r));
        if (j.contains(name)) levels[index_of(r)] = get_int64(j[name], "out_levels");
    }
}

std::string resolve_path(const std::string& raw, const std::filesystem::path& base_dir) {
    std::filesystem::path p(raw);
    if (p.is_absolute()) return p.string();
    return (base_dir / p).lexically_normal().string();
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("configuration document must be a JSON object");
    check_keys(j,
               {"horizon", "seed", "policy", "policy_source", "scenario", "costs", "demand",
                "sim", "out_levels", "kb", "strategy_override", "premium_window_end"},
               "configuration");

    RunConfig config;
    config.policies_kb_path = resolve_path("data/policies.kb", base_dir);
    config.strategies_kb_path = resolve_path("data/strategies.kb", base_dir);

    if (j.contains("horizon")) config.horizon = get_int(j["horizon"], "horizon");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) throw ConfigError("seed must be an integer");
        config.base_seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("policy")) {
        if (!j["policy"].is_string()) throw ConfigError("policy must be a string");
        const auto policy = policy_from_string(j["policy"].get<std::string>());
        if (!policy)
            throw ConfigError("unknown policy '" + j["policy"].get<std::string>() +
                              "' (expected static-baseline, selfish-rag, hoarding-vmi "
                              "or collaborative-vmi)");
        config.policy = *policy;
    }
    config.policy_source =
        requires_sga(config.policy) ? PolicySource::SgaAtT0 : PolicySource::Fixed;
    if (j.contains("policy_source")) {
        if (!j["policy_source"].is_string()) throw ConfigError("policy_source must be a string");
        const std::string src = j["policy_source"].get<std::string>();
        if (src == "fixed")
            config.policy_source = PolicySource::Fixed;
        else if (src == "sga")
            config.policy_source = PolicySource::SgaAtT0;
        else
            throw ConfigError("policy_source must be 'fixed' or 'sga'");
    }
    if (j.contains("scenario")) parse_scenario(j["scenario"], config.scenario);
    if (j.contains("costs")) parse_costs(j["costs"], config.costs);
    if (j.contains("demand")) parse_demand(j["demand"], config.demand);
    if (j.contains("sim")) parse_sim(j["sim"], config.sim);
    if (j.contains("out_levels")) parse_out_levels(j["out_levels"], config.out_levels);
    if (j.contains("kb")) {
        const json& kb = j["kb"];
        check_keys(kb, {"policies", "strategies"}, "kb");
        if (kb.contains("policies")) {
            if (!kb["policies"].is_string()) throw ConfigError("kb.policies must be a path");
            config.policies_kb_path = resolve_path(kb["policies"].get<std::string>(), base_dir);
        }
        if (kb.contains("strategies")) {
            if (!kb["strategies"].is_string()) throw ConfigError("kb.strategies must be a path");
            config.strategies_kb_path =
                resolve_path(kb["strategies"].get<std::string>(), base_dir);
        }
    }
    if (j.contains("strategy_override")) {
        const json& s = j["strategy_override"];
        check_keys(s, {"extra_lead_time", "transport_cost_premium"}, "strategy_override");
        StrategyParameters params;
        if (s.contains("extra_lead_time"))
            params.extra_lead_time = get_int(s["extra_lead_time"], "extra_lead_time");
        if (s.contains("transport_cost_premium"))
            params.transport_cost_premium =
                get_number(s["transport_cost_premium"], "transport_cost_premium");
        config.strategy_override = params;
    }
    if (j.contains("premium_window_end"))
        config.premium_window_end = get_int(j["premium_window_end"], "premium_window_end");

    config.validate();
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    return parse_run_config(buf.str(), base);
}

void apply_env_seed(RunConfig& config) {
    const char* env = std::getenv("BULLWHIP_SEED");
    if (!env || *env == '\0') return;
    char* end = nullptr;
    const unsigned long long seed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw ConfigError(std::string("BULLWHIP_SEED must be an unsigned integer, got '") +
                          env + "'");
    config.base_seed = seed;
}

}  // namespace bullwhip
