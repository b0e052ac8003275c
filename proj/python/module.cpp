#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bullwhip/charts.hpp"
#include "bullwhip/config.hpp"
#include "bullwhip/csvio.hpp"
#include "bullwhip/harness.hpp"
#include "bullwhip/version.hpp"

namespace py = pybind11;
using namespace bullwhip;

namespace {

py::dict doc_to_dict(const KnowledgeDocument& doc) {
    py::dict d;
    d["kind"] = std::string(to_string(doc.kind));
    d["name"] = doc.name;
    d["description"] = doc.description;
    d["entity"] = doc.entity ? py::object(py::str(std::string(to_string(*doc.entity))))
                             : py::object(py::none());
    py::dict params;
    for (const auto& [k, v] : doc.parameters) params[py::str(k)] = v;
    d["parameters"] = params;
    return d;
}

py::dict report_to_dict(const KpiReport& r) {
    py::dict d;
    d["total_cost"] = r.total_cost;
    d["holding_cost"] = r.holding_cost;
    d["backorder_cost"] = r.backorder_cost;
    d["premium_cost"] = r.premium_cost;
    d["service_level"] = r.service_level;
    d["total_demand"] = r.total_demand;
    d["total_fulfilled"] = r.total_fulfilled;
    py::dict holding;
    for (Role role : kAllRoles)
        holding[py::str(std::string(to_string(role)))] = r.holding_by_role[index_of(role)];
    d["holding_by_role"] = holding;
    return d;
}

py::dict stats_to_dict(const ReplicationStats& s) {
    py::dict d;
    d["mean_cost"] = s.mean_cost;
    d["std_cost"] = s.std_cost;
    d["mean_service"] = s.mean_service;
    d["std_service"] = s.std_service;
    d["n"] = s.n;
    return d;
}

RunConfig config_from_json(const std::string& json_text, const std::string& base_dir) {
    return parse_run_config(json_text, base_dir);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-echelon supply chain simulator with policy benchmarking, "
              "knowledge-base retrieval, and strategy evaluation";
    m.attr("__version__") = BULLWHIP_VERSION;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<KbParseError>(m, "KbParseError", PyExc_ValueError);
    py::register_exception<NoMatchError>(m, "NoMatchError", PyExc_LookupError);
    py::register_exception<KindError>(m, "KindError", PyExc_TypeError);

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def_static("parse", [](const std::string& text) { return KnowledgeBase::parse(text); },
                    py::arg("text"))
        .def_static("load", &KnowledgeBase::load, py::arg("path"))
        .def("documents",
             [](const KnowledgeBase& kb) {
                 py::list out;
                 for (const auto& d : kb.documents()) out.append(doc_to_dict(d));
                 return out;
             })
        .def("retrieve",
             [](const KnowledgeBase& kb, const std::string& query,
                const std::optional<std::string>& kind) {
                 std::optional<DocKind> filter;
                 if (kind) {
                     if (*kind == "POLICY") filter = DocKind::Policy;
                     else if (*kind == "STRATEGY") filter = DocKind::Strategy;
                     else throw ConfigError("kind filter must be POLICY or STRATEGY");
                 }
                 return doc_to_dict(kb.retrieve(query, filter));
             },
             py::arg("query"), py::arg("kind") = py::none())
        .def("retrieve_portfolio",
             [](const KnowledgeBase& kb, const std::string& query) {
                 py::list out;
                 for (const auto& d : kb.retrieve_portfolio(query)) out.append(doc_to_dict(d));
                 return out;
             },
             py::arg("query"))
        .def("extract",
             [](const KnowledgeBase& kb, const std::string& name) {
                 const KnowledgeDocument* doc = kb.find(name);
                 if (!doc) throw NoMatchError("no document named '" + name + "'");
                 const StrategyParameters p = extract_parameters(*doc);
                 return py::make_tuple(p.extra_lead_time, p.transport_cost_premium);
             },
             py::arg("name"))
        .def("serialize", &KnowledgeBase::serialize);

    m.def("similarity",
          [](const std::string& a, const std::string& b) {
              return similarity(tokenize(a), tokenize(b));
          },
          py::arg("query"), py::arg("document"),
          "TF-cosine similarity of two texts after tokenization");

    m.def("rate_cost",
          [](double premium) {
              return std::string(to_string(rate_cost(StrategyParameters{0, premium})));
          },
          py::arg("transport_cost_premium"));
    m.def("rate_speed",
          [](int extra_lead_time) {
              return std::string(to_string(rate_speed(StrategyParameters{extra_lead_time, 0.0})));
          },
          py::arg("extra_lead_time"));

    m.def("run_simulation",
          [](const std::string& config_json, const std::string& base_dir) {
              const RunResult r = run_simulation(config_from_json(config_json, base_dir));
              py::dict d;
              d["report"] = report_to_dict(r.report);
              d["trace_csv"] = trace_csv_string(r.trace);
              d["emergencies_fired"] = r.emergencies_fired;
              d["retrieval_fallbacks"] = r.retrieval_fallbacks;
              return d;
          },
          py::arg("config_json") = "{}", py::arg("base_dir") = ".",
          "Run one simulation; config is a JSON document string");

    m.def("run_replications",
          [](const std::string& config_json, int n, const std::string& base_dir) {
              return stats_to_dict(run_replications(config_from_json(config_json, base_dir), n));
          },
          py::arg("config_json") = "{}", py::arg("n") = 30, py::arg("base_dir") = ".");

    m.def("scenario_suite",
          [](const std::string& config_json, const std::vector<std::string>& policy_names,
             int reps, const std::string& base_dir) {
              std::vector<PolicyKind> policies;
              for (const auto& name : policy_names) {
                  const auto p = policy_from_string(name);
                  if (!p) throw ConfigError("unknown policy '" + name + "'");
                  policies.push_back(*p);
              }
              const std::vector<DisruptionKind> scenarios{
                  DisruptionKind::SupplierFailure, DisruptionKind::TransportDisruption,
                  DisruptionKind::DemandSurge, DisruptionKind::QualityFailure};
              const SuiteReport suite = scenario_suite(
                  config_from_json(config_json, base_dir), policies, scenarios, reps);
              py::list cells;
              for (const auto& cell : suite.cells) {
                  py::dict d = stats_to_dict(cell.stats);
                  d["scenario"] = std::string(to_string(cell.scenario));
                  d["policy"] = std::string(to_string(cell.policy));
                  cells.append(d);
              }
              std::ostringstream csv;
              write_suite_csv(csv, suite);
              py::dict out;
              out["cells"] = cells;
              out["suite_csv"] = csv.str();
              return out;
          },
          py::arg("config_json") = "{}",
          py::arg("policies") = std::vector<std::string>{"static-baseline", "selfish-rag"},
          py::arg("reps") = 30, py::arg("base_dir") = ".");

    m.def("strategic_choice",
          [](const std::string& config_json, const std::string& base_dir) {
              const StrategicChoiceResult r =
                  strategic_choice_experiment(config_from_json(config_json, base_dir));
              py::dict out;
              py::list portfolio;
              for (const auto& doc : r.portfolio) portfolio.append(doc_to_dict(doc));
              out["portfolio"] = portfolio;
              py::list evals;
              for (const auto& e : r.evaluations) {
                  py::dict d;
                  d["strategy"] = e.strategy_name;
                  d["cost_rating"] = std::string(to_string(e.cost));
                  d["speed_rating"] = std::string(to_string(e.speed));
                  d["rendered_prompt"] = e.rendered_prompt;
                  evals.append(d);
              }
              out["evaluations"] = evals;
              py::list frontier;
              for (const auto& p : r.frontier) {
                  py::dict d;
                  d["strategy"] = p.strategy_name;
                  d["total_cost"] = p.total_cost;
                  d["service_level"] = p.service_level;
                  d["cost_rating"] = std::string(to_string(p.cost_rating));
                  d["speed_rating"] = std::string(to_string(p.speed_rating));
                  d["dominated"] = p.dominated;
                  frontier.append(d);
              }
              out["frontier"] = frontier;
              return out;
          },
          py::arg("config_json"), py::arg("base_dir") = ".");

    m.def("hoarding_demo",
          [](const std::string& config_json, const std::string& base_dir) {
              RunConfig config = config_from_json(config_json, base_dir);
              config.policy = PolicyKind::HoardingVmi;
              config.policy_source = PolicySource::SgaAtT0;
              const HoardingDemoResult r = hoarding_demo(config);
              py::dict d;
              d["report"] = report_to_dict(r.report);
              d["trace_csv"] = trace_csv_string(r.trace);
              return d;
          },
          py::arg("config_json") = "{}", py::arg("base_dir") = ".");

    m.def("render_frontier_svg",
          [](const std::string& config_json, const std::string& base_dir) {
              const StrategicChoiceResult r =
                  strategic_choice_experiment(config_from_json(config_json, base_dir));
              return render_frontier_svg(r.frontier, "Strategic trade-off frontier");
          },
          py::arg("config_json"), py::arg("base_dir") = ".");
}
