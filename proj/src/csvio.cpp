#include "bullwhip/csvio.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bullwhip {

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& os, const std::vector<DayRecord>& trace) {
    os << "day,entity,on_hand,backorders,on_order,demand,fulfilled,"
          "holding_cost,backorder_cost,premium_cost\n";
    for (const DayRecord& rec : trace) {
        for (Role r : kAllRoles) {
            const EntityDayRecord& e = rec.entities[index_of(r)];
            os << rec.day << ',' << to_string(r) << ',' << e.on_hand << ',' << e.backorders
               << ',' << e.on_order << ',' << e.demand << ',' << e.fulfilled << ','
               << format_double(e.holding_cost) << ',' << format_double(e.backorder_cost)
               << ',' << format_double(e.premium_cost) << '\n';
        }
    }
}

void write_kpi_csv(std::ostream& os, const KpiReport& report) {
    os << "total_cost,holding_cost,backorder_cost,premium_cost,service_level,"
          "holding_supplier,holding_manufacturer,holding_retailer,"
          "total_demand,total_fulfilled\n";
    os << format_double(report.total_cost) << ',' << format_double(report.holding_cost) << ','
       << format_double(report.backorder_cost) << ',' << format_double(report.premium_cost)
       << ',' << format_double(report.service_level);
    for (double h : report.holding_by_role) os << ',' << format_double(h);
    os << ',' << report.total_demand << ',' << report.total_fulfilled << '\n';
}

void write_suite_csv(std::ostream& os, const SuiteReport& suite) {
    os << "scenario,policy,mean_cost,std_cost,mean_service,std_service,n\n";
    for (const SuiteCell& cell : suite.cells) {
        os << to_string(cell.scenario) << ',' << to_string(cell.policy) << ','
           << format_double(cell.stats.mean_cost) << ',' << format_double(cell.stats.std_cost)
           << ',' << format_double(cell.stats.mean_service) << ','
           << format_double(cell.stats.std_service) << ',' << cell.stats.n << '\n';
    }
}

void write_frontier_csv(std::ostream& os, const std::vector<FrontierPoint>& points) {
    os << "strategy,total_cost,service_level,cost_rating,speed_rating\n";
    for (const FrontierPoint& p : points) {
        os << p.strategy_name << ',' << format_double(p.total_cost) << ','
           << format_double(p.service_level) << ',' << to_string(p.cost_rating) << ','
           << to_string(p.speed_rating) << '\n';
    }
}

void write_evaluations_csv(std::ostream& os, const std::vector<Evaluation>& evals) {
    os << "strategy,cost_rating,speed_rating\n";
    for (const Evaluation& e : evals)
        os << e.strategy_name << ',' << to_string(e.cost) << ',' << to_string(e.speed) << '\n';
}

std::string trace_csv_string(const std::vector<DayRecord>& trace) {
    std::ostringstream os;
    write_trace_csv(os, trace);
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::vector<DayRecord> parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trace CSV is empty");

    std::vector<DayRecord> trace;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 10)
            throw std::runtime_error("trace CSV row has " + std::to_string(fields.size()) +
                                     " fields, expected 10");
        const int day = std::stoi(fields[0]);
        const auto role = role_from_string(fields[1]);
        if (!role) throw std::runtime_error("unknown entity '" + fields[1] + "' in trace CSV");
        if (trace.empty() || trace.back().day != day) {
            DayRecord rec;
            rec.day = day;
            trace.push_back(rec);
        }
        EntityDayRecord& e = trace.back().entities[index_of(*role)];
        e.on_hand = std::stoll(fields[2]);
        e.backorders = std::stoll(fields[3]);
        e.on_order = std::stoll(fields[4]);
        e.demand = std::stoll(fields[5]);
        e.fulfilled = std::stoll(fields[6]);
        e.holding_cost = std::stod(fields[7]);
        e.backorder_cost = std::stod(fields[8]);
        e.premium_cost = std::stod(fields[9]);
    }
    return trace;
}

std::filesystem::path write_text_file(const std::filesystem::path& out_dir,
                                      const std::string& name, const std::string& content) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " +
                                 ec.message());
    const std::filesystem::path path = out_dir / name;
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << content;
    if (!os) throw std::runtime_error("write failed for " + path.string());
    return path;
}

}  // namespace bullwhip
