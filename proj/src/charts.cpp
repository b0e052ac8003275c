#include "bullwhip/charts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bullwhip {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 55.0;

constexpr std::array<const char*, 3> kSeriesColor{"#1f77b4", "#ff7f0e", "#2ca02c"};

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

std::string fmt_tick(double v) {
    std::ostringstream os;
    if (std::abs(v - std::round(v)) < 1e-9) {
        os << static_cast<long long>(std::llround(v));
    } else {
        os.precision(1);
        os << std::fixed << v;
    }
    return os.str();
}

struct Scale {
    double domain_min, domain_max, range_min, range_max;
    double operator()(double v) const {
        const double span = domain_max - domain_min;
        if (span <= 0) return (range_min + range_max) / 2.0;
        return range_min + (v - domain_min) / span * (range_max - range_min);
    }
};

void svg_header(std::ostringstream& os, const std::string& title) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" fill=\"#ffffff\"/>\n";
    os << "  <text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"17\" fill=\"#202020\">"
       << escape_xml(title) << "</text>\n";
}

void axes(std::ostringstream& os, const Scale& x, const Scale& y, const std::string& x_label,
          const std::string& y_label, int ticks = 5) {
    const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    os << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
       << "\" stroke=\"#404040\"/>\n";
    os << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
       << "\" stroke=\"#404040\"/>\n";
    for (int i = 0; i <= ticks; ++i) {
        const double t = static_cast<double>(i) / ticks;
        const double xv = x.domain_min + t * (x.domain_max - x.domain_min);
        const double yv = y.domain_min + t * (y.domain_max - y.domain_min);
        os << "  <text x=\"" << fmt(x(xv)) << "\" y=\"" << y0 + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
              "fill=\"#404040\">"
           << fmt_tick(xv) << "</text>\n";
        os << "  <text x=\"" << x0 - 8 << "\" y=\"" << fmt(y(yv) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
              "fill=\"#404040\">"
           << fmt_tick(yv) << "</text>\n";
        os << "  <line x1=\"" << x0 << "\" y1=\"" << fmt(y(yv)) << "\" x2=\"" << x1
           << "\" y2=\"" << fmt(y(yv)) << "\" stroke=\"#e0e0e0\" stroke-width=\"0.6\"/>\n";
    }
    os << "  <text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 14
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
          "fill=\"#202020\">"
       << escape_xml(x_label) << "</text>\n";
    os << "  <text x=\"20\" y=\"" << (y0 + y1) / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
          "fill=\"#202020\" transform=\"rotate(-90 20 "
       << (y0 + y1) / 2 << ")\">" << escape_xml(y_label) << "</text>\n";
}

}  // namespace

std::string render_timeseries_svg(const std::vector<DayRecord>& trace,
                                  std::optional<std::pair<int, int>> shaded_window,
                                  const std::string& title) {
    if (trace.empty()) throw ConfigError("cannot render a time series from an empty trace");

    std::int64_t max_level = 1;
    for (const DayRecord& rec : trace)
        for (const auto& e : rec.entities) max_level = std::max(max_level, e.on_hand);

    const int last_day = trace.back().day;
    const Scale x{static_cast<double>(trace.front().day), std::max<double>(last_day, 1.0),
                  kMarginLeft, kWidth - kMarginRight};
    const Scale y{0.0, static_cast<double>(max_level) * 1.05, kHeight - kMarginBottom,
                  kMarginTop};

    std::ostringstream os;
    svg_header(os, title);

    if (shaded_window && shaded_window->second > shaded_window->first) {
        const double wx0 = x(shaded_window->first);
        const double wx1 = x(std::min(shaded_window->second, last_day));
        if (wx1 > wx0) {
            os << "  <rect x=\"" << fmt(wx0) << "\" y=\"" << kMarginTop << "\" width=\""
               << fmt(wx1 - wx0) << "\" height=\"" << kHeight - kMarginTop - kMarginBottom
               << "\" fill=\"#d62728\" fill-opacity=\"0.10\"/>\n";
        }
    }

    axes(os, x, y, "day", "on-hand units");

    const double legend_x = kWidth - kMarginRight + 16;
    for (Role r : kAllRoles) {
        const std::size_t i = index_of(r);
        std::ostringstream points;
        for (const DayRecord& rec : trace) {
            points << fmt(x(rec.day)) << ',' << fmt(y(static_cast<double>(rec.entities[i].on_hand)))
                   << ' ';
        }
        os << "  <polyline fill=\"none\" stroke=\"" << kSeriesColor[i]
           << "\" stroke-width=\"1.8\" points=\"" << points.str() << "\"/>\n";
        const double ly = kMarginTop + 18 + 22 * static_cast<double>(i);
        os << "  <line x1=\"" << legend_x << "\" y1=\"" << ly << "\" x2=\"" << legend_x + 24
           << "\" y2=\"" << ly << "\" stroke=\"" << kSeriesColor[i]
           << "\" stroke-width=\"2.5\"/>\n";
        os << "  <text x=\"" << legend_x + 30 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#202020\">"
           << to_string(r) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_frontier_svg(const std::vector<FrontierPoint>& points,
                                const std::string& title) {
    double cost_min = 0.0, cost_max = 1.0, svc_min = 0.0, svc_max = 100.0;
    if (!points.empty()) {
        cost_min = cost_max = points.front().total_cost;
        svc_min = svc_max = points.front().service_level;
        for (const FrontierPoint& p : points) {
            cost_min = std::min(cost_min, p.total_cost);
            cost_max = std::max(cost_max, p.total_cost);
            svc_min = std::min(svc_min, p.service_level);
            svc_max = std::max(svc_max, p.service_level);
        }
        const double cost_pad = std::max(1.0, (cost_max - cost_min) * 0.15);
        cost_min -= cost_pad;
        cost_max += cost_pad;
        const double svc_pad = std::max(0.5, (svc_max - svc_min) * 0.15);
        svc_min = std::max(0.0, svc_min - svc_pad);
        svc_max = std::min(102.0, svc_max + svc_pad);
    }

    const Scale x{cost_min, cost_max, kMarginLeft, kWidth - kMarginRight};
    const Scale y{svc_min, svc_max, kHeight - kMarginBottom, kMarginTop};

    std::ostringstream os;
    svg_header(os, title);
    axes(os, x, y, "total cost", "service level (%)");

    for (std::size_t i = 0; i < points.size(); ++i) {
        const FrontierPoint& p = points[i];
        const char* color = kSeriesColor[i % kSeriesColor.size()];
        os << "  <circle cx=\"" << fmt(x(p.total_cost)) << "\" cy=\"" << fmt(y(p.service_level))
           << "\" r=\"6\" fill=\"" << color << "\" fill-opacity=\""
           << (p.dominated ? "0.35" : "0.9") << "\"/>\n";
        os << "  <text x=\"" << fmt(x(p.total_cost) + 10) << "\" y=\""
           << fmt(y(p.service_level) - 8)
           << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#202020\">"
           << escape_xml(p.strategy_name) << " (" << to_string(p.cost_rating) << " / "
           << to_string(p.speed_rating) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bullwhip
