#include "qgraph/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace qgraph {

namespace {

constexpr int kMaxDenominator = 360;
constexpr double kClosedFormTol = 1e-10;

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

Json union_json(const IntervalUnion& u) {
  Json a = Json::array();
  for (const auto& c : u.components()) a.push_back(interval_json(c));
  return a;
}

Json gaps_json(const std::vector<Gap>& gaps) {
  Json a = Json::array();
  for (const auto& g : gaps) a.push_back({{"lo", g.lo}, {"hi", g.hi}, {"open_lo", g.open_lo}, {"open_hi", g.open_hi}});
  return a;
}

std::string gap_text(const Gap& g) {
  return fmt::format("{}{}, {}{}", g.open_lo ? "(" : "[", format_value(g.lo), format_value(g.hi), g.open_hi ? ")" : "]");
}

std::string value_cell(double x) {
  const std::string cf = closed_form(x);
  const std::string v = format_value(x);
  return cf.empty() || cf == v ? v : fmt::format("{:<18} {}", v, cf);
}

}  // namespace

std::string closed_form(double x) {
  if (!std::isfinite(x)) return "";
  for (int q = 1; q <= kMaxDenominator; ++q) {
    const double p = std::round(x * q);
    if (std::abs(x - p / q) <= kClosedFormTol) {
      const auto pi = static_cast<long long>(p);
      const long long g = std::gcd(std::llabs(pi), static_cast<long long>(q));
      const long long num = g ? pi / g : pi;
      const long long den = g ? q / g : q;
      return den == 1 ? fmt::format("{}", num) : fmt::format("{}/{}", num, den);
    }
  }
  return "";
}

std::string format_value(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  return fmt::format("{:.12g}", x);
}

Json to_json(const Spectrum& s) {
  Json a = Json::array();
  for (const auto& v : s.values) {
    Json row{{"value", v.value}, {"multiplicity", v.multiplicity}};
    if (auto cf = closed_form(v.value); !cf.empty()) row["exact"] = cf;
    a.push_back(row);
  }
  return {{"values", a}};
}

Json to_json(const MetricSpectrum& s) {
  Json a = Json::array();
  for (const auto& v : s.values)
    a.push_back({{"lambda", v.lambda}, {"multiplicity", v.multiplicity}, {"band", v.band}, {"case", to_string(v.tag)}});
  return {{"dirichlet", s.dirichlet}, {"values", a}};
}

Json to_json(const BettiReport& b) {
  return {{"relative", b.relative}, {"b0", b.b0},         {"b1", b.b1},
          {"b0_bar", b.b0_bar},     {"b1_bar", b.b1_bar}, {"bipartite", b.beta == 1}};
}

Json to_json(const KDTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"k", r.k}, {"interval", interval_json(r.interval)}, {"case", to_string(r.tag)}, {"degenerate", r.degenerate}};
    if (t.metric) row["n"] = r.n;
    rows.push_back(row);
  }
  Json j{{"metric", t.metric}, {"bipartite", t.bipartite}, {"rows", rows}, {"review", t.review}};
  if (t.review) j["review_reason"] = t.review_reason;
  return j;
}

Json to_json(const std::vector<Band>& bands) {
  Json a = Json::array();
  for (const auto& b : bands) a.push_back({{"k", b.index}, {"lo", b.lo}, {"hi", b.hi}, {"flat", b.flat}});
  return a;
}

Json to_json(const std::vector<MetricBand>& bands) {
  Json a = Json::array();
  for (const auto& b : bands)
    a.push_back({{"n", b.n}, {"lo", b.lo}, {"hi", b.hi}, {"flat", b.flat}, {"topological", b.topological}});
  return a;
}

Json to_json(const GapReport& r) {
  Json j{{"metric", r.metric}, {"range", interval_json(r.range)}, {"bipartite_covering", r.bipartite}};
  if (r.metric) j["n_max"] = r.n_max;
  j["kd_table"] = to_json(r.table);
  j["kd_union"] = union_json(r.kd);
  j["kd_gaps"] = gaps_json(r.kd_gaps);
  if (r.symmetrized) j["symmetrized"] = union_json(*r.symmetrized);
  j["certified_gaps"] = gaps_json(r.certified_gaps);
  j["pinned"] = r.pinned;
  if (r.bands_computed) {
    j["bands"] = to_json(r.bands);
    if (r.metric) j["metric_bands"] = to_json(r.metric_bands);
    j["band_gaps"] = gaps_json(r.band_gaps);
  }
  if (r.component_lower_bound) j["component_lower_bound"] = *r.component_lower_bound;
  j["notes"] = r.notes;
  return j;
}

std::string render_text(const Spectrum& s) {
  std::string out = fmt::format("{:<32} {}\n", "value", "mult");
  for (const auto& v : s.values) out += fmt::format("{:<32} {}\n", value_cell(v.value), v.multiplicity);
  return out;
}

std::string render_text(const MetricSpectrum& s) {
  std::string out = fmt::format("{:<4} {:<22} {:<5} {}\n", "n", "lambda", "mult", "case");
  for (const auto& v : s.values)
    out += fmt::format("{:<4} {:<22} {:<5} {}\n", v.band, format_value(v.lambda), v.multiplicity, to_string(v.tag));
  return out;
}

std::string render_text(const BettiReport& b, bool unoriented) {
  const std::string rel = b.relative ? " (relative)" : "";
  if (unoriented) return fmt::format("b0_bar{} = {}\nb1_bar{} = {}\n", rel, b.b0_bar, rel, b.b1_bar);
  return fmt::format("b0{} = {}\nb1{} = {}\n", rel, b.b0, rel, b.b1);
}

std::string render_text(const KDTable& t) {
  std::string out;
  out += fmt::format("{:<5}{}{:<22} {:<22} {:<5} {}\n", "k", t.metric ? "n    " : "", "lo", "hi", "case", "");
  for (const auto& r : t.rows) {
    out += fmt::format("{:<5}{}{:<22} {:<22} {:<5} {}\n", r.k, t.metric ? fmt::format("{:<5}", r.n) : "",
                       format_value(r.interval.lo), format_value(r.interval.hi), to_string(r.tag),
                       r.degenerate ? "degenerate" : "");
  }
  if (t.review) out += "review: " + t.review_reason + "\n";
  return out;
}

std::string render_text(const std::vector<Band>& bands) {
  std::string out = fmt::format("{:<5} {:<22} {:<22} {}\n", "k", "lo", "hi", "");
  for (const auto& b : bands)
    out += fmt::format("{:<5} {:<22} {:<22} {}\n", b.index, format_value(b.lo), format_value(b.hi), b.flat ? "flat" : "");
  return out;
}

std::string render_text(const std::vector<MetricBand>& bands) {
  std::string out = fmt::format("{:<4} {:<22} {:<22} {}\n", "n", "lo", "hi", "");
  for (const auto& b : bands)
    out += fmt::format("{:<4} {:<22} {:<22} {}\n", b.n, format_value(b.lo), format_value(b.hi),
                       b.topological ? "topological" : (b.flat ? "flat" : ""));
  return out;
}

std::string render_text(const GapReport& r) {
  std::string out = render_text(r.table);
  out += fmt::format("covering bipartite: {}\n", r.bipartite ? "yes" : "no");
  auto list_union = [](const IntervalUnion& u) {
    std::string s;
    for (const auto& c : u.components())
      s += fmt::format("{}[{}, {}]", s.empty() ? "" : " u ", format_value(c.lo), format_value(c.hi));
    return s.empty() ? std::string("empty") : s;
  };
  out += "KD union: " + list_union(r.kd) + "\n";
  if (r.symmetrized) out += "symmetrized: " + list_union(*r.symmetrized) + "\n";
  if (r.certified_gaps.empty()) {
    out += "no gap certified\n";
  } else {
    for (const auto& g : r.certified_gaps) out += "certified gap " + gap_text(g) + "\n";
  }
  for (double p : r.pinned) out += "always in the spectrum: " + value_cell(p) + "\n";
  if (r.bands_computed) {
    out += "bands:\n" + (r.metric ? render_text(r.metric_bands) : render_text(r.bands));
    if (r.band_gaps.empty()) out += "no band gap on the grid\n";
    for (const auto& g : r.band_gaps) out += "band gap " + gap_text(g) + "\n";
  }
  if (r.component_lower_bound) out += fmt::format("spectral components >= {}\n", *r.component_lower_bound);
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

std::string render_svg(const GapReport& r) {
  constexpr double kWidth = 800.0;
  constexpr double kLeft = 110.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 30.0;
  constexpr double kRow = 16.0;
  constexpr double kBar = 10.0;

  struct Row {
    std::string label;
    std::vector<Interval> pieces;
    const char* colour;
  };
  std::vector<Row> rows;
  if (r.bands_computed) {
    if (r.metric) {
      for (std::size_t i = 0; i < r.metric_bands.size(); ++i)
        rows.push_back({fmt::format("band {}", i + 1), {{r.metric_bands[i].lo, r.metric_bands[i].hi}}, "#1f5fa8"});
    } else {
      for (const auto& b : r.bands) rows.push_back({fmt::format("B{}", b.index), {{b.lo, b.hi}}, "#1f5fa8"});
    }
  }
  for (const auto& row : r.table.rows)
    rows.push_back({fmt::format("J{}", row.k), {row.interval}, "#c8641e"});
  const IntervalUnion& cert = r.symmetrized ? *r.symmetrized : r.kd;
  rows.push_back({r.symmetrized ? "J sym" : "J", cert.components(), "#2a8a3c"});

  const double span = r.range.hi - r.range.lo;
  const double plot = kWidth - kLeft - kRight;
  auto X = [&](double v) { return kLeft + plot * (std::clamp(v, r.range.lo, r.range.hi) - r.range.lo) / span; };
  const double height = kTop + kRow * static_cast<double>(rows.size()) + 40.0;

  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      kWidth, height, kWidth, height);
  s += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, height);
  const double bottom = kTop + kRow * static_cast<double>(rows.size());
  for (const auto& g : r.certified_gaps)
    s += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"#e6e6e6\"/>\n", X(g.lo),
                     kTop - 6.0, X(g.hi) - X(g.lo), bottom - kTop + 6.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double y = kTop + kRow * static_cast<double>(i);
    s += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"end\">{}</text>\n",
                     kLeft - 8.0, y + kBar - 1.0, rows[i].label);
    for (const auto& p : rows[i].pieces) {
      const double w = std::max(1.5, X(p.hi) - X(p.lo));
      s += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n", X(p.lo), y,
                       w, kBar, rows[i].colour);
    }
  }
  s += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"black\"/>\n", kLeft, bottom + 4.0,
                   kLeft + plot, bottom + 4.0);
  std::vector<std::pair<double, std::string>> ticks;
  if (r.metric) {
    for (int n = 0; n <= r.n_max + 1; ++n) ticks.push_back({band_floor(n), n == 0 ? "0" : fmt::format("({}pi)^2", n)});
  } else {
    for (int i = 0; i <= 8; ++i) ticks.push_back({0.25 * i, fmt::format("{:.2f}", 0.25 * i)});
  }
  for (const auto& [v, label] : ticks) {
    s += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"black\"/>\n", X(v),
                     bottom + 4.0, X(v), bottom + 9.0);
    s += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
                     X(v), bottom + 21.0, label);
  }
  s += "</svg>\n";
  return s;
}

}  // namespace qgraph
