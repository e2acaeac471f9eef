#include "qgraph/metric_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgraph/discrete_spectra.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

constexpr double kPi = std::numbers::pi;

bool in_open_unit_range(double mu, double tol) { return mu > tol && mu < 2.0 - tol; }

}  // namespace

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::A0: return "A0";
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
  }
  return "?";
}

std::size_t MetricSpectrum::count_in_band(int n) const {
  std::size_t c = 0;
  for (const auto& v : values)
    if (v.band == n) c += v.multiplicity;
  return c;
}

std::vector<double> MetricSpectrum::band_values(int n) const {
  std::vector<double> out;
  for (const auto& v : values)
    if (v.band == n) out.insert(out.end(), v.multiplicity, v.lambda);
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum MetricSpectrum::merged(double tol) const {
  std::vector<MetricEigenvalue> sorted = values;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MetricEigenvalue& a, const MetricEigenvalue& b) { return a.lambda < b.lambda; });
  Spectrum s;
  s.tolerance = tol;
  for (const auto& v : sorted) {
    if (!s.values.empty() &&
        std::abs(v.lambda - s.values.back().value) <= tol * std::max(1.0, std::abs(v.lambda))) {
      s.values.back().multiplicity += v.multiplicity;
    } else {
      s.values.push_back({v.lambda, v.multiplicity});
    }
  }
  return s;
}

double mu_of_lambda(double lambda) {
  if (lambda < 0.0) throw PreconditionError("mu_of_lambda needs lambda >= 0");
  return 1.0 - std::cos(std::sqrt(lambda));
}

double lambda_branch(double mu, int n) {
  if (!(mu > 0.0 && mu < 2.0)) throw PreconditionError("lambda_branch needs 0 < mu < 2");
  if (n < 0) throw PreconditionError("negative band index");
  const double a = std::acos(1.0 - mu);
  const double root = n % 2 == 0 ? n * kPi + a : (n + 1) * kPi - a;
  return root * root;
}

double band_floor(int n) { return n * n * kPi * kPi; }
double band_ceiling(int n) { return (n + 1) * (n + 1) * kPi * kPi; }

MetricSpectrum equilateral_spectrum(const WeightedGraph& g, bool dirichlet, int n_max) {
  if (!g.all_lengths_one()) throw PreconditionError("equilateral spectrum needs all edge lengths 1");
  if (g.edge_count() == 0) throw PreconditionError("metric graph without edges");
  if (!is_connected(g)) throw PreconditionError("equilateral spectrum needs a connected graph");
  if (n_max < 0) throw PreconditionError("negative n_max");

  const bool use_dir = dirichlet && !g.boundary().empty();
  const bool bipartite = is_bipartite(g).has_value();
  const Spectrum disc = spectrum_of(g, use_dir);
  const BettiReport betti = betti_numbers(g, use_dir);

  std::vector<SpectralValue> case_a;
  for (const auto& v : disc.values)
    if (in_open_unit_range(v.value, disc.tolerance)) case_a.push_back(v);

  MetricSpectrum out;
  out.dirichlet = use_dir;
  for (int n = 0; n <= n_max; ++n) {
    if (!use_dir && (n % 2 == 0 || bipartite)) out.values.push_back({band_floor(n), 1, n, CaseTag::A0});
    for (const auto& v : case_a) out.values.push_back({lambda_branch(v.value, n), v.multiplicity, n, CaseTag::A});
    const std::size_t top = (n + 1) % 2 == 0 ? betti.b1 : betti.b1_bar;
    if (top > 0) out.values.push_back({band_ceiling(n), top, n, CaseTag::B});
    if (out.count_in_band(n) != g.edge_count())
      throw TheoremViolation("K_" + std::to_string(n) + " holds " + std::to_string(out.count_in_band(n)) +
                             " eigenvalues, expected |E| = " + std::to_string(g.edge_count()));
  }
  std::stable_sort(out.values.begin(), out.values.end(), [](const MetricEigenvalue& a, const MetricEigenvalue& b) {
    return a.band != b.band ? a.band < b.band : a.lambda < b.lambda;
  });
  return out;
}

double EdgeFunction::value(double x) const {
  if (omega == 0.0) return alpha + eta * x;
  return alpha * std::cos(omega * x) + eta * std::sin(omega * x);
}

double EdgeFunction::derivative(double x) const {
  if (omega == 0.0) return eta;
  return omega * (-alpha * std::sin(omega * x) + eta * std::cos(omega * x));
}

MetricFunction vertex_eigenfunction(const WeightedGraph& g, const std::vector<double>& F, double lambda) {
  if (F.size() != g.vertex_count()) throw PreconditionError("vertex data does not match the graph");
  if (lambda < 0.0) throw PreconditionError("negative lambda");
  const double k = std::sqrt(lambda);
  const double s = std::sin(k);
  if (lambda > 0.0 && std::abs(s) < 1e-12) throw PreconditionError("lambda lies in the Dirichlet spectrum");

  MetricFunction f;
  for (const Edge& e : g.edges()) {
    EdgeFunction ef;
    ef.kind = EdgeFunction::Kind::Interpolant;
    ef.start = F[e.tail];
    ef.end = F[e.head];
    ef.lambda = lambda;
    ef.omega = k;
    ef.alpha = ef.start;
    ef.eta = lambda == 0.0 ? ef.end - ef.start : (ef.end - ef.start * std::cos(k)) / s;
    f.edges.push_back(ef);
  }
  return f;
}

MetricFunction topological_eigenfunction(const WeightedGraph& g, const OneChain& c, int n, bool relative) {
  if (n < 1) throw PreconditionError("topological eigenfunctions need n >= 1");
  if (c.size() != g.edge_count()) throw PreconditionError("chain does not match the graph");
  if (!is_cycle(g, c, n % 2 == 0, relative))
    throw PreconditionError(n % 2 == 0 ? "chain is not in the oriented kernel" : "chain is not in the unoriented kernel");
  MetricFunction f;
  for (const Rational& eta : c) f.edges.push_back({EdgeFunction::Kind::Trig, 0.0, eta.to_double(), n * kPi});
  return f;
}

MetricFunction trivial_eigenfunction(const WeightedGraph& g, int n) {
  if (n < 0) throw PreconditionError("negative n");
  std::vector<std::uint8_t> side(g.vertex_count(), 0);
  if (n % 2 == 1) {
    auto p = is_bipartite(g);
    if (!p) throw PreconditionError("odd trivial eigenfunction needs a bipartite graph");
    side = p->side;
  }
  MetricFunction f;
  for (const Edge& e : g.edges()) {
    const double alpha = side[e.tail] == 0 ? 1.0 : -1.0;
    f.edges.push_back({EdgeFunction::Kind::Trig, alpha, 0.0, n * kPi});
  }
  return f;
}

double kirchhoff_residual(const MetricFunction& f, const WeightedGraph& g, bool dirichlet) {
  if (f.edges.size() != g.edge_count()) throw PreconditionError("function does not match the graph");
  double worst = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double flux = 0.0;
    auto see = [&](double x) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    };
    for (EdgeId id : g.incident_edges(v)) {
      const Edge& e = g.edge(id);
      const EdgeFunction& fe = f.edges[id];
      if (e.tail == v) {
        see(fe.value(0.0));
        flux -= fe.derivative(0.0);
      }
      if (e.head == v) {
        see(fe.value(1.0));
        flux += fe.derivative(1.0);
      }
    }
    if (lo > hi) continue;
    if (dirichlet && g.is_boundary(v)) {
      worst = std::max({worst, std::abs(lo), std::abs(hi)});
      continue;
    }
    worst = std::max({worst, hi - lo, std::abs(flux)});
  }
  return worst;
}

double tau_symmetry(double lambda, int n) {
  const double tol = 1e-9 * std::max(1.0, band_ceiling(n));
  if (n < 0 || lambda < band_floor(n) - tol || lambda > band_ceiling(n) + tol)
    throw PreconditionError("tau_n needs lambda in K_n");
  const double r = (2 * n + 1) * kPi - std::sqrt(std::max(0.0, lambda));
  return r * r;
}

bool check_tau_symmetry(const MetricSpectrum& s, int n_max, double tol) {
  const Spectrum total = s.merged();
  int top_band = -1;
  for (const auto& v : s.values) top_band = std::max(top_band, v.band);
  auto total_at = [&](double x) {
    for (const auto& v : total.values)
      if (std::abs(v.value - x) <= tol * std::max(1.0, x)) return v.multiplicity;
    return std::size_t{0};
  };
  for (int n = 0; n <= n_max; ++n) {
    const double lo = band_floor(n);
    const double hi = band_ceiling(n);
    const double eps = tol * std::max(1.0, hi);
    std::vector<double> inner;
    for (double x : s.band_values(n))
      if (x > lo + eps && x < hi - eps) inner.push_back(x);
    std::vector<double> mirrored;
    for (double x : inner) mirrored.push_back(tau_symmetry(x, n));
    std::sort(mirrored.begin(), mirrored.end());
    if (mirrored.size() != inner.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (std::abs(mirrored[i] - inner[i]) > eps) return false;
    if (n >= 1 && n < top_band && total_at(lo) != total_at(hi)) return false;
  }
  return true;
}

}  // namespace qgraph
