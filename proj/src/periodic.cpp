#include "qgraph/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "qgraph/discrete_spectra.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/metric_spectra.hpp"

namespace qgraph {

namespace {

bool is_zero(const Label& l) {
  return std::all_of(l.begin(), l.end(), [](std::int64_t x) { return x == 0; });
}

double phase(const Label& l, std::span<const double> theta) {
  double s = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) s += theta[i] * static_cast<double>(l[i]);
  return s;
}

void check_theta(const PeriodicGraph& pg, std::span<const double> theta) {
  if (theta.size() != static_cast<std::size_t>(pg.rank))
    throw PreconditionError("theta has " + std::to_string(theta.size()) + " components, rank is " +
                            std::to_string(pg.rank));
}

}  // namespace

std::string label_string(const Label& label) {
  if (label.size() == 1) return std::to_string(label[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "," : "") + std::to_string(label[i]);
  return s + ")";
}

PeriodicGraph make_periodic(WeightedGraph quotient, std::vector<Label> labels) {
  if (labels.size() != quotient.edge_count()) throw ValidationError("one label per edge expected");
  if (quotient.mode() != WeightMode::Standard) throw ValidationError("periodic graphs use standard weights");
  std::size_t rank = 0;
  for (const Label& l : labels) rank = std::max(rank, l.size());
  if (rank == 0) throw ValidationError("no edge carries a translation label");
  for (std::size_t e = 0; e < labels.size(); ++e) {
    if (labels[e].empty()) labels[e].assign(rank, 0);
    if (labels[e].size() != rank)
      throw ValidationError("edge '" + quotient.edge(e).name + "' has a label of length " +
                            std::to_string(labels[e].size()) + ", expected " + std::to_string(rank));
  }
  if (std::all_of(labels.begin(), labels.end(), is_zero)) throw ValidationError("all translation labels are zero");
  if (quotient.vertex_count() == 0 || !is_connected(quotient)) throw ValidationError("quotient graph is not connected");
  return PeriodicGraph{std::move(quotient), static_cast<int>(rank), std::move(labels)};
}

bool has_nonzero_label(const GraphSpec& spec) {
  return std::any_of(spec.edges.begin(), spec.edges.end(), [](const EdgeSpec& e) { return !is_zero(e.label); });
}

PeriodicGraph build_periodic(const GraphSpec& spec) {
  std::size_t rank = 0;
  for (const EdgeSpec& e : spec.edges) rank = std::max(rank, e.label.size());
  for (const EdgeSpec& e : spec.edges)
    if (!e.label.empty() && e.label.size() != rank)
      throw ValidationError("edge '" + e.id + "' has a label of length " + std::to_string(e.label.size()) +
                                ", expected " + std::to_string(rank),
                            e.line);
  if (spec.weight_mode != WeightMode::Standard) throw ValidationError("periodic graphs use standard weights");
  GraphSpec plain = spec;
  plain.boundary.clear();
  WeightedGraph q = build_graph(plain);
  std::vector<Label> labels;
  for (const EdgeSpec& e : spec.edges)
    for (int c = 0; c < e.multiplicity; ++c) labels.push_back(e.label);
  return make_periodic(std::move(q), std::move(labels));
}

FundamentalDomain derive_fundamental_domain(const PeriodicGraph& pg) {
  const WeightedGraph& q = pg.quotient;
  std::vector<std::string> names = q.vertex_names();
  std::vector<VertexId> origin(q.vertex_count());
  std::vector<Label> shift(q.vertex_count(), Label(pg.rank, 0));
  for (VertexId v = 0; v < q.vertex_count(); ++v) origin[v] = v;

  std::map<std::pair<VertexId, Label>, VertexId> copies;
  std::vector<Edge> edges;
  std::vector<bool> boundary(q.vertex_count(), false);
  for (EdgeId id = 0; id < q.edge_count(); ++id) {
    Edge e = q.edge(id);
    const Label& l = pg.labels[id];
    if (!is_zero(l)) {
      auto [it, fresh] = copies.try_emplace({e.head, l}, names.size());
      if (fresh) {
        names.push_back(q.vertex_name(e.head) + "^" + label_string(l));
        origin.push_back(e.head);
        shift.push_back(l);
        boundary.push_back(true);
        boundary[e.head] = true;
      }
      e.head = it->second;
    }
    edges.push_back(e);
  }

  std::vector<std::size_t> degree(names.size(), 0);
  for (const Edge& e : edges) {
    ++degree[e.tail];
    ++degree[e.head];
  }
  std::vector<VertexId> remap(names.size());
  std::vector<VertexId> kept_origin;
  std::vector<Label> kept_shift;
  std::vector<std::string> kept;
  std::vector<VertexId> bnd;
  for (VertexId v = 0; v < names.size(); ++v) {
    if (degree[v] == 0) continue;
    remap[v] = kept.size();
    if (boundary[v]) bnd.push_back(kept.size());
    kept.push_back(names[v]);
    kept_origin.push_back(origin[v]);
    kept_shift.push_back(shift[v]);
  }
  for (Edge& e : edges) {
    e.tail = remap[e.tail];
    e.head = remap[e.head];
  }
  return FundamentalDomain{WeightedGraph::standard(std::move(kept), std::move(edges), std::move(bnd)),
                           std::move(kept_origin), std::move(kept_shift)};
}

HermitianMatrix twisted_laplacian(const PeriodicGraph& pg, std::span<const double> theta) {
  check_theta(pg, theta);
  const WeightedGraph& q = pg.quotient;
  HermitianMatrix m(q.vertex_count());
  std::vector<double> diag(q.vertex_count(), 1.0);
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (q.degree(v) == 0) diag[v] = 0.0;
  for (EdgeId id = 0; id < q.edge_count(); ++id) {
    const Edge& e = q.edge(id);
    const double p = phase(pg.labels[id], theta);
    if (e.is_loop()) {
      diag[e.tail] -= 2.0 * std::cos(p) / static_cast<double>(q.degree(e.tail));
      continue;
    }
    const double scale = std::sqrt(static_cast<double>(q.degree(e.tail)) * static_cast<double>(q.degree(e.head)));
    m.add(e.tail, e.head, -std::polar(1.0, p) / scale);
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v) m.set(v, v, diag[v]);
  return m;
}

std::vector<double> twisted_eigenvalues(const PeriodicGraph& pg, std::span<const double> theta) {
  return hermitian_eigenvalues(twisted_laplacian(pg, theta));
}

void for_each_grid_point(int rank, int grid, const std::function<void(std::span<const double>)>& fn) {
  if (grid < 1) throw PreconditionError("grid size must be positive");
  std::vector<int> idx(rank, 0);
  std::vector<double> theta(rank, 0.0);
  const double step = 2.0 * std::numbers::pi / grid;
  while (true) {
    for (int i = 0; i < rank; ++i) theta[i] = step * idx[i];
    fn(theta);
    int i = 0;
    while (i < rank && ++idx[i] == grid) idx[i++] = 0;
    if (i == rank) break;
  }
}

std::vector<Band> floquet_bands(const PeriodicGraph& pg, int grid) {
  if (grid < 2) throw PreconditionError("floquet_bands needs at least 2 grid points per axis");
  const std::size_t n = pg.quotient.vertex_count();
  std::vector<Band> bands(n);
  for (std::size_t k = 0; k < n; ++k) {
    bands[k].index = k + 1;
    bands[k].lo = std::numeric_limits<double>::infinity();
    bands[k].hi = -std::numeric_limits<double>::infinity();
  }
  for_each_grid_point(pg.rank, grid, [&](std::span<const double> theta) {
    const auto ev = twisted_eigenvalues(pg, theta);
    for (std::size_t k = 0; k < n; ++k) {
      bands[k].lo = std::min(bands[k].lo, ev[k]);
      bands[k].hi = std::max(bands[k].hi, ev[k]);
    }
  });
  for (auto& b : bands) b.flat = b.hi - b.lo < kFlatBandWidth;
  return bands;
}

std::size_t twisted_nullity(const PeriodicGraph& pg, std::span<const double> theta, bool oriented) {
  check_theta(pg, theta);
  const WeightedGraph& q = pg.quotient;
  const std::size_t E = q.edge_count();
  // rows of d_θ: (d f)_e = ρ(γ_e) f(head) ± f(tail)
  std::vector<std::vector<std::complex<double>>> d(E, std::vector<std::complex<double>>(q.vertex_count()));
  for (EdgeId id = 0; id < E; ++id) {
    const Edge& e = q.edge(id);
    d[id][e.head] += std::polar(1.0, phase(pg.labels[id], theta));
    d[id][e.tail] += oriented ? -1.0 : 1.0;
  }
  HermitianMatrix dd(E);
  for (std::size_t i = 0; i < E; ++i)
    for (std::size_t j = i; j < E; ++j) {
      std::complex<double> s = 0.0;
      for (VertexId v = 0; v < q.vertex_count(); ++v) s += d[i][v] * std::conj(d[j][v]);
      dd.set(i, j, s);
    }
  const auto ev = hermitian_eigenvalues(dd);
  return static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [](double x) { return x < 1e-9; }));
}

BracketReport verify_bracketing(const PeriodicGraph& pg, int grid) {
  const FundamentalDomain fd = derive_fundamental_domain(pg);
  const auto kirchhoff = jacobi_eigenvalues(laplacian_matrix(fd.graph));
  const auto dirichlet = jacobi_eigenvalues(dirichlet_laplacian_matrix(fd.graph));
  const std::size_t n = pg.quotient.vertex_count();

  BracketReport r;
  r.worst_lower_margin = std::numeric_limits<double>::infinity();
  r.worst_upper_margin = std::numeric_limits<double>::infinity();
  for_each_grid_point(pg.rank, grid, [&](std::span<const double> theta) {
    ++r.samples;
    const auto ev = twisted_eigenvalues(pg, theta);
    for (std::size_t k = 0; k < n; ++k) {
      const double lo = kirchhoff.at(k);
      const double hi = k < dirichlet.size() ? dirichlet[k] : 2.0;
      ++r.checks;
      r.worst_lower_margin = std::min(r.worst_lower_margin, ev[k] - lo);
      r.worst_upper_margin = std::min(r.worst_upper_margin, hi - ev[k]);
      if (ev[k] < lo - kBracketTolerance || ev[k] > hi + kBracketTolerance)
        r.violations.push_back({std::vector<double>(theta.begin(), theta.end()), k + 1, ev[k], lo, hi});
    }
  });
  return r;
}

double closed_branch(double mu, int n) {
  if (mu <= 0.0) return n % 2 == 0 ? band_floor(n) : band_ceiling(n);
  if (mu >= 2.0) return n % 2 == 0 ? band_ceiling(n) : band_floor(n);
  return lambda_branch(mu, n);
}

std::vector<MetricBand> metric_bands(const PeriodicGraph& pg, const std::vector<Band>& bands, int n_max) {
  const auto V = static_cast<long>(pg.quotient.vertex_count());
  const auto E = static_cast<long>(pg.quotient.edge_count());
  std::vector<MetricBand> out;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<MetricBand> block;
    for (const Band& b : bands) {
      double lo = closed_branch(std::clamp(b.lo, 0.0, 2.0), n);
      double hi = closed_branch(std::clamp(b.hi, 0.0, 2.0), n);
      if (lo > hi) std::swap(lo, hi);
      block.push_back({n, lo, hi, b.flat, false});
    }
    for (long i = 0; i < E - V; ++i) block.push_back({n, band_ceiling(n), band_ceiling(n), true, true});
    std::stable_sort(block.begin(), block.end(), [](const MetricBand& a, const MetricBand& b) { return a.lo < b.lo; });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace qgraph
