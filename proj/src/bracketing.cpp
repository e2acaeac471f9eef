#include "qgraph/bracketing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "qgraph/discrete_spectra.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

constexpr double kTagTolerance = 1e-9;

struct Tagged {
  double value;
  CaseTag tag;
};

std::vector<std::vector<VertexId>> components_of(const WeightedGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::queue<VertexId> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size() - 1);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      out.back().push_back(v);
      for (EdgeId id : g.incident_edges(v)) {
        const VertexId w = g.edge(id).opposite(v);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          q.push(w);
        }
      }
    }
  }
  return out;
}

WeightedGraph induced(const WeightedGraph& g, const std::vector<VertexId>& vs) {
  std::vector<VertexId> idx(g.vertex_count(), g.vertex_count());
  std::vector<std::string> names;
  std::vector<VertexId> bnd;
  for (VertexId v : vs) {
    idx[v] = names.size();
    if (g.is_boundary(v)) bnd.push_back(names.size());
    names.push_back(g.vertex_name(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (idx[e.tail] == g.vertex_count()) continue;
    Edge c = e;
    c.tail = idx[e.tail];
    c.head = idx[e.head];
    edges.push_back(c);
  }
  std::sort(bnd.begin(), bnd.end());
  return WeightedGraph::standard(std::move(names), std::move(edges), std::move(bnd));
}

/// Per K_n, the values of every component's equilateral spectrum with tags.
std::vector<std::vector<Tagged>> tagged_blocks(const WeightedGraph& h, bool dirichlet, int n_max) {
  std::vector<std::vector<Tagged>> blocks(n_max + 1);
  for (const auto& vs : components_of(h)) {
    const WeightedGraph c = vs.size() == h.vertex_count() ? h : induced(h, vs);
    if (c.edge_count() == 0) continue;
    const MetricSpectrum s = equilateral_spectrum(c, dirichlet, n_max);
    for (const auto& v : s.values) blocks[v.band].insert(blocks[v.band].end(), v.multiplicity, {v.lambda, v.tag});
  }
  for (auto& b : blocks)
    std::stable_sort(b.begin(), b.end(), [](const Tagged& a, const Tagged& b) { return a.value < b.value; });
  return blocks;
}

void check_nonempty_boundary(const WeightedGraph& h) {
  if (h.boundary().empty()) throw PreconditionError("Kirchhoff-Dirichlet intervals need a nonempty boundary");
}

KDCase combine(CaseTag kirchhoff, bool dirichlet_b) {
  if (kirchhoff == CaseTag::A0) return dirichlet_b ? KDCase::A0B : KDCase::A0A;
  if (kirchhoff == CaseTag::B) {
    if (!dirichlet_b) throw TheoremViolation("Kirchhoff eigenvalue of case B paired with a Dirichlet value of case A");
    return KDCase::BB;
  }
  return dirichlet_b ? KDCase::AB : KDCase::AA;
}

std::string counts_string(const std::map<KDCase, std::size_t>& m) {
  std::string s;
  for (const auto& [c, k] : m) {
    if (k == 0) continue;
    s += (s.empty() ? "" : ", ") + to_string(c) + "x" + std::to_string(k);
  }
  return s.empty() ? "none" : s;
}

std::map<KDCase, std::size_t> nonzero(std::map<KDCase, std::size_t> m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

void check_rows(const KDTable& t, const std::map<KDCase, std::size_t>& expected, int n) {
  const auto got = nonzero(t.counts(n));
  const auto want = nonzero(expected);
  if (got != want)
    throw TheoremViolation(std::string(t.metric ? "K_" + std::to_string(n) + ": " : "") + "KD table " +
                           counts_string(got) + " differs from the expected " + counts_string(want));
  for (const auto& r : t.rows) {
    if (n >= 0 && r.n != n) continue;
    if (r.degenerate && (r.tag == KDCase::A0A || r.tag == KDCase::AB))
      throw TheoremViolation("KD interval " + std::to_string(r.k) + " of case " + to_string(r.tag) +
                             " is degenerate");
  }
}

/// Shared preamble: decides whether the tables apply.
void set_review(KDTable& t, const WeightedGraph& h) {
  if (h.inner_vertices().empty()) {
    t.review = true;
    t.review_reason = "every vertex is a boundary vertex";
  } else if (!is_connected(h)) {
    t.review = true;
    t.review_reason = "the domain is disconnected";
  }
  t.bipartite = is_connected(h) && is_bipartite(h).has_value();
}

double tol_at(double x) { return kTagTolerance * std::max(1.0, std::abs(x)); }

}  // namespace

std::string to_string(KDCase c) {
  switch (c) {
    case KDCase::A0A: return "A0A";
    case KDCase::AA: return "AA";
    case KDCase::AB: return "AB";
    case KDCase::BB: return "BB";
    case KDCase::A0B: return "A0B";
  }
  return "?";
}

std::map<KDCase, std::size_t> KDTable::counts(int n) const {
  std::map<KDCase, std::size_t> m;
  for (const auto& r : rows)
    if (n < 0 || r.n == n) ++m[r.tag];
  return m;
}

std::vector<Interval> kd_intervals_discrete(const WeightedGraph& h) {
  check_nonempty_boundary(h);
  const auto kirchhoff = jacobi_eigenvalues(laplacian_matrix(h));
  const auto dirichlet = jacobi_eigenvalues(dirichlet_laplacian_matrix(h));
  std::vector<Interval> out;
  for (std::size_t k = 0; k < kirchhoff.size(); ++k) {
    const double lo = std::max(0.0, kirchhoff[k]);
    const double hi = k < dirichlet.size() ? dirichlet[k] : 2.0;
    if (lo > hi + kTagTolerance)
      throw TheoremViolation("mu_" + std::to_string(k + 1) + " = " + std::to_string(lo) +
                             " exceeds its Dirichlet partner " + std::to_string(hi));
    out.push_back({lo, std::max(lo, std::min(hi, 2.0))});
  }
  return out;
}

std::vector<Interval> kd_intervals_metric(const WeightedGraph& h, int n_max) {
  check_nonempty_boundary(h);
  if (!h.all_lengths_one()) throw PreconditionError("metric KD intervals need all edge lengths 1");
  const auto kir = tagged_blocks(h, false, n_max);
  const auto dir = tagged_blocks(h, true, n_max);
  std::vector<Interval> out;
  for (int n = 0; n <= n_max; ++n) {
    if (kir[n].size() != h.edge_count() || dir[n].size() != h.edge_count())
      throw TheoremViolation("K_" + std::to_string(n) + " does not hold |E| eigenvalues");
    for (std::size_t i = 0; i < kir[n].size(); ++i) {
      const double lo = kir[n][i].value;
      const double hi = dir[n][i].value;
      if (lo > hi + tol_at(hi))
        throw TheoremViolation("lambda_" + std::to_string(n * h.edge_count() + i + 1) +
                               " exceeds its Dirichlet partner");
      out.push_back({lo, std::max(lo, hi)});
    }
  }
  return out;
}

KDTable classify_kd_intervals(const WeightedGraph& h) {
  const auto iv = kd_intervals_discrete(h);
  KDTable t;
  set_review(t, h);
  const std::size_t inner = h.inner_vertices().size();
  for (std::size_t k = 0; k < iv.size(); ++k) {
    const double mu = iv[k].lo;
    const CaseTag kt = mu <= kTagTolerance ? CaseTag::A0 : (mu >= 2.0 - kTagTolerance ? CaseTag::B : CaseTag::A);
    KDTableRow r;
    r.k = k + 1;
    r.interval = iv[k];
    r.degenerate = iv[k].width() < kDegenerateWidth;
    r.tag = t.review ? (kt == CaseTag::A0 ? (k < inner ? KDCase::A0A : KDCase::A0B)
                                          : (k < inner ? KDCase::AA : (kt == CaseTag::B ? KDCase::BB : KDCase::AB)))
                     : combine(kt, k >= inner);
    t.rows.push_back(r);
  }
  if (!t.review)
    check_rows(t, expected_kd_counts(t.bipartite, false, 0, h.vertex_count(), h.edge_count(), h.boundary().size()), -1);
  return t;
}

KDTable classify_kd_intervals_metric(const WeightedGraph& h, int n_max) {
  check_nonempty_boundary(h);
  const auto kir = tagged_blocks(h, false, n_max);
  const auto dir = tagged_blocks(h, true, n_max);
  const auto iv = kd_intervals_metric(h, n_max);
  KDTable t;
  t.metric = true;
  set_review(t, h);
  const std::size_t E = h.edge_count();
  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t i = 0; i < E; ++i) {
      KDTableRow r;
      r.k = n * E + i + 1;
      r.n = n;
      r.interval = iv[r.k - 1];
      r.degenerate = r.interval.width() < kDegenerateWidth * std::max(1.0, r.interval.hi);
      const CaseTag kt = kir[n][i].tag;
      const bool db = dir[n][i].tag != CaseTag::A;
      r.tag = t.review ? (kt == CaseTag::A0 ? (db ? KDCase::A0B : KDCase::A0A)
                                            : (kt == CaseTag::B ? KDCase::BB : (db ? KDCase::AB : KDCase::AA)))
                       : combine(kt, db);
      t.rows.push_back(r);
    }
    if (!t.review)
      check_rows(t, expected_kd_counts(t.bipartite, true, n, h.vertex_count(), E, h.boundary().size()), n);
  }
  return t;
}

std::map<KDCase, std::size_t> expected_kd_counts(bool bipartite, bool metric, int n, std::size_t vertices,
                                                 std::size_t edges, std::size_t boundary) {
  const long V = static_cast<long>(vertices);
  const long E = static_cast<long>(edges);
  const long dV = static_cast<long>(boundary);
  std::map<KDCase, long> m;
  if (bipartite) {
    m = {{KDCase::A0A, 1}, {KDCase::AA, V - dV - 1}, {KDCase::AB, dV - 1}, {KDCase::BB, metric ? E - V + 1 : 1}};
  } else if (!metric || n % 2 == 0) {
    m = {{KDCase::A0A, 1}, {KDCase::AA, V - dV - 1}, {KDCase::AB, dV}};
    if (metric) m[KDCase::BB] = E - V;
  } else {
    m = {{KDCase::AA, V - dV}, {KDCase::AB, dV - 1}, {KDCase::BB, E - V + 1}};
  }
  std::map<KDCase, std::size_t> out;
  for (const auto& [c, k] : m) {
    if (k < 0) throw PreconditionError("KD table undefined for these counts");
    out[c] = static_cast<std::size_t>(k);
  }
  return out;
}

IntervalUnion kd_union(const KDTable& t) {
  std::vector<Interval> iv;
  for (const auto& r : t.rows) iv.push_back(r.interval);
  return interval_union(iv);
}

IntervalUnion symmetrized_kd(const IntervalUnion& J, bool bipartite, bool metric, int n_max) {
  if (!bipartite) return J;
  if (!metric) return J.reflect(2.0).intersect(J);
  IntervalUnion out;
  for (int n = 0; n <= n_max; ++n) {
    const double lo = band_floor(n);
    const double hi = band_ceiling(n);
    const std::vector<Interval> kn{{lo, hi}};
    const IntervalUnion piece = J.intersect(interval_union(kn));
    std::vector<Interval> mirrored;
    for (const Interval& c : piece.components())
      mirrored.push_back({tau_symmetry(std::clamp(c.hi, lo, hi), n), tau_symmetry(std::clamp(c.lo, lo, hi), n)});
    out = out.unite(piece.intersect(interval_union(mirrored)));
  }
  return out;
}

bool covering_is_bipartite(const PeriodicGraph& pg) {
  // Closed walks of the covering are the closed walks of the quotient with
  // zero total label. The covering is bipartite iff (0, odd) is not in the
  // lattice spanned by (label, length) of the fundamental cycles and (0, 2).
  const WeightedGraph& q = pg.quotient;
  const std::size_t r = static_cast<std::size_t>(pg.rank);
  std::vector<Label> pot(q.vertex_count());
  std::vector<int> depth(q.vertex_count(), -1);
  std::vector<bool> tree(q.edge_count(), false);
  std::queue<VertexId> bfs;
  depth[0] = 0;
  pot[0] = Label(r, 0);
  bfs.push(0);
  while (!bfs.empty()) {
    const VertexId v = bfs.front();
    bfs.pop();
    for (EdgeId id : q.incident_edges(v)) {
      const Edge& e = q.edge(id);
      const VertexId w = e.opposite(v);
      if (depth[w] >= 0) continue;
      tree[id] = true;
      depth[w] = depth[v] + 1;
      pot[w] = pot[v];
      const int sign = e.tail == v ? 1 : -1;
      for (std::size_t i = 0; i < r; ++i) pot[w][i] += sign * pg.labels[id][i];
      bfs.push(w);
    }
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (EdgeId id = 0; id < q.edge_count(); ++id) {
    if (tree[id]) continue;
    const Edge& e = q.edge(id);
    std::vector<std::int64_t> row(r + 1);
    for (std::size_t i = 0; i < r; ++i) row[i] = pot[e.tail][i] + pg.labels[id][i] - pot[e.head][i];
    row[r] = (depth[e.tail] + depth[e.head] + 1) % 2;
    rows.push_back(row);
  }
  // Integer row echelon on the label columns.
  std::size_t top = 0;
  for (std::size_t col = 0; col < r && top < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || std::abs(rows[i][col]) < std::abs(rows[piv][col]))) piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        const std::int64_t f = rows[i][col] / rows[top][col];
        for (std::size_t j = col; j <= r; ++j) rows[i][j] -= f * rows[top][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  for (std::size_t i = top; i < rows.size(); ++i)
    if (rows[i][r] % 2 != 0) return false;
  return true;
}

namespace {

GapReport assemble(const WeightedGraph& h, const PeriodicGraph* pg, const GapOptions& opt) {
  GapReport rep;
  rep.metric = opt.metric;
  rep.n_max = opt.n_max;
  rep.range = {0.0, opt.metric ? band_ceiling(opt.n_max) : 2.0};
  rep.table = opt.metric ? classify_kd_intervals_metric(h, opt.n_max) : classify_kd_intervals(h);
  if (pg) {
    rep.bipartite = covering_is_bipartite(*pg);
  } else {
    rep.bipartite = rep.table.bipartite;
    if (!is_connected(h)) rep.notes.push_back("disconnected domain without labels: treated as not bipartite");
  }
  rep.kd = kd_union(rep.table);
  rep.kd_gaps = open_gaps(rep.kd, rep.range);
  if (rep.bipartite) rep.symmetrized = symmetrized_kd(rep.kd, true, opt.metric, opt.n_max);
  const IntervalUnion& cert = rep.symmetrized ? *rep.symmetrized : rep.kd;
  rep.certified_gaps = open_gaps(cert, rep.range);

  // A degenerate J_k with k ≤ |V₀| traps λ_k(θ) for every θ; in the metric
  // case every index carries a band.
  const std::size_t reach = pg ? pg->quotient.vertex_count() : h.inner_vertices().size();
  for (const auto& r : rep.table.rows) {
    if (!r.degenerate) continue;
    if (!opt.metric && r.k > reach) continue;
    if (std::none_of(rep.pinned.begin(), rep.pinned.end(),
                     [&](double x) { return std::abs(x - r.interval.lo) <= tol_at(x); }))
      rep.pinned.push_back(r.interval.lo);
  }

  if (pg && opt.bands) {
    rep.bands_computed = true;
    rep.bands = floquet_bands(*pg, opt.grid);
    std::vector<Interval> pieces;
    if (opt.metric) {
      rep.metric_bands = metric_bands(*pg, rep.bands, opt.n_max);
      for (const auto& b : rep.metric_bands) pieces.push_back({b.lo, b.hi});
    } else {
      for (const auto& b : rep.bands) pieces.push_back({std::max(0.0, b.lo), std::min(2.0, b.hi)});
    }
    for (const Interval& p : pieces) {
      const double tol = kBracketTolerance * std::max(1.0, p.hi);
      if (!rep.kd.contains(p, tol) || !cert.contains(p, tol))
        throw TheoremViolation("band [" + std::to_string(p.lo) + ", " + std::to_string(p.hi) +
                               "] leaves the certified set");
    }
    rep.band_gaps = open_gaps(interval_union(pieces), rep.range);
  }
  if (opt.amenable) rep.component_lower_bound = cert.size();
  if (opt.metric && pg)
    rep.notes.push_back("exceptional values n^2 pi^2 at theta in {0, pi}^r are taken from the band transfer only");
  if (rep.table.review) rep.notes.push_back("KD table not checked: " + rep.table.review_reason);
  return rep;
}

}  // namespace

GapReport gap_report(const PeriodicGraph& pg, const GapOptions& opt) {
  const FundamentalDomain fd = derive_fundamental_domain(pg);
  return assemble(fd.graph, &pg, opt);
}

GapReport gap_report(const WeightedGraph& h, const GapOptions& opt) { return assemble(h, nullptr, opt); }

}  // namespace qgraph
