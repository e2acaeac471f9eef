#include "qgraph/homology.hpp"

#include <numeric>

#include "qgraph/errors.hpp"

namespace qgraph {

RationalMatrix boundary_matrix(const WeightedGraph& g, bool oriented, bool relative) {
  const std::size_t none = g.vertex_count();
  std::vector<std::size_t> row(g.vertex_count(), none);
  std::size_t rows = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!relative || !g.is_boundary(v)) row[v] = rows++;

  RationalMatrix m(rows, g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (row[e.head] != none) m(row[e.head], id) += Rational(1);
    if (row[e.tail] != none) m(row[e.tail], id) += Rational(oriented ? -1 : 1);
  }
  return m;
}

BettiReport betti_numbers(const WeightedGraph& g, bool relative) {
  if (!is_connected(g)) throw PreconditionError("Betti numbers require a connected graph");
  BettiReport r;
  r.relative = relative;
  r.beta = is_bipartite(g) ? 1 : 0;

  const RationalMatrix d = boundary_matrix(g, true, relative);
  const RationalMatrix dbar = boundary_matrix(g, false, relative);
  const std::size_t rank = rational_rank(d);
  const std::size_t rank_bar = rational_rank(dbar);
  r.b0 = d.rows() - rank;
  r.b1 = g.edge_count() - rank;
  r.b0_bar = dbar.rows() - rank_bar;
  r.b1_bar = g.edge_count() - rank_bar;
  return r;
}

bool verify_betti_formula(const WeightedGraph& g) {
  const auto E = static_cast<long>(g.edge_count());
  const auto V = static_cast<long>(g.vertex_count());
  const auto dV = static_cast<long>(g.boundary().size());

  const BettiReport a = betti_numbers(g, false);
  const long beta = a.beta;
  bool ok = static_cast<long>(a.b0) == 1 && static_cast<long>(a.b1) == E - V + 1 &&
            static_cast<long>(a.b0_bar) == beta && static_cast<long>(a.b1_bar) == E - V + beta;
  if (dV > 0) {
    const BettiReport r = betti_numbers(g, true);
    ok = ok && r.b0 == 0 && static_cast<long>(r.b1) == E - V + dV && r.b0_bar == 0 &&
         static_cast<long>(r.b1_bar) == E - V + dV;
  }
  return ok;
}

std::vector<OneChain> cycle_basis(const WeightedGraph& g, bool oriented, bool relative) {
  std::vector<OneChain> basis = rational_nullspace(boundary_matrix(g, oriented, relative));
  for (OneChain& c : basis) {
    std::int64_t lcm = 1;
    for (const Rational& x : c) lcm = std::lcm(lcm, x.den());
    std::int64_t content = 0;
    for (Rational& x : c) {
      x *= Rational(lcm);
      content = std::gcd(content, x.num());
    }
    Rational scale(1, content == 0 ? 1 : content);
    for (const Rational& x : c)
      if (!x.is_zero()) {
        if (x.sign() < 0) scale = -scale;
        break;
      }
    for (Rational& x : c) x *= scale;
  }
  return basis;
}

bool is_cycle(const WeightedGraph& g, const OneChain& c, bool oriented, bool relative) {
  const RationalMatrix d = boundary_matrix(g, oriented, relative);
  if (c.size() != d.cols()) return false;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < d.cols(); ++j) s += d(i, j) * c[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace qgraph
