#include <random>

#include "doctest.h"
#include "qgraph/discrete_spectra.hpp"
#include "qgraph/errors.hpp"
#include "support.hpp"

using namespace qgraph;

namespace {

void check_spectrum(const Spectrum& s, const std::vector<std::pair<double, std::size_t>>& expected) {
  REQUIRE(s.values.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(qgt::near(s.values[i].value, expected[i].first));
    CHECK(s.values[i].multiplicity == expected[i].second);
  }
}

qgraph::WeightedGraph random_connected(std::mt19937& rng, std::size_t max_v, std::size_t extra) {
  const std::size_t n = 1 + rng() % max_v;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 1; v < n; ++v) e.push_back({rng() % v, v});
  const std::size_t m = rng() % (extra + 1);
  for (std::size_t i = 0; i < m; ++i) e.push_back({rng() % n, rng() % n});
  if (e.empty()) e.push_back({0, 0});
  return qgt::graph(n, e);
}

}  // namespace

TEST_CASE("laplacian matrix entries") {
  auto l = laplacian_matrix(qgt::k2());
  CHECK(l(0, 0) == 1.0);
  CHECK(l(0, 1) == -1.0);
  check_spectrum(spectrum_of(qgt::k2(), false), {{0, 1}, {2, 1}});

  for (int r = 0; r <= 5; ++r) {
    auto g = qgt::looped_path(r);
    CHECK(qgt::near(laplacian_matrix(g)(1, 1), 1.0 / (r + 1), 1e-15));
  }
  check_spectrum(spectrum_of(qgt::triangle(), false), {{0, 1}, {1.5, 2}});
  check_spectrum(spectrum_of(qgt::graph(1, {}), false), {{0, 1}});
}

TEST_CASE("dirichlet laplacian") {
  auto d = dirichlet_laplacian_matrix(qgt::multi_path(5));
  REQUIRE(d.order() == 2);
  CHECK(qgt::near(d(0, 0), 1.0));
  CHECK(qgt::near(d(0, 1), -5.0 / 6));
  check_spectrum(spectrum_of(qgt::multi_path(5), true), {{1.0 / 6, 1}, {11.0 / 6, 1}});

  auto d84 = dirichlet_laplacian_matrix(qgt::looped_path(2));
  REQUIRE(d84.order() == 1);
  CHECK(qgt::near(d84(0, 0), 1.0 / 3));

  auto tri = qgt::triangle();
  auto full = laplacian_matrix(tri);
  auto none = dirichlet_laplacian_matrix(tri);
  REQUIRE(none.order() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(full(i, j) == none(i, j));

  auto all = qgt::graph(2, {{0, 1}}, {0, 1});
  CHECK(dirichlet_laplacian_matrix(all).order() == 0);
  CHECK(spectrum_of(all, true).empty());
}

TEST_CASE("closed-form families") {
  for (int r = 1; r <= 6; ++r) {
    const double a = 1.0 / (r + 1);
    check_spectrum(spectrum_of(qgt::multi_path(r), false), {{0, 1}, {1 - a, 1}, {1 + a, 1}, {2, 1}});
    check_spectrum(spectrum_of(qgt::multi_path(r), true), {{a, 1}, {2 - a, 1}});
    check_spectrum(spectrum_of(qgt::looped_path(r), false), {{0, 1}, {1, 1}, {1 + a, 1}});
    check_spectrum(spectrum_of(qgt::looped_path(r), true), {{a, 1}});
  }
}

TEST_CASE("unoriented laplacian") {
  auto tri = qgt::triangle();
  auto u = unoriented_laplacian_matrix(tri);
  auto l = laplacian_matrix(tri);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(u(i, j) == (i == j ? 2.0 : 0.0) - l(i, j));
  check_spectrum(group_multiplicities(jacobi_eigenvalues(u)), {{0.5, 2}, {2, 1}});
  check_spectrum(group_multiplicities(jacobi_eigenvalues(unoriented_laplacian_matrix(qgt::k2()))), {{0, 1}, {2, 1}});
}

TEST_CASE("spectrum_of rejects disconnected graphs") {
  CHECK_THROWS_AS(spectrum_of(qgt::graph(2, {}), false), PreconditionError);
}

TEST_CASE("bipartite symmetry check") {
  Spectrum a = group_multiplicities(std::vector<double>{0, 1, 1, 1, 2});
  CHECK(check_bipartite_symmetry(a));
  const double s13 = std::sqrt(13.0);
  Spectrum b = group_multiplicities(std::vector<double>{0, (7 - s13) / 6, 4.0 / 3, 4.0 / 3, (7 + s13) / 6});
  CHECK_FALSE(check_bipartite_symmetry(b));
  CHECK(check_bipartite_symmetry(group_multiplicities(std::vector<double>{1})));
}

TEST_CASE("spectral properties on random graphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_connected(rng, 8, 8);
    auto ev = jacobi_eigenvalues(laplacian_matrix(g));
    CHECK(ev.front() >= -1e-9);
    CHECK(ev.back() <= 2 + 1e-9);
    CHECK(group_multiplicities(ev).values[0].multiplicity == 1);
    CHECK(qgt::near(ev.front(), 0.0));

    auto l = laplacian_matrix(g);
    auto u = unoriented_laplacian_matrix(g);
    for (std::size_t i = 0; i < l.order(); ++i)
      for (std::size_t j = 0; j < l.order(); ++j)
        CHECK(l(i, j) + u(i, j) == (i == j ? 2.0 * relative_weight(g, i).to_double() : 0.0));

    std::vector<VertexId> boundary;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (rng() % 3 == 0) boundary.push_back(v);
    auto h = g.with_boundary(boundary);
    auto dir = jacobi_eigenvalues(dirichlet_laplacian_matrix(h));
    for (std::size_t k = 0; k < dir.size(); ++k) CHECK(ev[k] <= dir[k] + 1e-9);
  }
}

TEST_CASE("disconnected graph has zero multiplicity equal to component count") {
  auto g = qgt::graph(5, {{0, 1}, {2, 3}, {3, 4}});
  auto s = group_multiplicities(jacobi_eigenvalues(laplacian_matrix(g)));
  CHECK(s.multiplicity_of(0.0) == 2);
}

TEST_CASE("vertex function scaling") {
  auto g = qgt::path3();
  auto f = vertex_function(g, {1.0, std::sqrt(2.0), 1.0}, false);
  CHECK(qgt::near(f[0], 1.0));
  CHECK(qgt::near(f[1], 1.0));
  auto h = g.with_boundary({0});
  auto fd = vertex_function(h, {std::sqrt(2.0), 1.0}, true);
  CHECK(fd[0] == 0.0);
  CHECK(qgt::near(fd[1], 1.0));
}
