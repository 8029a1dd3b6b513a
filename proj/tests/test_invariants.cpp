#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "permpoly/error.hpp"
#include "permpoly/families.hpp"
#include "permpoly/invariants.hpp"
#include "support.hpp"

using namespace permpoly;

namespace {

constexpr MatrixKind kKinds[] = {MatrixKind::laplacian, MatrixKind::signless};

std::vector<long> histogram_of(const Graph& g) {
  std::vector<long> h(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) ++h[static_cast<std::size_t>(g.degree(v))];
  return h;
}

std::vector<long> hist(int n, std::initializer_list<std::pair<int, long>> entries) {
  std::vector<long> h(static_cast<std::size_t>(n), 0);
  for (auto [degree, count] : entries) h[static_cast<std::size_t>(degree)] = count;
  return h;
}

InvariantReport from_poly(const std::string& family, MatrixKind kind) {
  return poly_invariants(psi(build(parse_family(family)), kind), kind);
}

}  // namespace

TEST_CASE("forward invariants") {
  const auto c3 = forward_invariants(build(parse_family("corona_cycle_k1:3")), MatrixKind::laplacian);
  CHECK(c3.n == 6);
  CHECK(c3.m == 6);
  CHECK(c3.sum_d2 == 30);
  CHECK(c3.cubic == 78);
  CHECK(c3.triangles == 1);
  for (auto kind : kKinds) {
    const auto t2 = forward_invariants(perfect_binary_tree(2), kind);
    CHECK(t2.n == 7);
    CHECK(t2.m == 6);
    CHECK(t2.sum_d2 == 26);
    CHECK(t2.cubic == 66);
  }
  const auto k1 = forward_invariants(Graph(1, {}), MatrixKind::laplacian);
  CHECK(k1.n == 1);
  CHECK(k1.m == 0);
  CHECK(k1.sum_d2 == 0);
  CHECK(k1.cubic == 0);
}

TEST_CASE("inversion from the polynomial") {
  const auto t2 = poly_invariants(IntPoly{-60, 243, -408, 371, -200, 65, -12, 1}, MatrixKind::laplacian);
  CHECK(t2.n == 7);
  CHECK(t2.m == 6);
  CHECK(t2.sum_d2 == 26);
  CHECK(t2.cubic == 66);
  CHECK_FALSE(t2.triangles.has_value());
  const auto p3 = poly_invariants(IntPoly{-4, 7, -4, 1}, MatrixKind::laplacian);
  CHECK(p3.n == 3);
  CHECK(p3.m == 2);
  CHECK(p3.sum_d2 == 6);
  CHECK(p3.cubic == 10);
  CHECK(poly_invariants(IntPoly::x(), MatrixKind::laplacian).m == 0);
  CHECK_THROWS_AS(poly_invariants(IntPoly{1, 2}, MatrixKind::laplacian), InvalidArgument);
  CHECK_THROWS_AS(poly_invariants(IntPoly{0, -3, 1}, MatrixKind::laplacian), InvalidArgument);
  CHECK_THROWS_AS(poly_invariants(IntPoly{1}, MatrixKind::laplacian), InvalidArgument);
}

TEST_CASE("round trip over the connected census") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const auto l = forward_invariants(g, MatrixKind::laplacian);
      const auto q = forward_invariants(g, MatrixKind::signless);
      CHECK(poly_invariants(psi(g, MatrixKind::laplacian), MatrixKind::laplacian).same_system(l));
      CHECK(poly_invariants(psi(g, MatrixKind::signless), MatrixKind::signless).same_system(q));
      CHECK(q.cubic - l.cubic == 12 * triangle_count(g));
    }
  }
}

TEST_CASE("graphicality") {
  CHECK(is_graphical({3, 3, 3, 3}));
  CHECK(is_graphical({}));
  CHECK(is_graphical({0}));
  CHECK_FALSE(is_graphical({1}));
  CHECK_FALSE(is_graphical({3, 3, 1, 1}));
  CHECK_FALSE(is_graphical({4, 1, 1, 1}));
  CHECK(is_graphical({3, 1, 1, 1}));
  // Every census degree sequence is graphical; a brute-force check over
  // small sequences agrees with Erdos-Gallai.
  std::set<std::vector<int>> realized;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n, false)) realized.insert(degree_sequence(g));
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> seq(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      CHECK(is_graphical(seq) == (realized.count(sorted) == 1));
      std::size_t i = 0;
      while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
      if (i == seq.size()) break;
      ++seq[i];
    }
  }
}

TEST_CASE("degree systems from the determination arguments") {
  const auto t2 = solve_degree_system(from_poly("btree:2", MatrixKind::laplacian));
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].triangles == 0);
  CHECK(t2[0].histogram == hist(7, {{1, 4}, {2, 1}, {3, 2}}));

  DegreeSystemOptions bounded;
  bounded.max_degree = 3;
  const auto c3 = solve_degree_system(from_poly("corona_cycle_k1:3", MatrixKind::laplacian), bounded);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].triangles == 1);
  CHECK(c3[0].histogram == hist(6, {{1, 3}, {3, 3}}));
  CHECK(c3[1].triangles == 0);
  CHECK(c3[1].histogram == hist(6, {{0, 1}, {2, 3}, {3, 2}}));

  const auto c4 = solve_degree_system(from_poly("corona_cycle_k1:4", MatrixKind::laplacian), bounded);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].triangles == 0);
  CHECK(c4[0].histogram == hist(8, {{1, 4}, {3, 4}}));

  // Without the bound on the largest degree further sequences appear.
  CHECK(solve_degree_system(from_poly("corona_cycle_k1:4", MatrixKind::laplacian)).size() == 3);
  CHECK(solve_degree_system(from_poly("btree:3", MatrixKind::laplacian)).size() == 5);

  for (int n = 2; n <= 6; ++n) {
    const auto ct3 = solve_degree_system(from_poly("ct3:" + std::to_string(n), MatrixKind::laplacian));
    REQUIRE(ct3.size() == 1);
    CHECK(ct3[0].histogram == hist(n + 3, {{1, n + 1}, {2, 1}, {n + 1, 1}}));
  }
}

TEST_CASE("solver properties") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.4, false);
    for (auto kind : kKinds) {
      auto r = forward_invariants(g, kind);
      const long t = *r.triangles;
      r.triangles.reset();
      DegreeSystemOptions all;
      all.graphical_only = false;
      const auto sols = solve_degree_system(r, all);
      const DegreeSolution truth{t, histogram_of(g), true};
      CHECK(std::find(sols.begin(), sols.end(), truth) != sols.end());
      CHECK(std::is_sorted(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
        return a.histogram < b.histogram;
      }));
      for (const auto& s : sols) {
        long count = 0;
        long first = 0;
        long second = 0;
        long third = 0;
        for (std::size_t i = 0; i < s.histogram.size(); ++i) {
          const long d = static_cast<long>(i);
          count += s.histogram[i];
          first += d * s.histogram[i];
          second += d * d * s.histogram[i];
          third += d * d * d * s.histogram[i];
        }
        CHECK(count == r.n);
        CHECK(first == 2 * r.m);
        CHECK(second == r.sum_d2);
        CHECK(third + (kind == MatrixKind::laplacian ? -6 : 6) * s.triangles == r.cubic);
        CHECK(s.graphical == is_graphical(s.degree_sequence()));
      }
    }
  }
}

TEST_CASE("mate search over the built-in census") {
  MateSearchOptions opts;
  opts.kinds = {MatrixKind::laplacian, MatrixKind::signless};
  CHECK(mate_search(build(parse_family("corona_cycle_k1:3")), opts).determined());
  CHECK(mate_search(basic_graph(BasicKind::path, 5), opts).determined());
  CHECK_THROWS_AS(mate_search(perfect_binary_tree(3), opts), CapExceeded);

}

TEST_CASE("mate relation is symmetric") {
  // Group the seven-vertex census by psi_L and confirm mate_search reports
  // each collision group from every member.
  std::map<std::string, std::vector<Graph>> groups;
  for (const auto& g : enumerate_graphs(7, false)) {
    groups[psi(g, MatrixKind::laplacian).to_string()].push_back(g);
  }
  MateSearchOptions lap;
  lap.jobs = 2;
  int checked = 0;
  for (const auto& [poly, members] : groups) {
    if (members.size() < 2 || checked >= 3) continue;
    ++checked;
    std::vector<std::string> keys;
    for (const auto& g : members) keys.push_back(canonical_key(g));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto rep = mate_search(members[i], lap);
      CHECK(rep.census_size == 1044);
      std::vector<std::string> expected;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != i) expected.push_back(keys[j]);
      }
      std::sort(expected.begin(), expected.end());
      CHECK(rep.mates == expected);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("pruned candidates differ in the edge count coefficient") {
  const Graph target = build(parse_family("corona_cycle_k1:3"));
  const IntPoly tp = psi(target, MatrixKind::laplacian);
  long pruned = 0;
  for (const auto& g : enumerate_graphs(6, false)) {
    if (g.size() == target.size()) continue;
    ++pruned;
    CHECK(psi(g, MatrixKind::laplacian).coeff(5) != tp.coeff(5));
  }
  MateSearchOptions opts;
  CHECK(mate_search(target, opts).pruned == pruned);
}

TEST_CASE("mate search over a graph6 stream") {
  const Graph target = basic_graph(BasicKind::path, 4);
  MateSearchOptions opts;
  opts.kinds = {MatrixKind::laplacian};
  std::istringstream clean("C~\n\r\nCr\nCF\n");
  const auto rep = mate_search(target, clean, opts);
  CHECK(rep.census_size == 3);
  CHECK(rep.determined());

  std::istringstream dirty("C~\nnope\nBw\nCr\n");
  try {
    mate_search(target, dirty, opts);
    FAIL("malformed line accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
  opts.on_error = StreamErrorPolicy::skip;
  std::istringstream again("C~\nnope\nBw\nCr\n");
  const auto skipped = mate_search(target, again, opts);
  REQUIRE(skipped.skipped.size() == 2);
  CHECK(skipped.skipped[0].line == 2);
  CHECK(skipped.skipped[1].line == 3);
  CHECK(skipped.census_size == 2);
}
