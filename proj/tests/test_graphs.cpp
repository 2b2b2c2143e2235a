#include <doctest.h>

#include <set>

#include "gaussoid/classify.hpp"
#include "gaussoid/graphs.hpp"
#include "support.hpp"

using namespace gaussoid;
using testing::structure_of;

namespace {

// Separation by definition: no path from i to j avoiding K (DFS over G - K).
bool separated(const Graph& g, int i, int j, Mask K) {
  std::vector<int> stack{i};
  Mask seen = Mask{1} << i;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == j) return false;
    for (int v = 0; v < g.n(); ++v)
      if (g.adjacent(u, v) && !(K >> v & 1) && !(seen >> v & 1)) {
        seen |= Mask{1} << v;
        stack.push_back(v);
      }
  }
  return true;
}

bool complement_has_triangle(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!g.adjacent(a, b) && !g.adjacent(b, c) && !g.adjacent(a, c)) return true;
  return false;
}

std::uint64_t bell(int n) {
  std::vector<std::vector<std::uint64_t>> t{{1}};
  for (int r = 1; r <= n; ++r) {
    t.push_back({t[r - 1].back()});
    for (int c = 1; c <= r; ++c) t[r].push_back(t[r][c - 1] + t[r - 1][c - 1]);
  }
  return t[n][0];
}

std::uint64_t involutions(int n) {
  std::uint64_t a = 1, b = 1;
  for (int m = 2; m <= n; ++m) {
    const std::uint64_t c = b + static_cast<std::uint64_t>(m - 1) * a;
    a = b;
    b = c;
  }
  return n == 0 ? 1 : b;
}

}  // namespace

TEST_CASE("graph basics and text format") {
  Graph g(4, {{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(g.complement().edges().size() == 4);
  CHECK(g.components().size() == 2);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 4));
  CHECK(graph_to_text(g) == "n=4\n1 2\n2 3\n");
  CHECK(parse_graph_text(graph_to_text(g)) == g);
  CHECK(parse_graph_text("# x\nn=3\n\n3 1\n") == Graph(3, {{0, 2}}));
  CHECK_THROWS(parse_graph_text("1 2\n"));
  CHECK_THROWS(parse_graph_text("n=3\n1 4\n"));
  CHECK_THROWS(parse_graph_text("n=3\n1\n"));
  CHECK(Graph::from_code(3, 0b101) == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("separation gaussoid examples") {
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(separation_gaussoid(c4) == structure_of(4, {"1,3|2,4", "2,4|1,3"}));
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(separation_gaussoid(star) ==
        structure_of(4, {"2,3|1", "2,3|1,4", "2,4|1", "2,4|1,3", "3,4|1", "3,4|1,2"}));
  for (int n = 2; n <= 6; ++n) {
    CHECK(separation_gaussoid(Graph::complete(n)).empty());
    CHECK(separation_gaussoid(Graph(n)) == CIStructure::full(n));
  }
}

TEST_CASE("separation gaussoid against path search") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = testing::random_graph(n, rng);
    const CIStructure a = separation_gaussoid(g);
    for (std::size_t x = 0; x < a.universe(); ++x) {
      const Square s = square_at(n, x);
      REQUIRE(a.contains(x) == separated(g, s.i, s.j, s.K));
    }
    REQUIRE(is_gaussoid(a));
    REQUIRE(is_ascending(a));
    REQUIRE(is_descending(dual(a)));
    REQUIRE(in_class(dual(a), ClassSpec::parse("ELBF")));
  }
}

TEST_CASE("graph_from_gaussoid inverts separation") {
  CHECK(graph_from_gaussoid(structure_of(4, {"1,3|2,4", "2,4|1,3"})) == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(graph_from_gaussoid(CIStructure(5)) == Graph::complete(5));
  CHECK(graph_from_gaussoid(CIStructure::full(5)) == Graph(5));
  CHECK_THROWS(graph_from_gaussoid(structure_of(3, {"1,2|"})));
  CHECK_THROWS(graph_from_gaussoid(structure_of(3, {"1,2|", "1,3|2"})));

  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<std::size_t>> images;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = Graph::from_code(n, code);
      const CIStructure a = separation_gaussoid(g);
      REQUIRE(graph_from_gaussoid(a) == g);
      images.insert(a.indices());
    }
    CHECK(images.size() == total);
  }
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::random_graph(6, rng);
    REQUIRE(graph_from_gaussoid(separation_gaussoid(g)) == g);
  }
}

TEST_CASE("graphical predicates examples") {
  const auto c4 = graphical_class_predicates(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(c4.complement_clique_union);
  CHECK(c4.complement_components_le_2);
  CHECK(c4.complement_triangle_free);
  // A cycle is not a forest of paths; sep(C4) has E minors, so it is not UBF.
  CHECK_FALSE(c4.path_forest);
  CHECK_FALSE(graphical_class_predicates(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).path_forest);
  for (int n = 1; n <= 6; ++n) {
    const auto k = graphical_class_predicates(Graph::complete(n));
    CHECK(k.complement_triangle_free);
    CHECK(k.path_forest == (n <= 2));  // K_n is a path only for n <= 2
    CHECK(k.complement_clique_union);
    CHECK(k.complement_components_le_2);
    CHECK(k.complement_equiv_relation);
    CHECK(k.involution_shape == (n <= 2));
  }
}

TEST_CASE("graphical classes, exhaustive for n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    std::uint64_t ebf = 0, bf = 0;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = Graph::from_code(n, code);
      const CIStructure a = separation_gaussoid(g);
      const auto p = graphical_class_predicates(g);
      REQUIRE(p.complement_triangle_free == !complement_has_triangle(g));
      REQUIRE(in_class(a, ClassSpec::parse("EUB")) == p.complement_triangle_free);
      REQUIRE(in_class(a, ClassSpec::parse("UBF")) == p.path_forest);
      REQUIRE(in_class(a, ClassSpec::parse("EUF")) == p.complement_clique_union);
      REQUIRE(in_class(a, ClassSpec::parse("EU")) == (p.complement_clique_union && p.complement_components_le_2));
      REQUIRE(in_class(a, ClassSpec::parse("EBF")) == p.complement_equiv_relation);
      REQUIRE(in_class(a, ClassSpec::parse("BF")) == p.involution_shape);
      ebf += p.complement_equiv_relation;
      bf += p.involution_shape;
    }
    CHECK(ebf == bell(n));
    CHECK(bf == involutions(n));
  }
}

TEST_CASE("EB reconstruction") {
  CHECK(eb_reconstruct({false, false}).empty());
  const CIStructure b = eb_reconstruct({true, true});
  CHECK(minor(b, face_parse("***")) == structure_of(3, {"1,2|", "1,2|3", "1,3|", "1,3|2"}));
  for (int n = 3; n <= 6; ++n) {
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (n - 1)); ++v) {
      std::vector<bool> bits;
      for (int i = 0; i < n - 1; ++i) bits.push_back(v >> i & 1);
      const CIStructure a = eb_reconstruct(bits);
      REQUIRE(in_class(a, ClassSpec::parse("EB")));
      for (int i = 1; i < n; ++i) REQUIRE(a.has(0, i, 0) == bits[static_cast<std::size_t>(i - 1)]);
      seen.insert(a.indices());
    }
    CHECK(seen.size() == std::uint64_t{1} << (n - 1));
  }
}
