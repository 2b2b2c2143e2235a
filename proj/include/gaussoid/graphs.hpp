#ifndef GAUSSOID_GRAPHS_HPP_
#define GAUSSOID_GRAPHS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussoid/ci.hpp"

namespace gaussoid {

/// Simple undirected graph on {0..n-1}; adjacency rows as masks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  // Edge set read off the bits of `code` in pair-lexicographic order.
  static Graph from_code(int n, std::uint64_t code);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }
  Mask neighbors(int u) const { return adj_[u]; }
  int degree(int u) const;
  std::vector<std::pair<int, int>> edges() const;
  Graph complement() const;

  // Connected components of the subgraph induced on `vertices`.
  std::vector<Mask> components(Mask vertices) const;
  std::vector<Mask> components() const { return components(full_mask(n_)); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

// "n=<int>" then "i j" per edge, 1-based.
std::string graph_to_text(const Graph& g);
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::string& path);

/// {(ij|K) : K separates i and j in g}.
CIStructure separation_gaussoid(const Graph& g);

/// Inverse of separation_gaussoid: E = {ij : (ij|[n]\ij) not in A}.
Graph graph_from_gaussoid(const CIStructure& a);

struct GraphicalPredicates {
  bool complement_triangle_free = false;     // EUB
  bool path_forest = false;                  // UBF
  bool complement_clique_union = false;      // EUF
  bool complement_components_le_2 = false;   // EU (together with the previous flag)
  // Adjacency of g plus the diagonal is an equivalence relation, i.e. the
  // complement of the marginal relation {ij : (ij|) in sep(g)}. EBF.
  bool complement_equiv_relation = false;
  // Every component of g has at most two vertices (a matching). BF.
  bool involution_shape = false;
};

GraphicalPredicates graphical_class_predicates(const Graph& g);

/// EB-gaussoid with (1i|) membership given by bits[i-2], i = 2..n.
CIStructure eb_reconstruct(const std::vector<bool>& bits);

}  // namespace gaussoid

#endif  // GAUSSOID_GRAPHS_HPP_
