#include "gaussoid/graphs.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gaussoid/classify.hpp"

namespace gaussoid {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxFaceDim) throw std::invalid_argument("graph size out of range");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.adj_[u] = full_mask(n) & ~(Mask{1} << u);
  return g;
}

Graph Graph::from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint outside vertex set");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= Mask{1} << v;
  adj_[v] |= Mask{1} << u;
}

int Graph::degree(int u) const { return std::popcount(adj_[u]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (Mask m = adj_[u] & ~full_mask(u + 1); m; m &= m - 1) e.emplace_back(u, std::countr_zero(m));
  return e;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u) g.adj_[u] = full_mask(n_) & ~adj_[u] & ~(Mask{1} << u);
  return g;
}

std::vector<Mask> Graph::components(Mask vertices) const {
  std::vector<Mask> out;
  Mask left = vertices;
  while (left) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj_[u] & vertices & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::string graph_to_text(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    if (!g) {
      std::string head;
      ls >> head;
      if (head.rfind("n=", 0) != 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'n=<int>'");
      g.emplace(std::stoi(head.substr(2)));
      continue;
    }
    int u = 0, v = 0;
    std::string trailing;
    if (!(ls >> u >> v) || (ls >> trailing)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'i j'");
    try {
      g->add_edge(u - 1, v - 1);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!g) throw std::invalid_argument("missing header 'n=<int>'");
  return *g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

CIStructure separation_gaussoid(const Graph& g) {
  const int n = g.n();
  CIStructure a(n);
  if (n < 2) return a;
  const Mask all = full_mask(n);
  // One component computation per conditioning set K.
  std::vector<int> comp_of(static_cast<std::size_t>(n));
  Mask K = 0;
  do {
    const auto comps = g.components(all & ~K);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Mask m = comps[c]; m; m &= m - 1) comp_of[std::countr_zero(m)] = static_cast<int>(c);
    for (int i = 0; i < n; ++i) {
      if (K >> i & 1) continue;
      for (int j = i + 1; j < n; ++j) {
        if (K >> j & 1) continue;
        if (comp_of[i] != comp_of[j]) a.insert(Square{i, j, K});
      }
    }
    K = (K - all) & all;
  } while (K != 0);
  return a;
}

Graph graph_from_gaussoid(const CIStructure& a) {
  if (!is_gaussoid(a)) throw std::invalid_argument("graph_from_gaussoid: input is not a gaussoid");
  if (!is_ascending(a)) throw std::invalid_argument("graph_from_gaussoid: input is not ascending");
  const int n = a.n();
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Mask rest = full_mask(n) & ~(Mask{1} << i) & ~(Mask{1} << j);
      if (!a.contains(Square{i, j, rest})) g.add_edge(i, j);
    }
  return g;
}

GraphicalPredicates graphical_class_predicates(const Graph& g) {
  const int n = g.n();
  const Graph gc = g.complement();
  GraphicalPredicates p;

  p.complement_triangle_free = true;
  for (int u = 0; u < n && p.complement_triangle_free; ++u)
    for (Mask m = gc.neighbors(u) & ~full_mask(u + 1); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (gc.neighbors(u) & gc.neighbors(v)) {
        p.complement_triangle_free = false;
        break;
      }
    }

  // Components of g with max degree 2 and |E| = |V| - 1 are paths.
  p.path_forest = true;
  for (Mask comp : g.components()) {
    int edge_ends = 0;
    for (Mask m = comp; m; m &= m - 1) {
      const int d = g.degree(std::countr_zero(m));
      if (d > 2) p.path_forest = false;
      edge_ends += d;
    }
    if (edge_ends / 2 != std::popcount(comp) - 1) p.path_forest = false;
  }

  auto all_cliques = [](const Graph& h) {
    for (Mask comp : h.components())
      for (Mask m = comp; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if ((h.neighbors(u) | (Mask{1} << u)) != comp) return false;
      }
    return true;
  };
  p.complement_clique_union = all_cliques(gc);
  p.complement_equiv_relation = all_cliques(g);

  p.complement_components_le_2 = true;
  for (Mask comp : gc.components())
    if (std::popcount(comp) > 2) p.complement_components_le_2 = false;

  p.involution_shape = true;
  for (Mask comp : g.components())
    if (std::popcount(comp) > 2) p.involution_shape = false;
  return p;
}

CIStructure eb_reconstruct(const std::vector<bool>& bits) {
  const int n = static_cast<int>(bits.size()) + 1;
  if (n < 2) throw std::invalid_argument("eb_reconstruct needs n >= 2");
  // side[v]: whether (1v|) is present; side of vertex 1 is false.
  std::vector<bool> side(static_cast<std::size_t>(n), false);
  for (int v = 1; v < n; ++v) side[v] = bits[v - 1];
  CIStructure a(n);
  // In a (1ij|)-minor that is E or B, (ij|) is present iff exactly one of
  // (1i|), (1j|) is; bi-monotonicity then fixes every (ij|K).
  for (std::size_t x = 0; x < a.universe(); ++x) {
    const Square s = square_at(n, x);
    if (side[s.i] != side[s.j]) a.insert(x);
  }
  return a;
}

}  // namespace gaussoid
