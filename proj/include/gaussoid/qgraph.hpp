#ifndef GAUSSOID_QGRAPH_HPP_
#define GAUSSOID_QGRAPH_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "gaussoid/cube.hpp"

namespace gaussoid {

/// Q(n,k,p,q): vertices are the k-faces of the n-cube; D ~ F iff some
/// p-face meets both in dimension >= q.  Adjacency is computed, never stored.
struct QGraphParams {
  int n = 0, k = 0, p = 0, q = 0;

  static QGraphParams make(int n, int k, int p, int q);
  std::uint64_t vertex_count() const { return face_count(n, k); }
};

struct GapWitness {
  int j = 0;    // |I_D ∩ I_F|
  int m = 0;    // |(K_D ⊕ K_F) \ I_D I_F|
  int rho = 0;  // m + 2q - min(q, j)
};

GapWitness gap(const Face& d, const Face& f, int q);

bool adjacent(const QGraphParams& params, const Face& d, const Face& f);

// Adjacency straight from the definition, by enumerating every p-face.
// Exponential; used as an oracle for the gap characterisation.
bool adjacent_by_definition(const QGraphParams& params, const Face& d, const Face& f);

std::uint64_t degree_formula(const QGraphParams& params);
bool is_complete(const QGraphParams& params);

/// Calls visit(F) for every neighbor F of d, generated directly from the
/// (j, m) decomposition instead of scanning all vertices.
void for_each_neighbor(const QGraphParams& params, const Face& d, const std::function<void(const Face&)>& visit);

inline constexpr std::uint64_t kBruteForceVertexLimit = 1'000'000;

// Scans all vertices.  Throws std::length_error above kBruteForceVertexLimit.
std::vector<Face> brute_force_neighbors(const QGraphParams& params, const Face& d);

// Brute-force degree of every vertex, in enumeration order.  The serial
// version is the reference for the OpenMP one.
std::vector<std::uint64_t> brute_force_degrees_serial(const QGraphParams& params);
std::vector<std::uint64_t> brute_force_degrees(const QGraphParams& params, int workers = 0);

struct IndependentSetResult {
  std::vector<Face> faces;        // one color class, in enumeration order
  std::uint64_t colors_used = 0;  // by the smallest-last greedy coloring
  std::uint64_t max_degree = 0;   // Δ = degree_formula
  std::uint64_t guaranteed_size = 0;  // ⌈|V| / (Δ+1)⌉
};

/// Smallest-last greedy coloring (ties broken by enumeration order); returns
/// the largest color class (lowest color on ties).
IndependentSetResult independent_set(const QGraphParams& params);

bool is_independent(const QGraphParams& params, const std::vector<Face>& faces);
bool is_clique(const QGraphParams& params, const std::vector<Face>& faces);

// The cubes (1ij|) for 2 <= i < j <= n: a clique in Q(n,3,3,2).
std::vector<Face> clique_construction(int n);

}  // namespace gaussoid

#endif  // GAUSSOID_QGRAPH_HPP_
