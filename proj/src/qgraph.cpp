#include "gaussoid/qgraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace gaussoid {

QGraphParams QGraphParams::make(int n, int k, int p, int q) {
  if (!(n >= k && k >= p && p >= q && q >= 0)) throw std::invalid_argument("Q(n,k,p,q) needs n >= k >= p >= q >= 0");
  if (n > kMaxFaceDim) throw std::invalid_argument("dimension too large");
  return QGraphParams{n, k, p, q};
}

GapWitness gap(const Face& d, const Face& f, int q) {
  if (d.n != f.n) throw std::invalid_argument("gap: faces of different cubes");
  if (d.dim() != f.dim()) throw std::invalid_argument("gap: faces of different dimension");
  GapWitness w;
  const Mask stars = d.star | f.star;
  w.j = std::popcount(d.star & f.star);
  w.m = std::popcount((d.one ^ f.one) & ~stars & full_mask(d.n));
  w.rho = w.m + 2 * q - std::min(q, w.j);
  return w;
}

bool adjacent(const QGraphParams& params, const Face& d, const Face& f) {
  if (d == f) throw std::invalid_argument("adjacent: Q(n,k,p,q) has no loops");
  return gap(d, f, params.q).rho <= params.p;
}

bool adjacent_by_definition(const QGraphParams& params, const Face& d, const Face& f) {
  if (d == f) throw std::invalid_argument("adjacent: Q(n,k,p,q) has no loops");
  for (const Face& s : enumerate_faces(params.n, params.p)) {
    const auto a = intersect(d, s);
    if (!a || a->dim() < params.q) continue;
    const auto b = intersect(f, s);
    if (b && b->dim() >= params.q) return true;
  }
  return false;
}

std::uint64_t degree_formula(const QGraphParams& P) {
  const int n = P.n, k = P.k;
  std::uint64_t total = 0;
  for (int j = 0; j <= k; ++j) {
    for (int m = 0; m <= n - k; ++m) {
      if (n - 2 * k + j < m) continue;
      if (P.p < m + 2 * P.q - std::min(P.q, j)) continue;
      total += binomial(k, j) * (std::uint64_t{1} << (k - j)) * binomial(n - k, k - j) * binomial(n - 2 * k + j, m);
    }
  }
  return total - 1;
}

bool is_complete(const QGraphParams& P) { return P.n + P.q <= P.p + P.k; }

namespace {

// Next mask with the same popcount (Gosper), restricted to width bits.
inline Mask next_combination(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <typename Visit>
void neighbors_impl(const QGraphParams& P, const Face& d, Visit&& visit) {
  const int n = P.n, k = P.k;
  const Mask all = full_mask(n);
  std::vector<Mask> star_sets;
  if (k == 0) {
    star_sets.push_back(0);
  } else {
    for (Mask If = full_mask(k); If <= all; If = next_combination(If)) star_sets.push_back(If);
  }
  for (const Mask If : star_sets) {
    const int j = std::popcount(If & d.star);
    const int mmax = P.p - 2 * P.q + std::min(P.q, j);
    if (mmax < 0) continue;
    const Mask free_letters = d.star & ~If;  // F fixed, D star: any letter
    const Mask rest = all & ~(d.star | If);  // both fixed: agree or disagree
    const Mask base = d.one & rest;
    const int rsize = std::popcount(rest);
    const int tmax = std::min(mmax, rsize);
    Mask sub = 0;
    do {
      for (int t = 0; t <= tmax; ++t) {
        if (t == 0) {
          const Face f{n, If, sub | base};
          if (!(f == d)) visit(f);
          continue;
        }
        for (Mask c = full_mask(t); c < (Mask{1} << rsize); c = next_combination(c)) {
          const Face f{n, If, sub | (base ^ deposit_bits(c, rest))};
          visit(f);
        }
      }
      sub = (sub - free_letters) & free_letters;
    } while (sub != 0);
  }
}

void require_size(const QGraphParams& P) {
  if (P.vertex_count() > kBruteForceVertexLimit) throw std::length_error("Q graph too large for brute force");
}

}  // namespace

void for_each_neighbor(const QGraphParams& params, const Face& d, const std::function<void(const Face&)>& visit) {
  neighbors_impl(params, d, visit);
}

std::vector<Face> brute_force_neighbors(const QGraphParams& params, const Face& d) {
  require_size(params);
  std::vector<Face> out;
  for (const Face& f : enumerate_faces(params.n, params.k))
    if (!(f == d) && adjacent(params, d, f)) out.push_back(f);
  return out;
}

std::vector<std::uint64_t> brute_force_degrees_serial(const QGraphParams& params) {
  require_size(params);
  const auto faces = enumerate_faces(params.n, params.k);
  std::vector<std::uint64_t> deg(faces.size(), 0);
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = 0; b < faces.size(); ++b)
      if (a != b && gap(faces[a], faces[b], params.q).rho <= params.p) ++deg[a];
  return deg;
}

std::vector<std::uint64_t> brute_force_degrees(const QGraphParams& params, int workers) {
  require_size(params);
  const auto faces = enumerate_faces(params.n, params.k);
  const auto count = static_cast<std::int64_t>(faces.size());
  std::vector<std::uint64_t> deg(faces.size(), 0);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t a = 0; a < count; ++a) {
    std::uint64_t local = 0;
    for (std::int64_t b = 0; b < count; ++b)
      if (a != b && gap(faces[a], faces[b], params.q).rho <= params.p) ++local;
    deg[a] = local;
  }
  return deg;
}

namespace {

// Min segment tree over (degree, index); removed vertices hold +inf.
class MinTree {
 public:
  explicit MinTree(std::size_t size, std::uint32_t init) : n_(std::bit_ceil(std::max<std::size_t>(size, 1))), t_(2 * n_, kInf) {
    for (std::size_t i = 0; i < size; ++i) t_[n_ + i] = init;
    for (std::size_t i = n_ - 1; i >= 1; --i) t_[i] = std::min(t_[2 * i], t_[2 * i + 1]);
  }
  void set(std::size_t i, std::uint32_t v) {
    i += n_;
    t_[i] = v;
    for (i >>= 1; i >= 1; i >>= 1) t_[i] = std::min(t_[2 * i], t_[2 * i + 1]);
  }
  std::uint32_t get(std::size_t i) const { return t_[n_ + i]; }
  // Leftmost position holding the minimum.
  std::size_t argmin() const {
    std::size_t i = 1;
    while (i < n_) i = t_[2 * i] <= t_[2 * i + 1] ? 2 * i : 2 * i + 1;
    return i - n_;
  }
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

 private:
  std::size_t n_;
  std::vector<std::uint32_t> t_;
};

}  // namespace

IndependentSetResult independent_set(const QGraphParams& P) {
  const std::uint64_t V = P.vertex_count();
  if (V > (std::uint64_t{1} << 26)) throw std::length_error("Q graph too large for greedy coloring");
  IndependentSetResult res;
  res.max_degree = degree_formula(P);
  res.guaranteed_size = (V + res.max_degree) / (res.max_degree + 1);

  // Smallest-last order: repeatedly remove a vertex of minimum remaining degree.
  MinTree tree(V, static_cast<std::uint32_t>(res.max_degree));
  std::vector<std::uint32_t> order;
  order.reserve(V);
  std::vector<char> removed(V, 0);
  for (std::uint64_t step = 0; step < V; ++step) {
    const std::size_t v = tree.argmin();
    removed[v] = 1;
    tree.set(v, MinTree::kInf);
    order.push_back(static_cast<std::uint32_t>(v));
    neighbors_impl(P, face_unrank(P.n, P.k, v), [&](const Face& f) {
      const auto u = static_cast<std::size_t>(face_rank(f));
      if (!removed[u]) tree.set(u, tree.get(u) - 1);
    });
  }

  constexpr std::uint32_t kUncolored = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> color(V, kUncolored);
  std::vector<std::uint64_t> stamp(res.max_degree + 2, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::uint64_t> class_size;
  for (std::uint64_t t = V; t-- > 0;) {
    const std::uint32_t v = order[t];
    neighbors_impl(P, face_unrank(P.n, P.k, v), [&](const Face& f) {
      const std::uint32_t c = color[face_rank(f)];
      if (c != kUncolored && c < stamp.size()) stamp[c] = t;
    });
    std::uint32_t c = 0;
    while (stamp[c] == t) ++c;
    color[v] = c;
    if (class_size.size() <= c) class_size.resize(c + 1, 0);
    ++class_size[c];
  }
  res.colors_used = class_size.size();
  const auto best = static_cast<std::uint32_t>(std::max_element(class_size.begin(), class_size.end()) - class_size.begin());
  for (std::uint64_t v = 0; v < V; ++v)
    if (color[v] == best) res.faces.push_back(face_unrank(P.n, P.k, v));
  return res;
}

bool is_independent(const QGraphParams& params, const std::vector<Face>& faces) {
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = a + 1; b < faces.size(); ++b) {
      if (faces[a] == faces[b] || adjacent(params, faces[a], faces[b])) return false;
    }
  return true;
}

bool is_clique(const QGraphParams& params, const std::vector<Face>& faces) {
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = a + 1; b < faces.size(); ++b) {
      if (faces[a] == faces[b] || !adjacent(params, faces[a], faces[b])) return false;
    }
  return true;
}

std::vector<Face> clique_construction(int n) {
  if (n < 3) throw std::invalid_argument("clique_construction needs n >= 3");
  std::vector<Face> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Face{n, Mask{1} | (Mask{1} << i) | (Mask{1} << j), 0});
  return out;
}

}  // namespace gaussoid
