#ifndef GAUSSOID_TESTS_SUPPORT_HPP_
#define GAUSSOID_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>

#include "gaussoid/ci.hpp"
#include "gaussoid/graphs.hpp"

namespace gaussoid::testing {

inline CIStructure random_structure(int n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  CIStructure a(n);
  for (std::size_t x = 0; x < a.universe(); ++x)
    if (coin(rng)) a.insert(x);
  return a;
}

inline Face random_face(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> trit(0, 2);
  Mask star = 0, one = 0;
  for (int p = 0; p < n; ++p) {
    const int t = trit(rng);
    if (t == 2) star |= Mask{1} << p;
    else if (t == 1) one |= Mask{1} << p;
  }
  return make_face(n, star, one);
}

inline Face random_face(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, face_count(n, k) - 1);
  return face_unrank(n, k, pick(rng));
}

inline Mask random_mask(int n, std::mt19937_64& rng) {
  return static_cast<Mask>(std::uniform_int_distribution<std::uint64_t>(0, full_mask(n))(rng));
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
  const int pairs = n * (n - 1) / 2;
  return Graph::from_code(n, std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << pairs) - 1)(rng));
}

// Gaussoids with varied letters: separation gaussoids, their duals, and symmetric images.
inline CIStructure random_gaussoid(int n, std::mt19937_64& rng) {
  CIStructure a = separation_gaussoid(random_graph(n, rng));
  if (rng() & 1) a = dual(a);
  SignedPermutation g = SignedPermutation::identity(n);
  std::shuffle(g.perm.begin(), g.perm.end(), rng);
  g.flips = random_mask(n, rng);
  return apply_symmetry(a, g);
}

inline CIStructure structure_of(int n, std::initializer_list<const char*> squares) {
  CIStructure a(n);
  for (const char* s : squares) a.insert(square_of_face(face_parse_sets(s, n)));
  return a;
}

}  // namespace gaussoid::testing

#endif  // GAUSSOID_TESTS_SUPPORT_HPP_
