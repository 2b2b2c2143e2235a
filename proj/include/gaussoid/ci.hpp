#ifndef GAUSSOID_CI_HPP_
#define GAUSSOID_CI_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussoid/cube.hpp"

namespace gaussoid {

inline constexpr int kMaxCIDim = 20;

/// A set of squares of the n-cube, stored as a bitmap over the canonical
/// square index.  The ambient dimension is part of the value.
class CIStructure {
 public:
  CIStructure() = default;
  explicit CIStructure(int n);
  CIStructure(int n, const std::vector<Square>& squares);

  static CIStructure full(int n);

  int n() const { return n_; }
  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(std::size_t index) const { return (words_[index >> 6] >> (index & 63)) & 1; }
  bool contains(const Square& s) const { return contains(square_index(n_, s)); }
  // Order-insensitive lookup of (ij|K); false when i == j or K meets ij.
  bool has(int i, int j, Mask K) const;

  void insert(std::size_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void insert(const Square& s) { insert(square_index(n_, s)); }
  void erase(std::size_t index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }
  void erase(const Square& s) { erase(square_index(n_, s)); }

  // Member squares in canonical order.
  std::vector<Square> squares() const;
  std::vector<std::size_t> indices() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const CIStructure&, const CIStructure&) = default;

 private:
  int n_ = 0;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of membership bit strings b_0 b_1 ... (absent < present).
bool bitmap_less(const CIStructure& a, const CIStructure& b);

std::size_t hash_value(const CIStructure& a);

// Text format: "n=<int>" then one "i,j|K" line per square in canonical order.
std::string to_text(const CIStructure& a);
CIStructure parse_ci_text(std::string_view text);
CIStructure read_ci_file(const std::string& path);

// ---- the 3-cube and local patterns ------------------------------------------

// Local squares of a 3-cube with axes a < b < c, bit order:
//   0:(ab|) 1:(ab|c) 2:(ac|) 3:(ac|b) 4:(bc|) 5:(bc|a)
// This is the canonical square order of A_3.
using Pattern = std::uint8_t;

// Global indices of the six squares of `cube`, in pattern bit order.
std::array<std::size_t, 6> cube_square_indices(int n, const Face& cube);
Pattern cube_pattern(const CIStructure& a, const Face& cube);
CIStructure pattern_structure(Pattern p);
Pattern structure_pattern(const CIStructure& a3);

/// The 64-entry table of 3-gaussoid patterns, derived once from the axioms.
const std::array<bool, 64>& gaussoid_pattern_table();
// The eleven 3-gaussoid patterns in increasing bitmap order.
const std::vector<Pattern>& gaussoid_patterns();

// ---- gaussoid checks --------------------------------------------------------

struct AxiomViolation {
  int axiom = 0;  // 1..4
  int i = 0, j = 0, k = 0;  // 0-based
  Mask L = 0;

  std::string describe() const;
};

/// Direct check of (G1)-(G4); reports the first violation in
/// (i, j, k, L) lexicographic order (L by mask value), axioms in order.
std::optional<AxiomViolation> find_axiom_violation(const CIStructure& a);
bool is_gaussoid_axioms(const CIStructure& a);

// Knee/belt formulation, checked per 3-face.
bool is_gaussoid_belts(const CIStructure& a);
std::optional<Face> find_belt_violation(const CIStructure& a);

// Per-cube table lookup.  Same verdict as the two checks above.
bool is_gaussoid(const CIStructure& a);
std::optional<Face> first_nongaussoid_cube(const CIStructure& a);

// ---- minors -----------------------------------------------------------------

/// A structure on a subset of the ground set, relabeled to {0..|L|-1}
/// by the order-preserving bijection.  labels[local] = original element.
struct Relabeled {
  CIStructure structure;
  std::vector<int> labels;
};

Relabeled restrict_to(const CIStructure& a, Mask L);   // A ∩ A_L
Relabeled contract(const CIStructure& a, Mask L);      // {(ij|K) ∈ A_L : (ij|K ∪ ~L) ∈ A}
Relabeled marginalize(const CIStructure& a, Mask L);   // {(ij|K) ∈ A : L ∩ ijK = ∅}, on ~L
Relabeled condition(const CIStructure& a, Mask L);     // {(ij|K) ∈ A_~L : (ij|KL) ∈ A}

// Maps a mask over the original ground set into the local labels of r.
Mask relabel_mask(const Relabeled& r, Mask original);

/// (L|M)-minor: the member squares inside `frame`, projected onto the L-cube.
CIStructure minor(const CIStructure& a, const Face& frame);
/// Preimage of a structure on the L-cube under projection onto `frame`.
CIStructure embed(const CIStructure& local, const Face& frame);

std::vector<std::pair<Face, CIStructure>> all_minors(const CIStructure& a, int k);

// (ij|K) -> (ij|[n] \ ijK).
CIStructure dual(const CIStructure& a);

/// Element of the hyperoctahedral group: flip ZERO/ONE on `flips`, then send
/// coordinate p to perm[p].
struct SignedPermutation {
  std::vector<int> perm;
  Mask flips = 0;

  static SignedPermutation identity(int n);
};

Face apply_symmetry(const Face& f, const SignedPermutation& g);
CIStructure apply_symmetry(const CIStructure& a, const SignedPermutation& g);

}  // namespace gaussoid

#endif  // GAUSSOID_CI_HPP_
