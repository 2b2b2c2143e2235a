#ifndef GAUSSOID_CONSTRUCT_HPP_
#define GAUSSOID_CONSTRUCT_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gaussoid/ci.hpp"
#include "gaussoid/qgraph.hpp"

namespace gaussoid {

/// k-gaussoids placed on the frames of an independent set in Q(n,k,3,2).
struct PuzzleAssignment {
  std::vector<Face> frames;
  std::vector<CIStructure> pieces;  // pieces[t] sits on frames[t]
};

// Throws std::invalid_argument if the frames are not independent in
// Q(n,k,3,2) or a piece is not a k-gaussoid.
void validate(const PuzzleAssignment& assignment, int n);

/// Disjoint union of the embedded pieces.  Always a gaussoid.
CIStructure puzzle_lift(const PuzzleAssignment& assignment, int n);

// Uniform random pieces drawn from `catalogue` (the k-gaussoids).
PuzzleAssignment random_assignment(const std::vector<Face>& frames, const std::vector<CIStructure>& catalogue,
                                   std::mt19937_64& rng);

/// c range-disjoint injections f_1..f_c from the eleven 3-gaussoids into the
/// 53 non-gaussoid patterns.  Canonical choice: f_t maps the i-th gaussoid
/// to the (11(t-1)+i)-th non-gaussoid, both in increasing bitmap order.
class PerturbationScheme {
 public:
  static PerturbationScheme canonical();

  int count() const { return static_cast<int>(maps_.size()); }
  Pattern apply(int t, Pattern gaussoid) const;           // t in [0, c)
  std::optional<Pattern> invert(int t, Pattern image) const;
  // Checks injectivity, range-disjointness and that images are non-gaussoids.
  bool valid() const;

 private:
  std::vector<std::array<Pattern, 64>> maps_;  // indexed by gaussoid pattern; 0xFF elsewhere
};

/// Replaces the minor at every frame (an independent set in Q(n,3,2,2)) by
/// its image under the chosen injection.  Never a gaussoid.
CIStructure perturb_non_gaussoid(const CIStructure& g, const std::vector<Face>& frames, const std::vector<int>& choice,
                                 const PerturbationScheme& scheme);

// Recovers the original minors from a perturbed structure.
std::optional<std::vector<CIStructure>> recover_minors(const CIStructure& h, const std::vector<Face>& frames,
                                                       const std::vector<int>& choice, const PerturbationScheme& scheme);

/// R_k = r-subsets S of [n] with sum ≡ k (mod n), each mapped to the square
/// (ij | S \ ij) for i < j the two smallest elements of S.
std::vector<Mask> residue_class(int n, int r, int k);
CIStructure residue_gaussoid(int n, int r, int k);
int best_residue(int n, int r);  // argmax_k |R_k|, smallest k on ties

struct BoundReport {
  int n = 0;
  double log2_lower = 0;           // n 2^(n-6) / 3
  std::optional<double> log2_constructed;  // |independent set of Q(n,3,3,2)| log2 11
  std::uint64_t independent_set_size = 0;
  std::uint64_t colors_used = 0;
  std::uint64_t max_degree = 0;
  bool meets_lower = false;        // constructed >= lower
  double log2_upper = 0;           // |A_n| - (4/9) n(n-1) 2^(n-6)
  double log2_total_subsets = 0;   // |A_n|
};

inline constexpr int kBoundConstructionMaxN = 13;

BoundReport bound_report(int n);

}  // namespace gaussoid

#endif  // GAUSSOID_CONSTRUCT_HPP_
