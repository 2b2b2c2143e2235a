#ifndef GAUSSOID_ENUMERATE_HPP_
#define GAUSSOID_ENUMERATE_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gaussoid/ci.hpp"
#include "gaussoid/classify.hpp"

namespace gaussoid {

/// Allowed 6-bit cube patterns for a spec, plus the exact projection onto
/// partial assignments: for every (assigned, values) pair whether some
/// allowed pattern extends it and which unassigned bits it forces.
class CubePatternTable {
 public:
  explicit CubePatternTable(ClassSpec spec);

  ClassSpec spec() const { return spec_; }
  const std::vector<Pattern>& allowed() const { return allowed_; }
  bool allows(Pattern p) const { return allowed_mask_ >> (p & 63) & 1; }

  struct Partial {
    bool extendable = false;
    Pattern forced_in = 0;
    Pattern forced_out = 0;
  };
  const Partial& partial(Pattern assigned, Pattern values) const {
    return partial_[static_cast<std::size_t>(assigned & 63) << 6 | (values & assigned & 63)];
  }

 private:
  ClassSpec spec_;
  std::vector<Pattern> allowed_;
  std::uint64_t allowed_mask_ = 0;
  std::array<Partial, 4096> partial_{};
};

/// Raised when an operation would exceed the desk-scale work budget.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GuardedOp { Count, Enumerate };
// Throws ResourceGuardError unless `unsafe`.
void check_resource_guard(int n, ClassSpec spec, GuardedOp op, bool unsafe);

struct CountResult {
  mpz_class count;
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0;
};

struct SearchOptions {
  int workers = 0;         // 0: OpenMP default
  int prefix_depth = 16;   // tasks are the feasible assignments of this many leading squares
  bool unsafe = false;
};

/// Number of structures on [n] whose 3-minors all have letters in spec.
/// Depth-first search with per-cube propagation; the tree is split at a
/// fixed prefix so the result does not depend on the worker count.
CountResult count_class(int n, ClassSpec spec, const SearchOptions& opts = {});
// Single-threaded search from the root; reference for count_class.
CountResult count_class_serial(int n, ClassSpec spec, bool unsafe = false);

/// All members, sorted by bitmap_less; at most `limit` when limit > 0.
std::vector<CIStructure> enumerate_class(int n, ClassSpec spec, std::size_t limit = 0, const SearchOptions& opts = {});

// Exhaustive filter over all 2^|A_n| subsets (n <= 4).
std::uint64_t brute_force_count(int n, ClassSpec spec, int workers = 0);

// Squares in search order: by (max element of ijK, canonical index).
std::vector<std::uint32_t> search_order(int n);

// ---- CNF --------------------------------------------------------------------

/// DIMACS: variable = canonical square index + 1; one width-6 clause per
/// forbidden pattern per 3-cube.
std::string to_cnf(int n, ClassSpec spec);

struct Cnf {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(std::string_view text);
// Model count by plain DPLL branching on the lowest free variable.
mpz_class count_models(const Cnf& cnf);

}  // namespace gaussoid

#endif  // GAUSSOID_ENUMERATE_HPP_
