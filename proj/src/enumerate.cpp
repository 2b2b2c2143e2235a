#include "gaussoid/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>

#include <omp.h>

namespace gaussoid {

CubePatternTable::CubePatternTable(ClassSpec spec) : spec_(spec) {
  for (int p = 0; p < 64; ++p) {
    const auto c = pattern_class(static_cast<Pattern>(p));
    if (c && spec.allows(*c)) {
      allowed_.push_back(static_cast<Pattern>(p));
      allowed_mask_ |= std::uint64_t{1} << p;
    }
  }
  for (int assigned = 0; assigned < 64; ++assigned) {
    for (int values = 0; values < 64; ++values) {
      if ((values & ~assigned) != 0) continue;
      Partial e;
      Pattern all_in = 63, all_out = 63;
      for (Pattern p : allowed_) {
        if ((p & assigned) != values) continue;
        e.extendable = true;
        all_in &= p;
        all_out &= static_cast<Pattern>(~p & 63);
      }
      if (e.extendable) {
        e.forced_in = all_in & static_cast<Pattern>(~assigned & 63);
        e.forced_out = all_out & static_cast<Pattern>(~assigned & 63);
      }
      partial_[static_cast<std::size_t>(assigned) << 6 | static_cast<std::size_t>(values)] = e;
    }
  }
}

void check_resource_guard(int n, ClassSpec spec, GuardedOp op, bool unsafe) {
  if (n < 3) throw std::invalid_argument("class counting needs n >= 3");
  if (n > kMaxCIDim) throw std::invalid_argument("dimension too large");
  if (unsafe) return;
  // Classes with E, L and U among their pieces grow double exponentially;
  // everything else stays within desk scale a few dimensions further.
  const bool fast_growing = spec.allows(MinorClass::E) && spec.allows(MinorClass::L) && spec.allows(MinorClass::U);
  int max_n = 0;
  if (op == GuardedOp::Count) max_n = fast_growing ? 5 : 7;
  else max_n = fast_growing ? 4 : 6;
  if (n > max_n) {
    throw ResourceGuardError(std::string(op == GuardedOp::Count ? "count" : "enumerate") + " of " + spec.str() +
                             " at n=" + std::to_string(n) + " exceeds the work budget (max n=" + std::to_string(max_n) +
                             "); pass --unsafe to override");
  }
}

std::vector<std::uint32_t> search_order(int n) {
  const std::size_t N = square_count(n);
  std::vector<std::uint32_t> order(N);
  std::vector<int> key(N);
  for (std::size_t x = 0; x < N; ++x) {
    order[x] = static_cast<std::uint32_t>(x);
    const Square s = square_at(n, x);
    key[x] = std::max(s.j, s.K ? 31 - std::countl_zero(s.K) : 0);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return key[a] < key[b]; });
  return order;
}

namespace {

// Read-only incidence data shared by all workers.
struct Problem {
  int n = 0;
  std::size_t squares = 0;
  std::vector<std::array<std::uint32_t, 6>> cube_squares;
  // For each square: (cube, local bit) for the n-2 cubes containing it.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> square_cubes;
  std::vector<std::uint32_t> order;
  const CubePatternTable* table = nullptr;

  Problem(int n_, const CubePatternTable& t) : n(n_), squares(square_count(n_)), table(&t) {
    const auto cubes = enumerate_faces(n, 3);
    cube_squares.reserve(cubes.size());
    square_cubes.resize(squares);
    for (std::size_t c = 0; c < cubes.size(); ++c) {
      const auto idx = cube_square_indices(n, cubes[c]);
      std::array<std::uint32_t, 6> arr{};
      for (int b = 0; b < 6; ++b) {
        arr[b] = static_cast<std::uint32_t>(idx[b]);
        square_cubes[idx[b]].emplace_back(static_cast<std::uint32_t>(c), static_cast<std::uint8_t>(b));
      }
      cube_squares.push_back(arr);
    }
    order = search_order(n);
  }
};

// Assignment plus per-cube (assigned, values) masks, with a trail for undo.
class Search {
 public:
  explicit Search(const Problem& p)
      : p_(p), value_(p.squares, kUnset), cube_assigned_(p.cube_squares.size(), 0), cube_values_(p.cube_squares.size(), 0) {
    trail_.reserve(p.squares);
    queue_.reserve(p.cube_squares.size());
  }

  bool root_consistent() {
    // A cube with nothing assigned can still be infeasible (empty spec).
    if (p_.cube_squares.empty()) return true;
    if (!p_.table->partial(0, 0).extendable) return false;
    queue_.clear();
    for (std::uint32_t c = 0; c < cube_assigned_.size(); ++c) queue_.push_back(c);
    return propagate();
  }

  std::int8_t value(std::uint32_t sq) const { return value_[sq]; }
  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t sq = trail_.back();
      trail_.pop_back();
      const auto bitv = value_[sq];
      for (auto [c, b] : p_.square_cubes[sq]) {
        cube_assigned_[c] &= static_cast<Pattern>(~(1u << b));
        if (bitv == 1) cube_values_[c] &= static_cast<Pattern>(~(1u << b));
      }
      value_[sq] = kUnset;
    }
  }

  // Assigns and propagates; on false the caller must undo to its mark.
  bool assign(std::uint32_t sq, bool v) {
    queue_.clear();
    set(sq, v);
    return propagate();
  }

  template <typename Leaf>
  std::uint64_t count(std::size_t pos, Leaf&& leaf) {
    while (pos < p_.order.size() && value_[p_.order[pos]] != kUnset) ++pos;
    if (pos == p_.order.size()) {
      leaf(*this);
      return 1;
    }
    ++nodes_;
    const std::uint32_t sq = p_.order[pos];
    std::uint64_t total = 0;
    for (int v = 0; v < 2; ++v) {
      const std::size_t m = mark();
      if (assign(sq, v == 1)) total += count(pos + 1, leaf);
      undo(m);
    }
    return total;
  }

  CIStructure structure() const {
    CIStructure a(p_.n);
    for (std::size_t x = 0; x < p_.squares; ++x)
      if (value_[x] == 1) a.insert(x);
    return a;
  }

  std::uint64_t nodes() const { return nodes_; }

  static constexpr std::int8_t kUnset = -1;

 private:
  void set(std::uint32_t sq, bool v) {
    value_[sq] = v ? 1 : 0;
    trail_.push_back(sq);
    for (auto [c, b] : p_.square_cubes[sq]) {
      cube_assigned_[c] |= static_cast<Pattern>(1u << b);
      if (v) cube_values_[c] |= static_cast<Pattern>(1u << b);
      queue_.push_back(c);
    }
  }

  bool propagate() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::uint32_t c = queue_[head];
      const auto& e = p_.table->partial(cube_assigned_[c], cube_values_[c]);
      if (!e.extendable) return false;
      const Pattern forced = e.forced_in | e.forced_out;
      for (Pattern f = forced; f; f &= f - 1) {
        const int b = std::countr_zero(static_cast<unsigned>(f));
        const std::uint32_t sq = p_.cube_squares[c][b];
        if (value_[sq] != kUnset) continue;
        set(sq, (e.forced_in >> b) & 1);
      }
    }
    return true;
  }

  const Problem& p_;
  std::vector<std::int8_t> value_;
  std::vector<Pattern> cube_assigned_;
  std::vector<Pattern> cube_values_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> queue_;
  std::uint64_t nodes_ = 0;
};

// Feasible values of the first `depth` squares in search order.
std::vector<std::vector<std::int8_t>> collect_prefixes(const Problem& p, std::size_t depth, std::uint64_t& nodes) {
  std::vector<std::vector<std::int8_t>> out;
  Search s(p);
  if (!s.root_consistent()) return out;
  std::vector<std::int8_t> cur;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == depth) {
      out.push_back(cur);
      return;
    }
    const std::uint32_t sq = p.order[pos];
    if (s.value(sq) != Search::kUnset) {
      cur.push_back(s.value(sq));
      self(self, pos + 1);
      cur.pop_back();
      return;
    }
    ++nodes;
    for (int v = 0; v < 2; ++v) {
      const std::size_t m = s.mark();
      if (s.assign(sq, v == 1)) {
        cur.push_back(static_cast<std::int8_t>(v));
        self(self, pos + 1);
        cur.pop_back();
      }
      s.undo(m);
    }
  };
  rec(rec, 0);
  return out;
}

// Replays a prefix on a fresh search; false if it is inconsistent.
bool replay(Search& s, const Problem& p, const std::vector<std::int8_t>& prefix) {
  if (!s.root_consistent()) return false;
  for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
    const std::uint32_t sq = p.order[pos];
    const auto cur = s.value(sq);
    if (cur != Search::kUnset) {
      if (cur != prefix[pos]) return false;
      continue;
    }
    if (!s.assign(sq, prefix[pos] == 1)) return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

}  // namespace

CountResult count_class_serial(int n, ClassSpec spec, bool unsafe) {
  check_resource_guard(n, spec, GuardedOp::Count, unsafe);
  const auto t0 = std::chrono::steady_clock::now();
  const CubePatternTable table(spec);
  const Problem p(n, table);
  Search s(p);
  CountResult r;
  if (s.root_consistent()) r.count = to_mpz(s.count(0, [](const Search&) {}));
  r.nodes_explored = s.nodes();
  r.wall_seconds = seconds_since(t0);
  return r;
}

CountResult count_class(int n, ClassSpec spec, const SearchOptions& opts) {
  check_resource_guard(n, spec, GuardedOp::Count, opts.unsafe);
  const auto t0 = std::chrono::steady_clock::now();
  const CubePatternTable table(spec);
  const Problem p(n, table);
  const std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(std::max(opts.prefix_depth, 0)), p.squares);
  std::uint64_t prefix_nodes = 0;
  const auto prefixes = collect_prefixes(p, depth, prefix_nodes);

  std::vector<std::uint64_t> counts(prefixes.size(), 0), nodes(prefixes.size(), 0);
  const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
  const auto tasks = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel num_threads(threads)
  {
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < tasks; ++t) {
      Search s(p);
      if (!replay(s, p, prefixes[t])) continue;
      counts[t] = s.count(depth, [](const Search&) {});
      nodes[t] = s.nodes();
    }
  }
  CountResult r;
  r.count = 0;
  r.nodes_explored = prefix_nodes;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    r.count += to_mpz(counts[t]);
    r.nodes_explored += nodes[t];
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

std::vector<CIStructure> enumerate_class(int n, ClassSpec spec, std::size_t limit, const SearchOptions& opts) {
  check_resource_guard(n, spec, GuardedOp::Enumerate, opts.unsafe);
  const CubePatternTable table(spec);
  const Problem p(n, table);
  const std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(std::max(opts.prefix_depth, 0)), p.squares);
  std::uint64_t prefix_nodes = 0;
  const auto prefixes = collect_prefixes(p, depth, prefix_nodes);
  std::vector<std::vector<CIStructure>> found(prefixes.size());
  const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
  const auto tasks = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < tasks; ++t) {
    Search s(p);
    if (!replay(s, p, prefixes[t])) continue;
    s.count(depth, [&](const Search& leaf) { found[t].push_back(leaf.structure()); });
  }
  std::vector<CIStructure> all;
  for (auto& v : found)
    for (auto& a : v) all.push_back(std::move(a));
  std::sort(all.begin(), all.end(), bitmap_less);
  if (limit > 0 && all.size() > limit) all.resize(limit);
  return all;
}

std::uint64_t brute_force_count(int n, ClassSpec spec, int workers) {
  if (n < 3 || n > 4) throw std::invalid_argument("brute_force_count supports 3 <= n <= 4 only");
  const auto cubes = enumerate_faces(n, 3);
  std::vector<std::array<std::size_t, 6>> idx;
  for (const Face& c : cubes) idx.push_back(cube_square_indices(n, c));
  std::array<bool, 64> ok{};
  for (int pat = 0; pat < 64; ++pat) {
    const auto c = pattern_class(static_cast<Pattern>(pat));
    ok[pat] = c && spec.allows(*c);
  }
  const std::int64_t total = std::int64_t{1} << square_count(n);
  std::uint64_t count = 0;
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for reduction(+ : count) schedule(static) num_threads(threads)
  for (std::int64_t bits = 0; bits < total; ++bits) {
    bool good = true;
    for (const auto& sq : idx) {
      unsigned pat = 0;
      for (int b = 0; b < 6; ++b) pat |= static_cast<unsigned>((bits >> sq[b]) & 1) << b;
      if (!ok[pat]) {
        good = false;
        break;
      }
    }
    if (good) ++count;
  }
  return count;
}

// ---- CNF --------------------------------------------------------------------

std::string to_cnf(int n, ClassSpec spec) {
  if (n < 3 || n > kMaxCIDim) throw std::invalid_argument("to_cnf needs 3 <= n <= 20");
  const CubePatternTable table(spec);
  const auto cubes = enumerate_faces(n, 3);
  const std::size_t per_cube = 64 - table.allowed().size();
  std::ostringstream out;
  out << "c spec=" << spec.str() << " n=" << n << " varmap=canonical\n";
  out << "p cnf " << square_count(n) << " " << per_cube * cubes.size() << "\n";
  for (const Face& c : cubes) {
    const auto idx = cube_square_indices(n, c);
    for (int pat = 0; pat < 64; ++pat) {
      if (table.allows(static_cast<Pattern>(pat))) continue;
      for (int b = 0; b < 6; ++b) {
        const long v = static_cast<long>(idx[b]) + 1;
        out << ((pat >> b & 1) ? -v : v) << ' ';
      }
      out << "0\n";
    }
  }
  return out.str();
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t expected = 0;
  std::vector<int> clause;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.variables >> expected;
      if (fmt != "cnf" || !ls) throw std::invalid_argument("bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS clause before header");
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
      } else {
        if (std::abs(lit) > cnf.variables) throw std::invalid_argument("DIMACS literal out of range");
        clause.push_back(lit);
      }
    }
  }
  if (!clause.empty()) throw std::invalid_argument("unterminated DIMACS clause");
  if (!header) throw std::invalid_argument("missing DIMACS header");
  if (cnf.clauses.size() != expected) throw std::invalid_argument("DIMACS clause count mismatch");
  return cnf;
}

mpz_class count_models(const Cnf& cnf) {
  std::vector<std::int8_t> val(static_cast<std::size_t>(cnf.variables) + 1, -1);
  auto rec = [&](auto&& self, int next) -> mpz_class {
    bool all_sat = true;
    for (const auto& cl : cnf.clauses) {
      bool sat = false, open = false;
      for (int lit : cl) {
        const auto v = val[static_cast<std::size_t>(std::abs(lit))];
        if (v < 0) open = true;
        else if ((v == 1) == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat && !open) return mpz_class(0);
      if (!sat) all_sat = false;
    }
    while (next <= cnf.variables && val[static_cast<std::size_t>(next)] >= 0) ++next;
    if (all_sat) {
      int free_vars = 0;
      for (int v = next; v <= cnf.variables; ++v)
        if (val[static_cast<std::size_t>(v)] < 0) ++free_vars;
      mpz_class r = 1;
      r <<= free_vars;
      return r;
    }
    mpz_class total = 0;
    for (std::int8_t b = 0; b < 2; ++b) {
      val[static_cast<std::size_t>(next)] = b;
      total += self(self, next + 1);
    }
    val[static_cast<std::size_t>(next)] = -1;
    return total;
  };
  return rec(rec, 1);
}

}  // namespace gaussoid
