#include "gaussoid/ci.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaussoid {

CIStructure::CIStructure(int n) : n_(n) {
  if (n < 0 || n > kMaxCIDim) throw std::invalid_argument("CI structure dimension out of range");
  universe_ = square_count(n);
  words_.assign((universe_ + 63) / 64, 0);
}

CIStructure::CIStructure(int n, const std::vector<Square>& squares) : CIStructure(n) {
  for (const Square& s : squares) {
    if (s.j >= n || ((s.K & ~full_mask(n)) != 0)) throw std::invalid_argument("square outside ground set");
    insert(s);
  }
}

CIStructure CIStructure::full(int n) {
  CIStructure a(n);
  for (std::size_t x = 0; x < a.universe_; ++x) a.insert(x);
  return a;
}

std::size_t CIStructure::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool CIStructure::has(int i, int j, Mask K) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  if (K & ((Mask{1} << i) | (Mask{1} << j))) return false;
  return contains(square_index(n_, Square{i, j, K}));
}

std::vector<std::size_t> CIStructure::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return out;
}

std::vector<Square> CIStructure::squares() const {
  std::vector<Square> out;
  for (std::size_t x : indices()) out.push_back(square_at(n_, x));
  return out;
}

bool bitmap_less(const CIStructure& a, const CIStructure& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (wa[w] == wb[w]) continue;
    const std::uint64_t diff = wa[w] ^ wb[w];
    const std::uint64_t low = diff & (~diff + 1);
    return (wb[w] & low) != 0;
  }
  return false;
}

std::size_t hash_value(const CIStructure& a) {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(a.n());
  for (auto w : a.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string to_text(const CIStructure& a) {
  std::string out = "n=" + std::to_string(a.n()) + "\n";
  for (const Square& s : a.squares()) out += square_format(s) + "\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

CIStructure parse_ci_text(std::string_view text) {
  std::optional<CIStructure> a;
  int lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    try {
      if (!a) {
        if (line.substr(0, 2) != "n=") throw std::invalid_argument("expected header 'n=<int>'");
        int n = 0;
        const auto num = line.substr(2);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
        if (ec != std::errc{} || ptr != num.data() + num.size()) throw std::invalid_argument("bad dimension");
        if (n < 2) throw std::invalid_argument("dimension must be at least 2");
        a.emplace(n);
        continue;
      }
      const Face f = face_parse_sets(line, a->n());
      if (f.dim() != 2) throw std::invalid_argument("expected a square 'i,j|K'");
      a->insert(square_of_face(f));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!a) throw std::invalid_argument("missing header 'n=<int>'");
  return *a;
}

CIStructure read_ci_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ci_text(ss.str());
}

// ---- local patterns ---------------------------------------------------------

namespace {

struct CubeAxes {
  int a, b, c;
};

CubeAxes axes_of(const Face& cube) {
  Mask s = cube.star;
  const int a = std::countr_zero(s);
  s &= s - 1;
  const int b = std::countr_zero(s);
  s &= s - 1;
  const int c = std::countr_zero(s);
  return {a, b, c};
}

}  // namespace

std::array<std::size_t, 6> cube_square_indices(int n, const Face& cube) {
  const auto [a, b, c] = axes_of(cube);
  const Mask L = cube.one;
  return {square_index(n, Square{a, b, L}), square_index(n, Square{a, b, L | (Mask{1} << c)}),
          square_index(n, Square{a, c, L}), square_index(n, Square{a, c, L | (Mask{1} << b)}),
          square_index(n, Square{b, c, L}), square_index(n, Square{b, c, L | (Mask{1} << a)})};
}

Pattern cube_pattern(const CIStructure& a, const Face& cube) {
  if (cube.dim() != 3 || cube.n != a.n()) throw std::invalid_argument("cube_pattern: not a 3-face of the ambient cube");
  const auto idx = cube_square_indices(a.n(), cube);
  Pattern p = 0;
  for (int t = 0; t < 6; ++t)
    if (a.contains(idx[t])) p |= static_cast<Pattern>(1u << t);
  return p;
}

CIStructure pattern_structure(Pattern p) {
  CIStructure a(3);
  for (std::size_t t = 0; t < 6; ++t)
    if (p & (1u << t)) a.insert(t);
  return a;
}

Pattern structure_pattern(const CIStructure& a3) {
  if (a3.n() != 3) throw std::invalid_argument("structure_pattern needs n=3");
  return static_cast<Pattern>(a3.words().front() & 63u);
}

const std::array<bool, 64>& gaussoid_pattern_table() {
  static const std::array<bool, 64> table = [] {
    std::array<bool, 64> t{};
    for (int p = 0; p < 64; ++p) t[p] = is_gaussoid_axioms(pattern_structure(static_cast<Pattern>(p)));
    return t;
  }();
  return table;
}

const std::vector<Pattern>& gaussoid_patterns() {
  static const std::vector<Pattern> pats = [] {
    std::vector<Pattern> v;
    for (int p = 0; p < 64; ++p)
      if (gaussoid_pattern_table()[p]) v.push_back(static_cast<Pattern>(p));
    return v;
  }();
  return pats;
}

// ---- checks -----------------------------------------------------------------

std::string AxiomViolation::describe() const {
  std::string Ls;
  for (Mask m = L; m; m &= m - 1) {
    if (!Ls.empty()) Ls += ',';
    Ls += std::to_string(std::countr_zero(m) + 1);
  }
  return "G" + std::to_string(axiom) + " at (i,j,k|L) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
         std::to_string(k + 1) + "|" + Ls + ")";
}

std::optional<AxiomViolation> find_axiom_violation(const CIStructure& a) {
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Mask bi = Mask{1} << i, bj = Mask{1} << j, bk = Mask{1} << k;
        const Mask rest = full_mask(n) & ~(bi | bj | bk);
        Mask L = 0;
        do {
          const bool ij_L = a.has(i, j, L), ik_L = a.has(i, k, L);
          const bool ij_kL = a.has(i, j, L | bk), ik_jL = a.has(i, k, L | bj);
          int bad = 0;
          if (ij_L && ik_jL && !(ik_L && ij_kL)) bad = 1;
          else if (ij_kL && ik_jL && !(ij_L && ik_L)) bad = 2;
          else if (ij_L && ik_L && !(ij_kL && ik_jL)) bad = 3;
          else if (ij_L && ij_kL && !(ik_L || a.has(j, k, L))) bad = 4;
          if (bad) return AxiomViolation{bad, i, j, k, L};
          L = (L - rest) & rest;
        } while (L != 0);
      }
    }
  }
  return std::nullopt;
}

bool is_gaussoid_axioms(const CIStructure& a) { return !find_axiom_violation(a).has_value(); }

namespace {

// Opposite pairs of the 3-cube in pattern bits: ab, ac, bc.
constexpr std::array<Pattern, 3> kOppositePairs = {0b000011, 0b001100, 0b110000};

bool belts_ok(Pattern p) {
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      const Pattern belt = kOppositePairs[x] | kOppositePairs[y];
      // Any square of pair x together with any square of pair y is a knee.
      if ((p & kOppositePairs[x]) && (p & kOppositePairs[y]) && (p & belt) != belt) return false;
    }
  }
  for (int x = 0; x < 3; ++x) {
    if ((p & kOppositePairs[x]) != kOppositePairs[x]) continue;
    bool extends = false;
    for (int y = 0; y < 3; ++y) {
      if (y == x) continue;
      const Pattern belt = kOppositePairs[x] | kOppositePairs[y];
      extends |= (p & belt) == belt;
    }
    if (!extends) return false;
  }
  return true;
}

}  // namespace

std::optional<Face> find_belt_violation(const CIStructure& a) {
  if (a.n() < 3) return std::nullopt;
  for (const Face& c : enumerate_faces(a.n(), 3))
    if (!belts_ok(cube_pattern(a, c))) return c;
  return std::nullopt;
}

bool is_gaussoid_belts(const CIStructure& a) { return !find_belt_violation(a).has_value(); }

std::optional<Face> first_nongaussoid_cube(const CIStructure& a) {
  if (a.n() < 3) return std::nullopt;
  const auto& table = gaussoid_pattern_table();
  for (const Face& c : enumerate_faces(a.n(), 3))
    if (!table[cube_pattern(a, c)]) return c;
  return std::nullopt;
}

bool is_gaussoid(const CIStructure& a) { return !first_nongaussoid_cube(a).has_value(); }

// ---- minors -----------------------------------------------------------------

namespace {

// {(ij|K) on `ground` : (ij|K ∪ extra) ∈ A}, relabeled onto `ground`.
Relabeled induced(const CIStructure& a, Mask ground, Mask extra) {
  const int m = std::popcount(ground);
  Relabeled r{CIStructure(m), {}};
  for (Mask g = ground; g; g &= g - 1) r.labels.push_back(std::countr_zero(g));
  if (m < 2) return r;
  for (std::size_t x = 0; x < r.structure.universe(); ++x) {
    const Square local = square_at(m, x);
    const int i = r.labels[local.i], j = r.labels[local.j];
    const Mask K = deposit_bits(local.K, ground) | extra;
    if (a.contains(Square{i, j, K})) r.structure.insert(x);
  }
  return r;
}

void require_subset(const CIStructure& a, Mask L) {
  if ((L & ~full_mask(a.n())) != 0) throw std::invalid_argument("set is not a subset of the ground set");
}

}  // namespace

Relabeled restrict_to(const CIStructure& a, Mask L) {
  require_subset(a, L);
  return induced(a, L, 0);
}

Relabeled contract(const CIStructure& a, Mask L) {
  require_subset(a, L);
  return induced(a, L, full_mask(a.n()) & ~L);
}

Relabeled marginalize(const CIStructure& a, Mask L) {
  require_subset(a, L);
  return induced(a, full_mask(a.n()) & ~L, 0);
}

Relabeled condition(const CIStructure& a, Mask L) {
  require_subset(a, L);
  return induced(a, full_mask(a.n()) & ~L, L);
}

Mask relabel_mask(const Relabeled& r, Mask original) {
  Mask out = 0;
  for (std::size_t t = 0; t < r.labels.size(); ++t) {
    const Mask bit = Mask{1} << r.labels[t];
    if (original & bit) {
      out |= Mask{1} << t;
      original &= ~bit;
    }
  }
  if (original) throw std::invalid_argument("mask has elements outside the relabeled ground set");
  return out;
}

CIStructure minor(const CIStructure& a, const Face& frame) {
  if (frame.n != a.n()) throw std::invalid_argument("frame lives in a different cube");
  CIStructure out(frame.dim());
  for (const Square& s : squares_of(frame)) {
    if (a.contains(s)) out.insert(square_of_face(project(frame, s.face(a.n()))));
  }
  return out;
}

CIStructure embed(const CIStructure& local, const Face& frame) {
  if (local.n() != frame.dim()) throw std::invalid_argument("embed: structure dimension differs from frame dimension");
  CIStructure out(frame.n);
  for (const Square& s : local.squares()) out.insert(square_of_face(unproject(frame, s.face(local.n()))));
  return out;
}

std::vector<std::pair<Face, CIStructure>> all_minors(const CIStructure& a, int k) {
  if (k < 3 || k > a.n()) throw std::invalid_argument("all_minors needs 3 <= k <= n");
  std::vector<std::pair<Face, CIStructure>> out;
  for (const Face& f : enumerate_faces(a.n(), k)) out.emplace_back(f, minor(a, f));
  return out;
}

CIStructure dual(const CIStructure& a) {
  CIStructure out(a.n());
  const Mask all = full_mask(a.n());
  for (const Square& s : a.squares()) {
    const Mask ij = (Mask{1} << s.i) | (Mask{1} << s.j);
    out.insert(Square{s.i, s.j, all & ~ij & ~s.K});
  }
  return out;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation g;
  for (int p = 0; p < n; ++p) g.perm.push_back(p);
  return g;
}

Face apply_symmetry(const Face& f, const SignedPermutation& g) {
  if (static_cast<int>(g.perm.size()) != f.n) throw std::invalid_argument("permutation size differs from face dimension");
  const Mask one = (f.one ^ g.flips) & ~f.star & full_mask(f.n);
  Face out{f.n, 0, 0};
  for (int p = 0; p < f.n; ++p) {
    const Mask to = Mask{1} << g.perm[p];
    if (f.star >> p & 1) out.star |= to;
    if (one >> p & 1) out.one |= to;
  }
  return out;
}

CIStructure apply_symmetry(const CIStructure& a, const SignedPermutation& g) {
  std::vector<int> seen(static_cast<std::size_t>(a.n()), 0);
  for (int v : g.perm) {
    if (v < 0 || v >= a.n() || seen[v]++) throw std::invalid_argument("not a permutation of the ground set");
  }
  CIStructure out(a.n());
  for (const Square& s : a.squares()) out.insert(square_of_face(apply_symmetry(s.face(a.n()), g)));
  return out;
}

}  // namespace gaussoid
