#include "gaussoid/construct.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gaussoid {

void validate(const PuzzleAssignment& asg, int n) {
  if (asg.frames.size() != asg.pieces.size()) throw std::invalid_argument("puzzle: frames and pieces differ in number");
  if (asg.frames.empty()) return;
  const int k = asg.frames.front().dim();
  if (k < 3) throw std::invalid_argument("puzzle: frames must have dimension >= 3");
  for (std::size_t t = 0; t < asg.frames.size(); ++t) {
    const Face& f = asg.frames[t];
    if (f.n != n || f.dim() != k) throw std::invalid_argument("puzzle: frame " + face_format(f) + " is not a k-face of the n-cube");
    if (asg.pieces[t].n() != k) throw std::invalid_argument("puzzle: piece dimension differs from frame dimension");
    if (!is_gaussoid(asg.pieces[t])) throw std::invalid_argument("puzzle: piece on " + face_format(f) + " is not a gaussoid");
  }
  const auto params = QGraphParams::make(n, k, 3, 2);
  if (!is_independent(params, asg.frames)) throw std::invalid_argument("puzzle: frames are not independent in Q(n,k,3,2)");
}

CIStructure puzzle_lift(const PuzzleAssignment& asg, int n) {
  validate(asg, n);
  CIStructure g(n);
  for (std::size_t t = 0; t < asg.frames.size(); ++t) {
    for (std::size_t x : embed(asg.pieces[t], asg.frames[t]).indices()) {
      if (g.contains(x)) throw std::logic_error("puzzle: frames share a square");
      g.insert(x);
    }
  }
  return g;
}

PuzzleAssignment random_assignment(const std::vector<Face>& frames, const std::vector<CIStructure>& catalogue,
                                   std::mt19937_64& rng) {
  if (catalogue.empty()) throw std::invalid_argument("random_assignment: empty catalogue");
  std::uniform_int_distribution<std::size_t> pick(0, catalogue.size() - 1);
  PuzzleAssignment asg;
  asg.frames = frames;
  for (std::size_t t = 0; t < frames.size(); ++t) asg.pieces.push_back(catalogue[pick(rng)]);
  return asg;
}

// ---- perturbation -----------------------------------------------------------

namespace {
constexpr Pattern kNone = 0xFF;
}

PerturbationScheme PerturbationScheme::canonical() {
  const auto& table = gaussoid_pattern_table();
  std::vector<Pattern> gs, bad;
  for (int p = 0; p < 64; ++p) (table[p] ? gs : bad).push_back(static_cast<Pattern>(p));
  const int c = static_cast<int>(bad.size() / gs.size());
  PerturbationScheme s;
  for (int t = 0; t < c; ++t) {
    std::array<Pattern, 64> m;
    m.fill(kNone);
    for (std::size_t i = 0; i < gs.size(); ++i) m[gs[i]] = bad[gs.size() * static_cast<std::size_t>(t) + i];
    s.maps_.push_back(m);
  }
  return s;
}

Pattern PerturbationScheme::apply(int t, Pattern g) const {
  if (t < 0 || t >= count()) throw std::out_of_range("perturbation index out of range");
  const Pattern img = maps_[t][g & 63];
  if (img == kNone) throw std::invalid_argument("perturbation applied to a non-gaussoid pattern");
  return img;
}

std::optional<Pattern> PerturbationScheme::invert(int t, Pattern image) const {
  if (t < 0 || t >= count()) throw std::out_of_range("perturbation index out of range");
  for (int p = 0; p < 64; ++p)
    if (maps_[t][p] == image) return static_cast<Pattern>(p);
  return std::nullopt;
}

bool PerturbationScheme::valid() const {
  const auto& table = gaussoid_pattern_table();
  std::array<bool, 64> hit{};
  for (const auto& m : maps_) {
    for (int p = 0; p < 64; ++p) {
      if (table[p] != (m[p] != kNone)) return false;
      if (m[p] == kNone) continue;
      if (table[m[p]] || hit[m[p]]) return false;
      hit[m[p]] = true;
    }
  }
  return true;
}

namespace {

void check_perturbation_frames(const std::vector<Face>& frames, const std::vector<int>& choice, int n,
                               const PerturbationScheme& scheme) {
  if (!scheme.valid()) throw std::invalid_argument("perturbation scheme is invalid");
  if (frames.size() != choice.size()) throw std::invalid_argument("perturb: one choice per frame required");
  for (const Face& f : frames)
    if (f.n != n || f.dim() != 3) throw std::invalid_argument("perturb: frames must be 3-faces of the n-cube");
  for (int c : choice)
    if (c < 0 || c >= scheme.count()) throw std::invalid_argument("perturb: choice out of range");
  if (!is_independent(QGraphParams::make(n, 3, 2, 2), frames))
    throw std::invalid_argument("perturb: frames are not independent in Q(n,3,2,2)");
}

}  // namespace

CIStructure perturb_non_gaussoid(const CIStructure& g, const std::vector<Face>& frames, const std::vector<int>& choice,
                                 const PerturbationScheme& scheme) {
  check_perturbation_frames(frames, choice, g.n(), scheme);
  if (!is_gaussoid(g)) throw std::invalid_argument("perturb: input is not a gaussoid");
  CIStructure h = g;
  for (std::size_t t = 0; t < frames.size(); ++t) {
    const Pattern img = scheme.apply(choice[t], cube_pattern(g, frames[t]));
    for (const Square& s : squares_of(frames[t])) h.erase(s);
    for (std::size_t x : embed(pattern_structure(img), frames[t]).indices()) h.insert(x);
  }
  return h;
}

std::optional<std::vector<CIStructure>> recover_minors(const CIStructure& h, const std::vector<Face>& frames,
                                                       const std::vector<int>& choice, const PerturbationScheme& scheme) {
  check_perturbation_frames(frames, choice, h.n(), scheme);
  std::vector<CIStructure> out;
  for (std::size_t t = 0; t < frames.size(); ++t) {
    const auto p = scheme.invert(choice[t], cube_pattern(h, frames[t]));
    if (!p) return std::nullopt;
    out.push_back(pattern_structure(*p));
  }
  return out;
}

// ---- residue construction -----------------------------------------------------

std::vector<Mask> residue_class(int n, int r, int k) {
  if (n < 3 || n > kMaxCIDim) throw std::invalid_argument("residue: n out of range");
  if (r < 2 || r >= n) throw std::invalid_argument("residue: r must satisfy 2 <= r < n");
  if (k < 0 || k >= n) throw std::invalid_argument("residue: k must satisfy 0 <= k < n");
  std::vector<Mask> out;
  for (Mask s = full_mask(r); s <= full_mask(n); ) {
    int sum = 0;
    for (Mask m = s; m; m &= m - 1) sum += std::countr_zero(m) + 1;
    if (sum % n == k) out.push_back(s);
    const Mask c = s & (~s + 1);
    const Mask nx = s + c;
    s = (((nx ^ s) >> 2) / c) | nx;
  }
  return out;
}

CIStructure residue_gaussoid(int n, int r, int k) {
  CIStructure a(n);
  for (Mask s : residue_class(n, r, k)) {
    const int i = std::countr_zero(s);
    const Mask t = s & (s - 1);
    const int j = std::countr_zero(t);
    a.insert(Square{i, j, t & (t - 1)});
  }
  return a;
}

int best_residue(int n, int r) {
  int best = 0;
  std::size_t best_size = 0;
  for (int k = 0; k < n; ++k) {
    const auto sz = residue_class(n, r, k).size();
    if (sz > best_size) {
      best = k;
      best_size = sz;
    }
  }
  return best;
}

// ---- bounds -----------------------------------------------------------------

BoundReport bound_report(int n) {
  if (n < 5) throw std::invalid_argument("bound_report needs n >= 5");
  if (n > 40) throw std::invalid_argument("bound_report: n too large");
  BoundReport r;
  r.n = n;
  const double scale = std::ldexp(1.0, n - 6);
  const double squares = static_cast<double>(binomial(n, 2)) * std::ldexp(1.0, n - 2);
  r.log2_lower = n * scale / 3.0;
  r.log2_total_subsets = squares;
  r.log2_upper = squares - 4.0 / 9.0 * n * (n - 1) * scale;
  if (n <= kBoundConstructionMaxN) {
    const auto is = independent_set(QGraphParams::make(n, 3, 3, 2));
    r.independent_set_size = is.faces.size();
    r.colors_used = is.colors_used;
    r.max_degree = is.max_degree;
    r.log2_constructed = static_cast<double>(is.faces.size()) * std::log2(11.0);
    r.meets_lower = *r.log2_constructed >= r.log2_lower;
  }
  return r;
}

}  // namespace gaussoid
