#include "gaussoid/cube.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace gaussoid {

Mask deposit_bits(Mask bits, Mask where) {
  Mask out = 0;
  for (Mask w = where; w; w &= w - 1) {
    if (bits & 1) out |= w & (~w + 1);
    bits >>= 1;
  }
  return out;
}

Mask extract_bits(Mask value, Mask where) {
  Mask out = 0;
  int pos = 0;
  for (Mask w = where; w; w &= w - 1, ++pos) {
    if (value & w & (~w + 1)) out |= Mask{1} << pos;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

int Face::dim() const { return std::popcount(star); }

Letter Face::letter(int pos) const {
  const Mask bit = Mask{1} << pos;
  if (star & bit) return Letter::Star;
  return (one & bit) ? Letter::One : Letter::Zero;
}

Face Face::opposite() const { return Face{n, star, full_mask(n) & ~star & ~one}; }

Face make_face(int n, Mask star, Mask one) {
  if (n < 0 || n > kMaxFaceDim) throw std::invalid_argument("face dimension out of range");
  if ((star & one) != 0) throw std::invalid_argument("face: STAR and ONE positions overlap");
  if (((star | one) & ~full_mask(n)) != 0) throw std::invalid_argument("face: position outside ground set");
  return Face{n, star, one};
}

Face Square::face(int n) const {
  return make_face(n, (Mask{1} << i) | (Mask{1} << j), K);
}

Square make_square(int i, int j, Mask K) {
  if (i == j) throw std::invalid_argument("square: i and j must differ");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= kMaxFaceDim) throw std::invalid_argument("square: element out of range");
  if (K & ((Mask{1} << i) | (Mask{1} << j))) throw std::invalid_argument("square: K meets ij");
  return Square{i, j, K};
}

Square square_of_face(const Face& f) {
  if (f.dim() != 2) throw std::invalid_argument("face is not a square");
  const int i = std::countr_zero(f.star);
  const int j = std::countr_zero(f.star & (f.star - 1));
  return Square{i, j, f.one};
}

Face face_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty face string");
  if (s.size() > static_cast<std::size_t>(kMaxFaceDim)) throw std::invalid_argument("face string too long");
  Face f;
  f.n = static_cast<int>(s.size());
  for (std::size_t p = 0; p < s.size(); ++p) {
    switch (s[p]) {
      case '0': break;
      case '1': f.one |= Mask{1} << p; break;
      case '*': f.star |= Mask{1} << p; break;
      default: throw std::invalid_argument("invalid character in face string: '" + std::string(1, s[p]) + "'");
    }
  }
  return f;
}

std::string face_format(const Face& f) {
  std::string s(static_cast<std::size_t>(f.n), '0');
  for (int p = 0; p < f.n; ++p) {
    switch (f.letter(p)) {
      case Letter::Zero: break;
      case Letter::One: s[p] = '1'; break;
      case Letter::Star: s[p] = '*'; break;
    }
  }
  return s;
}

namespace {

Mask parse_element_list(std::string_view s, int n) {
  Mask m = 0;
  while (!s.empty()) {
    const auto comma = s.find(',');
    std::string_view tok = s.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("invalid element '" + std::string(tok) + "'");
    if (v < 1 || v > n) throw std::invalid_argument("element " + std::to_string(v) + " outside [n]");
    const Mask bit = Mask{1} << (v - 1);
    if (m & bit) throw std::invalid_argument("repeated element " + std::to_string(v));
    m |= bit;
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return m;
}

std::string format_element_list(Mask m) {
  std::string out;
  for (; m; m &= m - 1) {
    if (!out.empty()) out += ',';
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out;
}

}  // namespace

Face face_parse_sets(std::string_view s, int n) {
  const auto bar = s.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("set notation needs '|'");
  const Mask star = parse_element_list(s.substr(0, bar), n);
  const Mask one = parse_element_list(s.substr(bar + 1), n);
  return make_face(n, star, one);
}

std::string face_format_sets(const Face& f) {
  return format_element_list(f.star) + "|" + format_element_list(f.one);
}

std::string square_format(const Square& s) {
  return std::to_string(s.i + 1) + "," + std::to_string(s.j + 1) + "|" + format_element_list(s.K);
}

Face parse_face_literal(std::string_view s, int n) {
  if (s.find('|') != std::string_view::npos) return face_parse_sets(s, n);
  Face f = face_parse(s);
  if (f.n != n) throw std::invalid_argument("face '" + std::string(s) + "' has wrong length for n=" + std::to_string(n));
  return f;
}

std::uint64_t face_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial(n, k) << (n - k);
}

namespace {

// Number of letter strings of length r with exactly s stars.
std::uint64_t completions(int r, int s) {
  if (s < 0 || s > r) return 0;
  return binomial(r, s) << (r - s);
}

void enumerate_rec(int n, int pos, int stars_left, Face cur, std::vector<Face>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  const int rest = n - pos - 1;
  if (stars_left <= rest) {
    enumerate_rec(n, pos + 1, stars_left, cur, out);
    Face one = cur;
    one.one |= Mask{1} << pos;
    enumerate_rec(n, pos + 1, stars_left, one, out);
  }
  if (stars_left > 0) {
    Face st = cur;
    st.star |= Mask{1} << pos;
    enumerate_rec(n, pos + 1, stars_left - 1, st, out);
  }
}

}  // namespace

std::vector<Face> enumerate_faces(int n, int k) {
  if (n < 0 || n > kMaxFaceDim) throw std::invalid_argument("dimension out of range");
  if (k < 0 || k > n) throw std::invalid_argument("face dimension k must satisfy 0 <= k <= n");
  std::vector<Face> out;
  out.reserve(face_count(n, k));
  enumerate_rec(n, 0, k, Face{n, 0, 0}, out);
  return out;
}

std::uint64_t face_rank(const Face& f) {
  std::uint64_t rank = 0;
  int stars = f.dim();
  for (int p = 0; p < f.n; ++p) {
    const int rest = f.n - p - 1;
    const Letter l = f.letter(p);
    if (l == Letter::One || l == Letter::Star) rank += completions(rest, stars);
    if (l == Letter::Star) rank += completions(rest, stars);
    if (l == Letter::Star) --stars;
  }
  return rank;
}

Face face_unrank(int n, int k, std::uint64_t rank) {
  if (rank >= face_count(n, k)) throw std::out_of_range("face rank out of range");
  Face f{n, 0, 0};
  int stars = k;
  for (int p = 0; p < n; ++p) {
    const int rest = n - p - 1;
    const std::uint64_t fixed = completions(rest, stars);
    if (rank < fixed) continue;
    rank -= fixed;
    if (rank < fixed) {
      f.one |= Mask{1} << p;
      continue;
    }
    rank -= fixed;
    f.star |= Mask{1} << p;
    --stars;
  }
  return f;
}

namespace {
void require_same_n(const Face& a, const Face& b) {
  if (a.n != b.n) throw std::invalid_argument("faces live in cubes of different dimension");
}
}  // namespace

bool contains(const Face& outer, const Face& inner) {
  require_same_n(outer, inner);
  if ((inner.star & ~outer.star) != 0) return false;
  return ((outer.one ^ inner.one) & ~outer.star) == 0;
}

std::optional<Face> intersect(const Face& a, const Face& b) {
  require_same_n(a, b);
  const Mask fixed_both = ~a.star & ~b.star & full_mask(a.n);
  if (((a.one ^ b.one) & fixed_both) != 0) return std::nullopt;
  return Face{a.n, a.star & b.star, (a.one & ~a.star) | (b.one & ~b.star)};
}

Face project(const Face& frame, const Face& f) {
  if (!contains(frame, f)) throw std::invalid_argument("face " + face_format(f) + " not contained in frame " + face_format(frame));
  return Face{frame.dim(), extract_bits(f.star, frame.star), extract_bits(f.one, frame.star)};
}

Face unproject(const Face& frame, const Face& local) {
  if (local.n != frame.dim()) throw std::invalid_argument("local face dimension does not match frame");
  return Face{frame.n, deposit_bits(local.star, frame.star), deposit_bits(local.one, frame.star) | frame.one};
}

std::vector<Square> squares_of(const Face& f) {
  std::vector<Square> out;
  if (f.dim() < 2) return out;
  for (Mask a = f.star; a; a &= a - 1) {
    const int i = std::countr_zero(a);
    for (Mask b = a & (a - 1); b; b &= b - 1) {
      const int j = std::countr_zero(b);
      const Mask free = f.star & ~(Mask{1} << i) & ~(Mask{1} << j);
      // Ascending submasks of `free` give ascending K.
      Mask sub = 0;
      do {
        out.push_back(Square{i, j, f.one | sub});
        sub = (sub - free) & free;
      } while (sub != 0);
    }
  }
  return out;
}

std::vector<Face> cofaces_of_square(const Square& s, int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("coface dimension must satisfy 2 <= k <= n");
  const Mask ij = (Mask{1} << s.i) | (Mask{1} << s.j);
  const Mask others = full_mask(n) & ~ij;
  std::vector<Face> out;
  for (Mask extra = 0;; extra = (extra - others) & others) {
    if (std::popcount(extra) == k - 2) out.push_back(Face{n, ij | extra, s.K & ~extra});
    if (extra == others) break;
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return face_rank(a) < face_rank(b); });
  return out;
}

std::size_t square_count(int n) {
  if (n < 2) return 0;
  return static_cast<std::size_t>(binomial(n, 2)) << (n - 2);
}

namespace {
std::size_t pair_rank(int n, int i, int j) {
  // Pairs (a, b), a < b, in lexicographic order.
  const std::size_t before = static_cast<std::size_t>(i) * (2 * n - i - 1) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}
}  // namespace

std::size_t square_index(int n, const Square& s) {
  const Mask rest = full_mask(n) & ~(Mask{1} << s.i) & ~(Mask{1} << s.j);
  return (pair_rank(n, s.i, s.j) << (n - 2)) + extract_bits(s.K, rest);
}

Square square_at(int n, std::size_t index) {
  if (index >= square_count(n)) throw std::out_of_range("square index out of range");
  std::size_t pr = index >> (n - 2);
  const Mask local = static_cast<Mask>(index & ((std::size_t{1} << (n - 2)) - 1));
  int i = 0;
  while (pr >= static_cast<std::size_t>(n - 1 - i)) {
    pr -= static_cast<std::size_t>(n - 1 - i);
    ++i;
  }
  const int j = i + 1 + static_cast<int>(pr);
  const Mask rest = full_mask(n) & ~(Mask{1} << i) & ~(Mask{1} << j);
  return Square{i, j, deposit_bits(local, rest)};
}

}  // namespace gaussoid
