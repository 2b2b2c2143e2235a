#include "gaussoid/classify.hpp"

#include <bit>
#include <stdexcept>

namespace gaussoid {

char class_letter(MinorClass c) { return "ELUBF"[static_cast<int>(c)]; }

MinorClass class_from_letter(char c) {
  switch (c) {
    case 'E': return MinorClass::E;
    case 'L': return MinorClass::L;
    case 'U': return MinorClass::U;
    case 'B': return MinorClass::B;
    case 'F': return MinorClass::F;
    default: throw std::invalid_argument(std::string("unknown class letter '") + c + "'");
  }
}

ClassSpec ClassSpec::parse(std::string_view letters) {
  ClassSpec s;
  for (char c : letters) {
    const MinorClass m = class_from_letter(c);
    if (s.allows(m)) throw std::invalid_argument(std::string("repeated class letter '") + c + "'");
    s = s.with(m);
  }
  return s;
}

ClassSpec ClassSpec::dual() const {
  std::uint8_t b = bits_ & 0b11001;
  if (allows(MinorClass::L)) b |= 1u << static_cast<int>(MinorClass::U);
  if (allows(MinorClass::U)) b |= 1u << static_cast<int>(MinorClass::L);
  return ClassSpec(b);
}

std::string ClassSpec::str() const {
  std::string s;
  for (MinorClass c : kAllClasses)
    if (allows(c)) s += class_letter(c);
  return s;
}

std::optional<MinorClass> pattern_class(Pattern p) {
  if (!gaussoid_pattern_table()[p & 63]) return std::nullopt;
  switch (std::popcount(static_cast<unsigned>(p))) {
    case 0: return MinorClass::E;
    case 4: return MinorClass::B;
    case 6: return MinorClass::F;
    case 1:
      // Even bits are (xy|) with empty local conditioning set.
      return (p & 0b010101) ? MinorClass::L : MinorClass::U;
    default: throw std::logic_error("3-gaussoid of unexpected cardinality");
  }
}

MinorClass minor_class(const CIStructure& a3) {
  if (a3.n() != 3) throw std::invalid_argument("minor_class expects a 3-dimensional structure");
  const auto c = pattern_class(structure_pattern(a3));
  if (!c) throw std::invalid_argument("minor_class: input is not a 3-gaussoid");
  return *c;
}

ClassSpec ClassProfile::support() const {
  ClassSpec s;
  for (MinorClass c : kAllClasses)
    if ((*this)[c]) s = s.with(c);
  return s;
}

ProfileResult class_profile(const CIStructure& a) {
  ProfileResult r;
  ClassProfile prof;
  if (a.n() >= 3) {
    for (const Face& cube : enumerate_faces(a.n(), 3)) {
      const auto c = pattern_class(cube_pattern(a, cube));
      if (!c) {
        r.bad_frame = cube;
        return r;
      }
      ++prof.counts[static_cast<int>(*c)];
    }
  }
  r.profile = prof;
  return r;
}

bool in_class(const CIStructure& a, ClassSpec spec) {
  if (a.n() < 3) return true;
  for (const Face& cube : enumerate_faces(a.n(), 3)) {
    const auto c = pattern_class(cube_pattern(a, cube));
    if (!c || !spec.allows(*c)) return false;
  }
  return true;
}

namespace {

template <bool Ascending>
bool monotone(const CIStructure& a) {
  const int n = a.n();
  for (const Square& s : a.squares()) {
    const Mask ij = (Mask{1} << s.i) | (Mask{1} << s.j);
    for (int k = 0; k < n; ++k) {
      const Mask bk = Mask{1} << k;
      if (ij & bk) continue;
      if constexpr (Ascending) {
        if (!(s.K & bk) && !a.contains(Square{s.i, s.j, s.K | bk})) return false;
      } else {
        if ((s.K & bk) && !a.contains(Square{s.i, s.j, s.K & ~bk})) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_ascending(const CIStructure& a) { return monotone<true>(a); }
bool is_descending(const CIStructure& a) { return monotone<false>(a); }

}  // namespace gaussoid
