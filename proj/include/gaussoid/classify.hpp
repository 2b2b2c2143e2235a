#ifndef GAUSSOID_CLASSIFY_HPP_
#define GAUSSOID_CLASSIFY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gaussoid/ci.hpp"

namespace gaussoid {

// S_3 symmetry classes of the eleven 3-gaussoids.
//   E  empty            L  {(ij|)}          U  {(ij|k)}
//   B  a belt           F  all six squares
enum class MinorClass : std::uint8_t { E = 0, L = 1, U = 2, B = 3, F = 4 };

inline constexpr std::array<MinorClass, 5> kAllClasses = {MinorClass::E, MinorClass::L, MinorClass::U, MinorClass::B,
                                                          MinorClass::F};

char class_letter(MinorClass c);
MinorClass class_from_letter(char c);

/// A subset of {E,L,U,B,F}; bit t is kAllClasses[t].
class ClassSpec {
 public:
  constexpr ClassSpec() = default;
  constexpr explicit ClassSpec(std::uint8_t bits) : bits_(bits & 31u) {}

  static ClassSpec parse(std::string_view letters);
  static constexpr ClassSpec all() { return ClassSpec(31); }

  bool allows(MinorClass c) const { return bits_ >> static_cast<int>(c) & 1; }
  ClassSpec with(MinorClass c) const { return ClassSpec(static_cast<std::uint8_t>(bits_ | 1u << static_cast<int>(c))); }
  bool subset_of(ClassSpec o) const { return (bits_ & ~o.bits_) == 0; }
  ClassSpec dual() const;  // swaps L and U

  std::uint8_t bits() const { return bits_; }
  std::string str() const;  // sorted in E,L,U,B,F order; "" for the empty spec

  friend bool operator==(ClassSpec, ClassSpec) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Letter of a 3-gaussoid pattern; nullopt for the 53 non-gaussoid patterns.
std::optional<MinorClass> pattern_class(Pattern p);

MinorClass minor_class(const CIStructure& a3);

struct ClassProfile {
  std::array<std::uint64_t, 5> counts{};
  std::uint64_t operator[](MinorClass c) const { return counts[static_cast<int>(c)]; }
  // The smallest spec containing every occurring letter.
  ClassSpec support() const;
};

struct ProfileResult {
  std::optional<ClassProfile> profile;
  std::optional<Face> bad_frame;  // first non-gaussoid 3-face, when profile is empty
};

ProfileResult class_profile(const CIStructure& a);

bool in_class(const CIStructure& a, ClassSpec spec);

bool is_ascending(const CIStructure& a);   // (ij|L) => (ij|kL)
bool is_descending(const CIStructure& a);  // (ij|kL) => (ij|L)

}  // namespace gaussoid

#endif  // GAUSSOID_CLASSIFY_HPP_
