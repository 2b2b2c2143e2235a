#ifndef GAUSSOID_CUBE_HPP_
#define GAUSSOID_CUBE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaussoid {

// Bit p of a mask stands for ground-set element p+1.
using Mask = std::uint32_t;

inline constexpr int kMaxFaceDim = 31;

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Scatters the low bits of `bits` onto the set positions of `where` (pdep).
Mask deposit_bits(Mask bits, Mask where);
// Gathers the bits of `value` at the set positions of `where` into the low bits (pext).
Mask extract_bits(Mask value, Mask where);

std::uint64_t binomial(int n, int k);

enum class Letter : std::uint8_t { Zero, One, Star };

/// A face of the n-cube, stored as STAR mask (I) and ONE mask (K).
/// Invariant: star & one == 0 and both lie inside [n].
struct Face {
  int n = 0;
  Mask star = 0;
  Mask one = 0;

  int dim() const;
  Letter letter(int pos) const;
  Face opposite() const;  // (I | [n] \ IK)

  friend bool operator==(const Face&, const Face&) = default;
};

// Validating constructor.
Face make_face(int n, Mask star, Mask one);

/// Square (ij|K), 0-based, i < j, K disjoint from ij.
struct Square {
  int i = 0;
  int j = 1;
  Mask K = 0;

  Face face(int n) const;
  friend bool operator==(const Square&, const Square&) = default;
};

Square make_square(int i, int j, Mask K);
Square square_of_face(const Face& f);

// String notation over {0,1,*}.
Face face_parse(std::string_view s);
std::string face_format(const Face& f);

// Set notation "1,3|2,4" (1-based).
Face face_parse_sets(std::string_view s, int n);
std::string face_format_sets(const Face& f);
std::string square_format(const Square& s);  // "1,3|2,4"

/// Accepts either string notation or set notation (the latter needs n).
Face parse_face_literal(std::string_view s, int n);

// Number of k-faces of the n-cube: C(n,k) 2^(n-k).
std::uint64_t face_count(int n, int k);

/// All k-faces in lexicographic order of their letter strings (0 < 1 < *).
std::vector<Face> enumerate_faces(int n, int k);

// Position of f inside enumerate_faces(f.n, f.dim()) and its inverse.
std::uint64_t face_rank(const Face& f);
Face face_unrank(int n, int k, std::uint64_t rank);

bool contains(const Face& outer, const Face& inner);
std::optional<Face> intersect(const Face& a, const Face& b);

// Lattice isomorphism between faces inside `frame` and the faces of the
// |I_frame|-cube (coordinates outside I_frame are deleted).
Face project(const Face& frame, const Face& f);
Face unproject(const Face& frame, const Face& local);

std::vector<Square> squares_of(const Face& f);
std::vector<Face> cofaces_of_square(const Square& s, int n, int k);

// Canonical square numbering: lexicographic in (i, j, K), where K is compared
// by its bitmask value.  Stable contract for CNF variables and bitmaps.
std::size_t square_count(int n);
std::size_t square_index(int n, const Square& s);
Square square_at(int n, std::size_t index);

}  // namespace gaussoid

#endif  // GAUSSOID_CUBE_HPP_
