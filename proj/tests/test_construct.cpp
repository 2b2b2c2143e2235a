#include <doctest.h>

#include <cmath>
#include <set>

#include "gaussoid/classify.hpp"
#include "gaussoid/construct.hpp"
#include "gaussoid/enumerate.hpp"
#include "support.hpp"

using namespace gaussoid;
using testing::structure_of;

namespace {

std::vector<CIStructure> three_gaussoids() {
  std::vector<CIStructure> out;
  for (Pattern p : gaussoid_patterns()) out.push_back(pattern_structure(p));
  return out;
}

}  // namespace

TEST_CASE("puzzle examples") {
  PuzzleAssignment none;
  CHECK(puzzle_lift(none, 6) == CIStructure(6));

  const CIStructure belt = structure_of(3, {"1,2|", "1,2|3", "1,3|", "1,3|2"});
  PuzzleAssignment one{{face_parse("***01")}, {belt}};
  const CIStructure g = puzzle_lift(one, 5);
  CHECK(g == embed(belt, face_parse("***01")));
  CHECK(is_gaussoid(g));

  // Adjacent frames are rejected, as are non-gaussoid pieces.
  PuzzleAssignment clash{{face_parse("***00"), face_parse("***01")}, {belt, belt}};
  CHECK_THROWS(puzzle_lift(clash, 5));
  PuzzleAssignment bad{{face_parse("***01")}, {structure_of(3, {"1,2|", "1,3|2"})}};
  CHECK_THROWS(puzzle_lift(bad, 5));
  PuzzleAssignment wrong_dim{{face_parse("**01")}, {CIStructure(2)}};
  CHECK_THROWS(puzzle_lift(wrong_dim, 4));
}

TEST_CASE("puzzle lifts are gaussoids and injective") {
  std::mt19937_64 rng(2718);
  const auto catalogue = three_gaussoids();
  for (int n = 5; n <= 10; ++n) {
    const auto frames = independent_set(QGraphParams::make(n, 3, 3, 2)).faces;
    std::set<std::vector<std::size_t>> outputs;
    std::set<std::vector<std::size_t>> assignments;
    const int trials = n <= 8 ? 200 : 30;
    for (int t = 0; t < trials; ++t) {
      const auto asg = random_assignment(frames, catalogue, rng);
      const CIStructure g = puzzle_lift(asg, n);
      REQUIRE(is_gaussoid_axioms(g));
      REQUIRE(is_gaussoid_belts(g));
      // Pieces are recoverable as the minors at their frames.
      for (std::size_t f = 0; f < frames.size(); ++f) REQUIRE(minor(g, frames[f]) == asg.pieces[f]);
      std::vector<std::size_t> key;
      for (const auto& p : asg.pieces) key.push_back(structure_pattern(p));
      assignments.insert(key);
      outputs.insert(g.indices());
    }
    CHECK(outputs.size() == assignments.size());
  }
}

TEST_CASE("4-dimensional pieces") {
  SearchOptions so;
  so.unsafe = true;
  const auto cat4 = enumerate_class(4, ClassSpec::all(), 0, so);
  REQUIRE(cat4.size() == 679);
  std::mt19937_64 rng(5);
  const auto frames = independent_set(QGraphParams::make(8, 4, 3, 2)).faces;
  REQUIRE(!frames.empty());
  for (int t = 0; t < 20; ++t) {
    const CIStructure g = puzzle_lift(random_assignment(frames, cat4, rng), 8);
    REQUIRE(is_gaussoid_axioms(g));
  }
}

TEST_CASE("count lower bound from independent sets at n = 4") {
  // Q(4,3,3,2) is complete: one frame, 11 <= 679.
  const auto f = independent_set(QGraphParams::make(4, 3, 3, 2)).faces;
  CHECK(std::pow(11.0, static_cast<double>(f.size())) <= 679.0);
}

TEST_CASE("canonical perturbation scheme") {
  const auto s = PerturbationScheme::canonical();
  CHECK(s.count() == 4);
  CHECK(s.valid());
  std::set<Pattern> images;
  const auto& gs = gaussoid_patterns();
  std::vector<Pattern> bad;
  for (int p = 0; p < 64; ++p)
    if (!gaussoid_pattern_table()[p]) bad.push_back(static_cast<Pattern>(p));
  REQUIRE(bad.size() == 53);
  for (int t = 0; t < 4; ++t)
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const Pattern img = s.apply(t, gs[i]);
      CHECK(img == bad[11 * static_cast<std::size_t>(t) + i]);
      CHECK(s.invert(t, img) == gs[i]);
      images.insert(img);
    }
  CHECK(images.size() == 44);
  CHECK_THROWS(s.apply(0, 0b000011));
  CHECK_THROWS(s.apply(4, 0));
  CHECK_FALSE(s.invert(0, 0));
}

TEST_CASE("perturbation examples") {
  const auto scheme = PerturbationScheme::canonical();
  const Face frame = face_parse("**0*10");
  for (int c = 0; c < 4; ++c) {
    const CIStructure h = perturb_non_gaussoid(CIStructure(6), {frame}, {c}, scheme);
    CHECK_FALSE(is_gaussoid(h));
    for (const Face& cube : enumerate_faces(6, 3)) {
      const bool ok = gaussoid_pattern_table()[cube_pattern(h, cube)];
      CHECK(ok == (cube != frame));
    }
  }

  // Two independent frames, 16 choices, 16 distinct results.
  const auto frames = independent_set(QGraphParams::make(6, 3, 2, 2)).faces;
  REQUIRE(frames.size() >= 2);
  const std::vector<Face> two{frames[0], frames[1]};
  std::set<std::vector<std::size_t>> seen;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) seen.insert(perturb_non_gaussoid(CIStructure(6), two, {a, b}, scheme).indices());
  CHECK(seen.size() == 16);

  CHECK_THROWS(perturb_non_gaussoid(CIStructure(6), {face_parse("***000"), face_parse("**0*00")}, {0, 0}, scheme));
  CHECK_THROWS(perturb_non_gaussoid(structure_of(6, {"1,2|", "1,3|2"}), {frame}, {0}, scheme));
  CHECK_THROWS(perturb_non_gaussoid(CIStructure(6), {frame}, {4}, scheme));
  CHECK_THROWS(perturb_non_gaussoid(CIStructure(6), {frame}, {}, scheme));
}

TEST_CASE("perturbed structures are never gaussoids and minors are recoverable") {
  std::mt19937_64 rng(161);
  const auto scheme = PerturbationScheme::canonical();
  std::uniform_int_distribution<int> pick(0, 3);
  for (int n = 4; n <= 8; ++n) {
    const auto frames = independent_set(QGraphParams::make(n, 3, 2, 2)).faces;
    for (int t = 0; t < 60; ++t) {
      CIStructure g = puzzle_lift(random_assignment(independent_set(QGraphParams::make(n, 3, 3, 2)).faces,
                                                    three_gaussoids(), rng),
                                  n);
      if (t & 1) g = testing::random_gaussoid(n, rng);
      std::vector<int> choice;
      for (std::size_t f = 0; f < frames.size(); ++f) choice.push_back(pick(rng));
      const CIStructure h = perturb_non_gaussoid(g, frames, choice, scheme);
      REQUIRE_FALSE(is_gaussoid(h));
      REQUIRE_FALSE(is_gaussoid_axioms(h));
      for (const Face& f : frames) REQUIRE_FALSE(gaussoid_pattern_table()[cube_pattern(h, f)]);
      const auto rec = recover_minors(h, frames, choice, scheme);
      REQUIRE(rec);
      for (std::size_t f = 0; f < frames.size(); ++f) REQUIRE((*rec)[f] == minor(g, frames[f]));
      // Outside the frames nothing changed.
      for (std::size_t x = 0; x < h.universe(); ++x) {
        const Face sq = square_at(n, x).face(n);
        bool inside = false;
        for (const Face& f : frames) inside = inside || contains(f, sq);
        if (!inside) REQUIRE(h.contains(x) == g.contains(x));
      }
    }
  }
}

TEST_CASE("residue classes") {
  // Pair sums mod 5 hit each residue twice.
  for (int k = 0; k < 5; ++k) CHECK(residue_class(5, 2, k).size() == 2);
  CHECK_THROWS(residue_class(5, 1, 0));
  CHECK_THROWS(residue_class(5, 5, 0));
  CHECK_THROWS(residue_class(5, 2, 5));
  for (int n = 4; n <= 10; ++n)
    for (int r = 2; r < n; ++r) {
      std::size_t total = 0;
      for (int k = 0; k < n; ++k) total += residue_class(n, r, k).size();
      REQUIRE(total == binomial(n, r));
      const int b = best_residue(n, r);
      REQUIRE(residue_class(n, r, b).size() * static_cast<std::size_t>(n) >= binomial(n, r));
      for (int k = 0; k < b; ++k) REQUIRE(residue_class(n, r, k).size() < residue_class(n, r, b).size());
    }
}

TEST_CASE("residue gaussoids and their subsets") {
  std::mt19937_64 rng(1001);
  for (int n = 4; n <= 8; ++n)
    for (int r = 2; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        const CIStructure a = residue_gaussoid(n, r, k);
        REQUIRE(a.size() == residue_class(n, r, k).size());
        REQUIRE(is_gaussoid(a));
        // No two members share a 3-cube.
        for (const Face& cube : enumerate_faces(n, 3))
          REQUIRE(std::popcount(static_cast<unsigned>(cube_pattern(a, cube))) <= 1);
        if (n <= 7 && r == n / 2) {
          for (int t = 0; t < 50; ++t) {
            CIStructure s(n);
            for (std::size_t x : a.indices())
              if (rng() & 1) s.insert(x);
            REQUIRE(is_gaussoid_axioms(s));
          }
        }
      }
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(5);
  CHECK(r.log2_total_subsets == 80);
  CHECK(std::abs(r.log2_lower - 5.0 / 6.0) < 1e-12);
  CHECK(std::abs(r.log2_upper - (80 - 4.0 / 9.0 * 20 / 2)) < 1e-12);
  const double actual = std::log2(60212776.0);
  CHECK(r.log2_lower < actual);
  CHECK(actual < r.log2_upper);
  REQUIRE(r.log2_constructed);
  CHECK(*r.log2_constructed == doctest::Approx(static_cast<double>(r.independent_set_size) * std::log2(11.0)));
  CHECK(r.meets_lower == (*r.log2_constructed >= r.log2_lower));
  CHECK_THROWS(bound_report(4));
  CHECK_FALSE(bound_report(20).log2_constructed);
  for (int n = 5; n <= 30; ++n) {
    if (n >= 10 && n <= kBoundConstructionMaxN) continue;  // construction covered elsewhere
    const auto b = bound_report(n);
    REQUIRE(b.log2_lower < b.log2_upper);
    REQUIRE(b.log2_upper < b.log2_total_subsets);
  }
}
