#include <doctest.h>

#include <set>

#include "gaussoid/classify.hpp"
#include "gaussoid/enumerate.hpp"
#include "gaussoid/graphs.hpp"
#include "support.hpp"

using namespace gaussoid;

namespace {

std::vector<ClassSpec> all_specs() {
  std::vector<ClassSpec> out;
  for (int b = 0; b < 32; ++b) out.emplace_back(static_cast<std::uint8_t>(b));
  return out;
}

std::uint64_t count(int n, const char* spec, int workers = 0) {
  SearchOptions o;
  o.workers = workers;
  return count_class(n, ClassSpec::parse(spec), o).count.get_ui();
}

// Filter over all 64 subsets of A_3, straight from the letters.
std::uint64_t census3(ClassSpec spec) {
  std::uint64_t c = 0;
  for (int p = 0; p < 64; ++p) {
    const CIStructure a = pattern_structure(static_cast<Pattern>(p));
    if (is_gaussoid_axioms(a) && spec.allows(minor_class(a))) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("cube pattern table") {
  const CubePatternTable all(ClassSpec::all());
  CHECK(all.allowed().size() == 11);
  for (ClassSpec s : all_specs()) {
    const CubePatternTable t(s);
    for (Pattern p : t.allowed()) REQUIRE(all.allows(p));
    // Partial feasibility is the exact projection of the allowed set.
    for (int assigned = 0; assigned < 64; ++assigned)
      for (int values = assigned;; values = (values - 1) & assigned) {
        bool ext = false;
        Pattern in = 63, out = 63;
        for (Pattern p : t.allowed())
          if ((p & assigned) == values) {
            ext = true;
            in &= p;
            out &= static_cast<Pattern>(~p & 63);
          }
        const auto& e = t.partial(static_cast<Pattern>(assigned), static_cast<Pattern>(values));
        REQUIRE(e.extendable == ext);
        if (ext) {
          REQUIRE(e.forced_in == (in & ~assigned & 63));
          REQUIRE(e.forced_out == (out & ~assigned & 63));
        }
        if (values == 0) break;
      }
  }
}

TEST_CASE("class counts, spot values") {
  CHECK(count(3, "ELUBF") == 11);
  CHECK(count(4, "ELUBF") == 679);
  CHECK(count(4, "LUB") == 111);
  CHECK(count(5, "LUB") == 0);
  CHECK(count(5, "EB") == 16);
  CHECK(count(4, "LUBF") == 142);
  CHECK(count(3, "") == 0);
  CHECK(count(6, "E") == 1);
  CHECK(count(6, "F") == 1);
  CHECK_THROWS_AS(count(2, "E"), std::invalid_argument);
}

TEST_CASE("oracle equivalence at n = 3 and n = 4") {
  for (ClassSpec s : all_specs()) {
    const auto c = count_class(3, s).count.get_ui();
    REQUIRE(c == brute_force_count(3, s));
    REQUIRE(c == census3(s));
    REQUIRE(c == count_class_serial(3, s).count.get_ui());
  }
  for (const char* s : {"ELUBF", "LUBF", "EUBF", "EB", "BF", "LU", "ELU"})
    REQUIRE(count(4, s) == brute_force_count(4, ClassSpec::parse(s)));
  CHECK(brute_force_count(3, ClassSpec::parse("BF")) == 4);
  CHECK_THROWS(brute_force_count(5, ClassSpec::all()));
}

TEST_CASE("duality symmetry of counts") {
  for (ClassSpec s : all_specs())
    for (int n = 3; n <= 5; ++n) {
      if (s.allows(MinorClass::E) && s.allows(MinorClass::L) && s.allows(MinorClass::U)) continue;
      REQUIRE(count_class(n, s).count == count_class(n, s.dual()).count);
    }
}

TEST_CASE("graph-side counts") {
  for (int n = 3; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (const char* letters : {"EUBF", "EUB", "UBF", "EUF", "EU", "EBF", "BF", "EB"}) {
      // Without L every member is ascending, hence a separation gaussoid.
      const ClassSpec s = ClassSpec::parse(letters);
      std::uint64_t c = 0;
      for (std::uint64_t code = 0; code < total; ++code) c += in_class(separation_gaussoid(Graph::from_code(n, code)), s);
      REQUIRE(c == count_class(n, s).count.get_ui());
    }
  }
}

TEST_CASE("determinism across workers and prefix depths") {
  for (const char* s : {"LUBF", "EUB", "ELUBF"}) {
    const int n = std::string(s) == "ELUBF" ? 4 : 5;
    const ClassSpec spec = ClassSpec::parse(s);
    const auto ref = count_class_serial(n, spec).count;
    for (int w : {1, 2, 8})
      for (int d : {0, 1, 5, 16, 1000}) {
        SearchOptions o;
        o.workers = w;
        o.prefix_depth = d;
        REQUIRE(count_class(n, spec, o).count == ref);
      }
  }
  SearchOptions a, b;
  a.workers = 1;
  b.workers = 8;
  CHECK(enumerate_class(4, ClassSpec::parse("LUBF"), 0, a) == enumerate_class(4, ClassSpec::parse("LUBF"), 0, b));
}

TEST_CASE("enumeration") {
  const auto g3 = enumerate_class(3, ClassSpec::all());
  REQUIRE(g3.size() == 11);
  std::vector<CIStructure> census;
  for (int p = 0; p < 64; ++p) {
    const CIStructure a = pattern_structure(static_cast<Pattern>(p));
    if (is_gaussoid_axioms(a)) census.push_back(a);
  }
  std::sort(census.begin(), census.end(), bitmap_less);
  CHECK(g3 == census);

  const auto ef = enumerate_class(3, ClassSpec::parse("EF"));
  REQUIRE(ef.size() == 2);
  CHECK(ef[0] == CIStructure(3));
  CHECK(ef[1] == CIStructure::full(3));

  const auto luf = enumerate_class(5, ClassSpec::parse("LUF"));
  REQUIRE(luf.size() == 1);
  CHECK(luf[0] == CIStructure::full(5));

  for (const char* s : {"ELUBF", "LUBF", "EB", "BF", "UB"}) {
    const ClassSpec spec = ClassSpec::parse(s);
    const auto all = enumerate_class(4, spec);
    REQUIRE(all.size() == count_class(4, spec).count.get_ui());
    REQUIRE(std::is_sorted(all.begin(), all.end(), bitmap_less));
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& a : all) REQUIRE(in_class(a, spec));
    const auto head = enumerate_class(4, spec, 5);
    REQUIRE(head.size() == std::min<std::size_t>(5, all.size()));
    REQUIRE(std::equal(head.begin(), head.end(), all.begin()));
  }
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(check_resource_guard(6, ClassSpec::all(), GuardedOp::Count, false), ResourceGuardError);
  CHECK_NOTHROW(check_resource_guard(6, ClassSpec::all(), GuardedOp::Count, true));
  CHECK_NOTHROW(check_resource_guard(7, ClassSpec::parse("LUBF"), GuardedOp::Count, false));
  CHECK_THROWS_AS(check_resource_guard(8, ClassSpec::parse("LUBF"), GuardedOp::Count, false), ResourceGuardError);
  CHECK_THROWS_AS(check_resource_guard(5, ClassSpec::parse("ELU"), GuardedOp::Enumerate, false), ResourceGuardError);
  CHECK_NOTHROW(check_resource_guard(6, ClassSpec::parse("EB"), GuardedOp::Enumerate, false));
  CHECK_THROWS_AS(count_class(6, ClassSpec::parse("ELU")), ResourceGuardError);
}

TEST_CASE("search order") {
  for (int n = 3; n <= 6; ++n) {
    const auto o = search_order(n);
    REQUIRE(o.size() == square_count(n));
    std::vector<std::uint32_t> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t x = 0; x < sorted.size(); ++x) REQUIRE(sorted[x] == x);
    auto top = [&](std::uint32_t x) {
      const Square s = square_at(n, x);
      return std::max(s.j, s.K ? 31 - std::countl_zero(s.K) : 0);
    };
    for (std::size_t x = 1; x < o.size(); ++x) {
      REQUIRE(top(o[x - 1]) <= top(o[x]));
      if (top(o[x - 1]) == top(o[x])) REQUIRE(o[x - 1] < o[x]);
    }
  }
}

TEST_CASE("CNF export") {
  const Cnf c3 = parse_dimacs(to_cnf(3, ClassSpec::all()));
  CHECK(c3.variables == 6);
  CHECK(c3.clauses.size() == 53);
  const Cnf c4 = parse_dimacs(to_cnf(4, ClassSpec::all()));
  CHECK(c4.variables == 24);
  CHECK(c4.clauses.size() == 424);
  const Cnf ef = parse_dimacs(to_cnf(3, ClassSpec::parse("EF")));
  CHECK(ef.clauses.size() == 62);
  for (const auto& cl : c4.clauses) CHECK(cl.size() == 6);

  const std::string text = to_cnf(3, ClassSpec::parse("BF"));
  CHECK(text.rfind("c spec=BF n=3 varmap=canonical\np cnf 6 60\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  // The empty pattern (E) is forbidden: clause "1 2 3 4 5 6 0".
  CHECK(text.find("\n1 2 3 4 5 6 0\n") != std::string::npos);

  CHECK_THROWS(parse_dimacs("1 2 0\n"));
  CHECK_THROWS(parse_dimacs("p cnf 2 1\n1 3 0\n"));
  CHECK_THROWS(parse_dimacs("p cnf 2 2\n1 2 0\n"));
  CHECK_THROWS(parse_dimacs("p cnf 2 1\n1 2\n"));
}

TEST_CASE("CNF model counts match class counts") {
  for (ClassSpec s : all_specs()) REQUIRE(count_models(parse_dimacs(to_cnf(3, s))) == count_class(3, s).count);
  for (const char* s : {"ELUBF", "LUBF", "EUBF", "EB"}) {
    const ClassSpec spec = ClassSpec::parse(s);
    REQUIRE(count_models(parse_dimacs(to_cnf(4, spec))) == count_class(4, spec).count);
  }
  Cnf free_vars{5, {{1, 2}}};
  CHECK(count_models(free_vars) == 24);
  CHECK(count_models(Cnf{3, {}}) == 8);
  CHECK(count_models(Cnf{1, {{1}, {-1}}}) == 0);
}
