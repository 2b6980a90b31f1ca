#include <doctest.h>

#include <algorithm>
#include <set>

#include "dwcount/character_table.hpp"
#include "dwcount/errors.hpp"
#include "dwcount/group_io.hpp"
#include "test_util.hpp"

using namespace dwcount;
using dwcount::testing::find_permutation;
using dwcount::testing::from_cycles;

namespace {

Cyclotomic value_at(const CharacterTable& t, std::size_t row, Element x) {
  return t.values[row][t.class_data.class_of[x]];
}

Cyclotomic zeta(std::uint32_t m, std::int64_t k = 1) { return Cyclotomic::root_of_unity(m, k); }

}  // namespace

TEST_CASE("orthogonality, degrees and integral indicators across groups") {
  for (const char* name : {"C1", "C2", "C3", "C4", "C6", "C12", "S3", "D4", "D5", "Q8", "A4", "S4", "A5", "S5", "A6"}) {
    CAPTURE(name);
    const FiniteGroup g = builtin_group(name);
    const CharacterTable t = character_table(g);
    CHECK(t.size() == t.class_data.size());
    CHECK(rows_orthogonal(t));
    CHECK(columns_orthogonal(t));
    std::uint64_t sum = 0;
    for (auto d : t.degrees) {
      sum += d * d;
      CHECK(g.order() % d == 0);
    }
    CHECK(sum == g.order());
    CHECK(std::is_sorted(t.degrees.begin(), t.degrees.end()));
    for (std::size_t r = 0; r < t.size(); ++r) {
      const Rational fs = frobenius_schur(t, r);
      CHECK(fs.get_den() == 1);
      for (const auto& v : t.values[r]) {
        const auto lifted = v.lifted(static_cast<std::uint32_t>(g.exponent()));
        CHECK(std::abs(v.to_complex() - lifted.to_complex()) < 1e-9);
      }
    }
    // trivial character first
    for (const auto& v : t.values[0]) CHECK(v == Cyclotomic(1L));
  }
}

TEST_CASE("A5 characters") {
  const FiniteGroup a5 = builtin_group("A5");
  const CharacterTable t = character_table(a5);
  CHECK(t.prime == 31);
  CHECK(dixon_prime(60, 30, 1u << 26) == 31);
  CHECK(t.degrees == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  const Element alpha = find_permutation(a5, from_cycles(5, {{0, 1}, {2, 3}}));
  const Element beta = find_permutation(a5, from_cycles(5, {{0, 1, 2}}));
  const Element gamma = find_permutation(a5, from_cycles(5, {{0, 1, 2, 3, 4}}));
  const Element gamma2 = a5.mul(gamma, gamma);
  auto row = [&](std::size_t r) {
    return std::vector<Cyclotomic>{value_at(t, r, 0), value_at(t, r, alpha), value_at(t, r, beta),
                                   value_at(t, r, gamma), value_at(t, r, gamma2)};
  };
  const Cyclotomic r5 = zeta(5) + zeta(5, 4) + zeta(5, 4) + zeta(5) + Cyclotomic(1L);  // sqrt 5
  const Cyclotomic plus = (Cyclotomic(1L) + r5) / Rational(2), minus = (Cyclotomic(1L) - r5) / Rational(2);
  CHECK(row(0) == std::vector<Cyclotomic>{1L, 1L, 1L, 1L, 1L});
  const std::set<std::vector<std::string>> threes = [&] {
    std::set<std::vector<std::string>> s;
    for (std::size_t r : {1u, 2u}) {
      std::vector<std::string> v;
      for (const auto& c : row(r)) v.push_back(c.to_string());
      s.insert(v);
    }
    return s;
  }();
  auto text = [](std::vector<Cyclotomic> v) {
    std::vector<std::string> s;
    for (const auto& c : v) s.push_back(c.to_string());
    return s;
  };
  CHECK(threes == std::set<std::vector<std::string>>{text({3L, -1L, 0L, plus, minus}), text({3L, -1L, 0L, minus, plus})});
  CHECK(row(3) == std::vector<Cyclotomic>{4L, 0L, 1L, -1L, -1L});
  CHECK(row(4) == std::vector<Cyclotomic>{5L, 1L, -1L, 0L, 0L});
}

TEST_CASE("small tables") {
  const CharacterTable c2 = character_table(builtin_group("C2"));
  CHECK(c2.values == std::vector<std::vector<Cyclotomic>>{{1L, 1L}, {1L, -1L}});

  const FiniteGroup s3 = builtin_group("S3");
  const CharacterTable t = character_table(s3);
  CHECK(t.degrees == std::vector<std::uint64_t>{1, 1, 2});
  // classes are (e, transpositions, 3-cycles)
  CHECK(t.values[2] == std::vector<Cyclotomic>{2L, 0L, -1L});
  CHECK(frobenius_schur(t, 0) == 1);
  CHECK(frobenius_schur(t, 1) == 1);  // sign

  const CharacterTable c3 = character_table(builtin_group("C3"));
  CHECK(frobenius_schur(c3, 0) == 1);
  CHECK(frobenius_schur(c3, 1) == 0);
  CHECK(frobenius_schur(c3, 2) == 0);

  const CharacterTable q8 = character_table(builtin_group("Q8"));
  CHECK(frobenius_schur(q8, 4) == -1);  // quaternionic
}

TEST_CASE("seeds give the same canonical table") {
  for (const char* name : {"S4", "A5", "Q8", "C12", "D5"}) {
    const FiniteGroup g = builtin_group(name);
    const CharacterTable a = character_table(g, 0);
    const CharacterTable b = character_table(g, 12345);
    const CharacterTable c = character_table(g, 0);
    CHECK(a.values == b.values);
    CHECK(a.values == c.values);
  }
}

TEST_CASE("prime search limits") {
  CHECK_THROWS_AS(character_table(builtin_group("A5"), CharacterTableOptions{0, 20, 64}), ConfigurationError);
  CHECK(dixon_prime(1, 1, 1u << 26) == 3);
}
