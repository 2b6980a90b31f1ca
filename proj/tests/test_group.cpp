#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dwcount/errors.hpp"
#include "dwcount/group.hpp"
#include "dwcount/group_io.hpp"
#include "test_util.hpp"

using namespace dwcount;
using dwcount::testing::find_permutation;
using dwcount::testing::from_cycles;
using dwcount::testing::table_of;

namespace {

std::vector<std::size_t> class_sizes(const ClassData& cd) {
  std::vector<std::size_t> s;
  for (std::size_t c = 0; c < cd.size(); ++c) s.push_back(cd.class_size(c));
  return s;
}

void check_structure(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.power(a, g.element_order(a)) == 0);
    CHECK(g.exponent() % g.element_order(a) == 0);
    for (std::uint32_t m = 1; m < g.element_order(a); ++m) CHECK(g.power(a, m) != 0);
  }
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    CHECK(std::count(row.begin(), row.end(), true) == static_cast<long>(n));
    CHECK(std::count(col.begin(), col.end(), true) == static_cast<long>(n));
  }
  const ClassData cd = conjugacy_classes(g);
  std::size_t total = 0;
  for (std::size_t c = 0; c < cd.size(); ++c) {
    total += cd.class_size(c);
    CHECK(cd.classes[c].representative == cd.classes[c].members.front());
  }
  CHECK(total == n);
  for (Element x = 0; x < n; ++x) {
    const Element u = cd.conjugator[x];
    const Element rep = cd.classes[cd.class_of[x]].representative;
    CHECK(g.mul(g.mul(u, rep), g.inv(u)) == x);
    const EmbeddedGroup cent = centralizer(g, x);
    CHECK(cd.class_size(cd.class_of[x]) * cent.order() == n);
  }
}

}  // namespace

TEST_CASE("permutation closure") {
  const FiniteGroup a5 = FiniteGroup::from_permutation_generators(5, {from_cycles(5, {{0, 1, 2, 3, 4}}),
                                                                      from_cycles(5, {{0, 1, 2}})});
  CHECK(a5.order() == 60);
  CHECK(a5.exponent() == 30);
  CHECK(FiniteGroup::from_permutation_generators(2, {from_cycles(2, {{0, 1}})}).order() == 2);
  const FiniteGroup s3 =
      FiniteGroup::from_permutation_generators(3, {from_cycles(3, {{0, 1}}), from_cycles(3, {{0, 1, 2}})});
  CHECK(s3.order() == 6);
  CHECK(s3.associativity_check() == AssociativityCheck::by_construction);
  check_structure(s3);
  check_structure(a5);

  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(3, {{0, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(3, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(6, {from_cycles(6, {{0, 1}}),
                                                               from_cycles(6, {{0, 1, 2, 3, 4, 5}})},
                                                           100),
                  SizeLimitError);
}

TEST_CASE("indexing is deterministic and breadth-first") {
  const auto gens = std::vector<Permutation>{from_cycles(4, {{0, 1}}), from_cycles(4, {{0, 1, 2, 3}})};
  const FiniteGroup a = FiniteGroup::from_permutation_generators(4, gens);
  const FiniteGroup b = FiniteGroup::from_permutation_generators(4, gens);
  CHECK(table_of(a) == table_of(b));
  CHECK(a.permutation(1) == gens[0]);
  CHECK(a.permutation(2) == gens[1]);
}

TEST_CASE("Cayley tables") {
  const FiniteGroup trivial = FiniteGroup::from_cayley_table({{0}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.exponent() == 1);

  const FiniteGroup c3 = FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3.order() == 3);
  CHECK(c3.exponent() == 3);
  CHECK(c3.associativity_check() == AssociativityCheck::exhaustive);

  // a loop with two-sided inverses that is not associative: (1*1)*2 != 1*(1*2)
  const std::vector<std::vector<std::uint32_t>> loop = {{0, 1, 2, 3, 4, 5}, {1, 0, 4, 2, 5, 3},
                                                        {2, 4, 3, 5, 1, 0}, {3, 2, 5, 4, 0, 1},
                                                        {4, 5, 1, 0, 3, 2}, {5, 3, 0, 1, 2, 4}};
  try {
    FiniteGroup::from_cayley_table(loop);
    FAIL("non-associative table accepted");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("associative") != std::string::npos);
    CHECK(what.find("(1,1,2)") != std::string::npos);
  }

  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}), ValidationError);  // identity is 1
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}}), ValidationError);

  const FiniteGroup s4 = builtin_group("S4");
  const FiniteGroup copy = FiniteGroup::from_cayley_table(table_of(s4));
  CHECK(table_of(copy) == table_of(s4));
  check_structure(copy);

  // large enough that associativity is sampled
  const FiniteGroup a6 = builtin_group("A6");
  const FiniteGroup a6copy = FiniteGroup::from_cayley_table(table_of(a6));
  CHECK(a6copy.associativity_check() == AssociativityCheck::sampled);
  CHECK(table_of(a6copy) == table_of(a6));
}

TEST_CASE("conjugacy classes") {
  const FiniteGroup a5 = builtin_group("A5");
  auto sizes = class_sizes(conjugacy_classes(a5));
  std::multiset<std::size_t> got(sizes.begin(), sizes.end());
  CHECK(got == std::multiset<std::size_t>{1, 15, 20, 12, 12});

  for (const char* name : {"C5", "C12", "D2"}) {
    const FiniteGroup g = builtin_group(name);
    CHECK(conjugacy_classes(g).size() == g.order());
  }
  const FiniteGroup s3 = builtin_group("S3");
  CHECK(class_sizes(conjugacy_classes(s3)) == std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("centralizers") {
  const FiniteGroup a5 = builtin_group("A5");
  const Element alpha = find_permutation(a5, from_cycles(5, {{1, 2}, {3, 4}}));
  const EmbeddedGroup ca = centralizer(a5, alpha);
  std::set<Permutation> members;
  for (Element m : ca.members) members.insert(a5.permutation(m));
  CHECK(members == std::set<Permutation>{from_cycles(5, {}), from_cycles(5, {{1, 2}, {3, 4}}),
                                         from_cycles(5, {{1, 3}, {2, 4}}), from_cycles(5, {{1, 4}, {2, 3}})});

  const Element beta = find_permutation(a5, from_cycles(5, {{0, 1, 2}}));
  const EmbeddedGroup cb = centralizer(a5, beta);
  CHECK(cb.order() == 3);
  CHECK(cb.local.exponent() == 3);

  CHECK(centralizer(a5, 0).order() == 60);

  for (const auto& cent : {ca, cb}) {
    for (Element a = 0; a < cent.order(); ++a)
      for (Element b = 0; b < cent.order(); ++b)
        CHECK(cent.to_parent(cent.local.mul(a, b)) == a5.mul(cent.to_parent(a), cent.to_parent(b)));
  }
}

TEST_CASE("powers") {
  const FiniteGroup c5 = builtin_group("C5");
  for (Element x = 0; x < 5; ++x) {
    CHECK(c5.power(x, 0) == 0);
    CHECK(c5.power(x, c5.element_order(x)) == 0);
    CHECK(c5.power(x, -2) == c5.power(x, 3));
  }
  const FiniteGroup s5 = builtin_group("S5");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-50, 50);
  std::uniform_int_distribution<Element> el(0, static_cast<Element>(s5.order() - 1));
  for (int t = 0; t < 500; ++t) {
    const Element x = el(rng);
    const int a = e(rng), b = e(rng);
    CHECK(s5.power(x, a + b) == s5.mul(s5.power(x, a), s5.power(x, b)));
  }
}

TEST_CASE("builtin groups") {
  CHECK(builtin_group("C1").order() == 1);
  CHECK(builtin_group("C100").order() == 100);
  CHECK(builtin_group("D1").order() == 2);
  CHECK(builtin_group("D2").order() == 4);
  CHECK(builtin_group("D4").order() == 8);
  CHECK(builtin_group("D7").order() == 14);
  CHECK(builtin_group("S1").order() == 1);
  CHECK(builtin_group("S6").order() == 720);
  CHECK(builtin_group("A3").order() == 3);
  CHECK(builtin_group("A4").order() == 12);
  CHECK(builtin_group("A6").order() == 360);
  CHECK(builtin_group("Q8").order() == 8);
  CHECK(conjugacy_classes(builtin_group("Q8")).size() == 5);
  CHECK_THROWS_AS(builtin_group("C101"), ValidationError);
  CHECK_THROWS_AS(builtin_group("S7"), ValidationError);
  CHECK_THROWS_AS(builtin_group("X3"), ValidationError);
  CHECK_THROWS_AS(builtin_group("S6", 100), SizeLimitError);
  for (const char* name : {"Q8", "D4", "D5", "A4", "S4"}) check_structure(builtin_group(name));
}

TEST_CASE("group files") {
  std::istringstream perm("# S3\nperm 3\n1 0 2\n\n1 2 0\n");
  const FiniteGroup s3 = read_group(perm);
  CHECK(s3.order() == 6);
  std::istringstream cay("cayley 2\n0 1\n1 0\n");
  CHECK(read_group(cay).order() == 2);
  std::istringstream bad("cayley 2\n0 1\n");
  CHECK_THROWS_AS(read_group(bad), ValidationError);
  std::istringstream junk("matrix 2\n");
  CHECK_THROWS_AS(read_group(junk), ValidationError);
  CHECK_THROWS_AS(read_group_file("/nonexistent/file"), ValidationError);
}

TEST_CASE("cycle types") {
  const FiniteGroup a5 = builtin_group("A5");
  CHECK(cycle_type(a5, 0) == std::vector<std::uint32_t>{1, 1, 1, 1, 1});
  const Element g = find_permutation(a5, from_cycles(5, {{0, 1, 2, 3, 4}}));
  CHECK(cycle_type(a5, g) == std::vector<std::uint32_t>{5});
  CHECK(cycle_type(FiniteGroup::from_cayley_table({{0}}), 0).empty());
}
