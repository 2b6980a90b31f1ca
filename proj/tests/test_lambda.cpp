#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dwcount/errors.hpp"
#include "dwcount/group_io.hpp"
#include "dwcount/lambda_basis.hpp"
#include "test_util.hpp"

using namespace dwcount;
using dwcount::testing::find_permutation;
using dwcount::testing::from_cycles;

namespace {

Cyclotomic zeta(std::uint32_t m, std::int64_t k = 1) { return Cyclotomic::root_of_unity(m, k); }

// Same elements, counted with multiplicity, under exact equality.
bool same_multiset(std::vector<Cyclotomic> a, std::vector<Cyclotomic> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    const auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::vector<std::size_t> rows_of_class(const LambdaBasis& lb, std::uint32_t c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lb.size(); ++i)
    if (lb.indices()[i].class_index == c) out.push_back(i);
  return out;
}

const char* const kGroups[] = {"C1", "C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4", "S4", "A5"};

}  // namespace

TEST_CASE("basis sizes") {
  CHECK(build_lambda(builtin_group("A5")).size() == 22);
  CHECK(build_lambda(builtin_group("C1")).size() == 1);
  CHECK(build_lambda(builtin_group("C2")).size() == 4);
  for (const char* name : kGroups) {
    CAPTURE(name);
    const LambdaBasis lb = build_lambda(builtin_group(name));
    std::uint64_t sum = 0;
    for (const auto& i : lb.indices()) sum += lb.dim_chi(i) * lb.dim_chi(i);
    CHECK(sum == lb.group().order() * lb.group().order());
    CHECK(lb.zero_index() == BasisIndex{0, 0});
    CHECK(std::is_sorted(lb.indices().begin(), lb.indices().end()));
  }
}

TEST_CASE("chi evaluation") {
  const LambdaBasis lb = build_lambda(builtin_group("A5"));
  const FiniteGroup& g = lb.group();
  const Element beta = find_permutation(g, from_cycles(5, {{0, 1, 2}}));
  const auto cb = lb.classes().class_of[beta];
  std::vector<Cyclotomic> values;
  for (std::size_t i : rows_of_class(lb, cb)) values.push_back(lb.chi_eval(lb.indices()[i], beta, beta));
  CHECK(same_multiset(values, {Cyclotomic(1L), zeta(3), zeta(3, 2)}));

  // outside the support, or not commuting
  const Element alpha = find_permutation(g, from_cycles(5, {{0, 1}, {2, 3}}));
  CHECK(lb.chi_eval(lb.indices()[rows_of_class(lb, cb)[1]], alpha, 0).is_zero());
  CHECK(lb.chi_eval(lb.indices()[rows_of_class(lb, cb)[0]], beta, alpha).is_zero());

  // simultaneous conjugation
  std::mt19937 rng(3);
  std::uniform_int_distribution<Element> el(0, static_cast<Element>(g.order() - 1));
  for (int t = 0; t < 300; ++t) {
    const Element x = el(rng), u = el(rng);
    const Element h = g.power(x, static_cast<std::int64_t>(el(rng)));  // commutes with x
    const auto i = lb.indices()[std::uniform_int_distribution<std::size_t>(0, lb.size() - 1)(rng)];
    const Element xc = g.mul(g.mul(u, x), g.inv(u)), hc = g.mul(g.mul(u, h), g.inv(u));
    CHECK(lb.chi_eval(i, xc, hc) == lb.chi_eval(i, x, h));
  }
}

TEST_CASE("dimensions, spins and indicators on A5") {
  const LambdaBasis lb = build_lambda(builtin_group("A5"));
  const FiniteGroup& g = lb.group();
  std::multiset<std::uint64_t> dims;
  for (const auto& i : lb.indices()) dims.insert(lb.dim_chi(i));
  CHECK(dims == std::multiset<std::uint64_t>{1, 3, 3, 4, 5, 15, 15, 15, 15, 20, 20, 20, 12, 12, 12, 12, 12,
                                             12, 12, 12, 12, 12});
  CHECK(lb.dim_chi({0, 0}) == 1);
  CHECK(lb.dim_chi({0, 4}) == 5);
  CHECK(lb.s_zero({0, 0}) == ratio(1, 60));

  const Element alpha = find_permutation(g, from_cycles(5, {{0, 1}, {2, 3}}));
  const Element gamma = find_permutation(g, from_cycles(5, {{0, 1, 2, 3, 4}}));
  std::vector<Cyclotomic> alpha_spins, gamma_spins, fifth_roots;
  for (std::size_t i : rows_of_class(lb, lb.classes().class_of[alpha])) alpha_spins.push_back(lb.kappa(lb.indices()[i]));
  CHECK(same_multiset(alpha_spins, {1L, 1L, -1L, -1L}));
  for (std::size_t i : rows_of_class(lb, lb.classes().class_of[gamma])) gamma_spins.push_back(lb.kappa(lb.indices()[i]));
  for (int k = 0; k < 5; ++k) fifth_roots.push_back(zeta(5, k));
  CHECK(same_multiset(gamma_spins, fifth_roots));
  for (std::size_t i : rows_of_class(lb, 0)) CHECK(lb.kappa(lb.indices()[i]) == Cyclotomic(1L));
}

TEST_CASE("eta values on A5") {
  const LambdaBasis lb = build_lambda(builtin_group("A5"));
  const FiniteGroup& g = lb.group();
  const Element alpha = find_permutation(g, from_cycles(5, {{0, 1}, {2, 3}}));
  for (std::size_t i : rows_of_class(lb, lb.classes().class_of[alpha])) {
    const auto idx = lb.indices()[i];
    const Cyclotomic expected = lb.kappa(idx) == Cyclotomic(-1L) ? Cyclotomic(-15L) : Cyclotomic(15L);
    CHECK(lb.eta(idx, 3, 1) == expected);
  }
  CHECK(lb.eta({0, 0}, 2, 1) == Cyclotomic(16L));
  for (const auto& i : lb.indices()) CHECK(lb.eta(i, 1, 0) == Cyclotomic(static_cast<long>(lb.dim_chi(i))));
}

TEST_CASE("reduced eta equals the direct sum") {
  for (const char* name : {"C2", "C6", "S3", "D4", "Q8", "A4"}) {
    CAPTURE(name);
    const LambdaBasis lb = build_lambda(builtin_group(name));
    for (std::int64_t a = 1; a <= 12; ++a)
      for (std::int64_t b = -12; b <= 12; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const auto all = lb.eta_all(a, b);
        for (std::size_t i = 0; i < lb.size(); ++i) CHECK(all[i] == lb.eta_direct(lb.indices()[i], a, b));
      }
  }
}

TEST_CASE("eta multiplier is a unit") {
  CHECK(eta_multiplier(12, 6) % 6 != 0);
  for (std::int64_t n : {1, 2, 6, 8, 12, 24, 60, 120}) {
    for (std::int64_t a = 1; a <= 200; ++a) {
      const std::int64_t c = eta_multiplier(a, n);
      CHECK(std::gcd(c, n) == 1);
      CHECK(((a * c - std::gcd(a, n)) % n + n) % n == 0);
    }
  }
}

TEST_CASE("eta input validation") {
  const LambdaBasis lb = build_lambda(builtin_group("S3"));
  CHECK_THROWS_AS(lb.eta({0, 0}, 2, 4), ValidationError);
  CHECK_THROWS_AS(lb.eta({0, 0}, 0, 1), ValidationError);
  CHECK_THROWS_AS(lb.eta({0, 0}, -1, 1), ValidationError);
  CHECK_THROWS_AS(lb.eta_direct({0, 0}, 6, 3), ValidationError);
}

TEST_CASE("kappa and c-tilde invariants") {
  for (const char* name : kGroups) {
    CAPTURE(name);
    const LambdaBasis lb = build_lambda(builtin_group(name));
    const FiniteGroup& g = lb.group();
    for (const auto& i : lb.indices()) {
      const auto& sector = lb.sectors()[i.class_index];
      const Element rep = sector.representative;
      CHECK(lb.kappa(i).pow(g.element_order(rep)) == Cyclotomic(1L));
      const Cyclotomic ct = lb.c_tilde(i);
      CHECK(ct.is_rational());
      if (g.mul(rep, rep) != 0) {
        CHECK(ct.is_zero());
      } else {
        CHECK(ct.rational_value() == frobenius_schur(sector.table, i.char_row));
      }
      // kappa does not depend on the point of the support used
      for (Element x : lb.classes().classes[i.class_index].members)
        CHECK(lb.chi_eval(i, x, x) == lb.kappa(i) * lb.chi_eval(i, x, 0));
    }
    CHECK(lb.c_tilde(lb.zero_index()) == Cyclotomic(1L));
  }
  const LambdaBasis c3 = build_lambda(builtin_group("C3"));
  CHECK(c3.c_tilde({0, 1}).is_zero());
  CHECK(c3.c_tilde({0, 2}).is_zero());
}

TEST_CASE("s-matrix entries") {
  const LambdaBasis c2 = build_lambda(builtin_group("C2"));
  const auto s = c2.s_matrix_entries();
  const std::vector<std::vector<long>> sign = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(s[i][j] == Cyclotomic(ratio(sign[i][j], 2)));

  for (const char* name : {"S3", "Q8", "A4", "A5"}) {
    CAPTURE(name);
    const LambdaBasis lb = build_lambda(builtin_group(name));
    const auto full = lb.s_matrix_entries();
    const FiniteGroup& g = lb.group();
    for (std::size_t i = 0; i < lb.size(); ++i) {
      const auto ii = lb.indices()[i];
      CHECK(full[lb.position(lb.zero_index())][i] == Cyclotomic(lb.s_zero(ii)));
      for (std::size_t j = 0; j < lb.size(); ++j) CHECK(full[i][j] == lb.s_entry(ii, lb.indices()[j]));
      if (ii.class_index == 0) {
        // h^-1 = e is forced
        for (std::size_t j = 0; j < lb.size(); ++j) {
          const auto jj = lb.indices()[j];
          Cyclotomic sum(0L);
          for (Element x = 0; x < g.order(); ++x) sum += lb.chi_eval(ii, 0, x) * lb.chi_eval(jj, x, 0).conj();
          CHECK(full[i][j] == sum / Rational(static_cast<unsigned long>(g.order())));
        }
      }
    }
  }
}
