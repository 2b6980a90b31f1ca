#include "dwcount/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "dwcount/errors.hpp"
#include "dwcount/kernels.hpp"
#include "dwcount/modular.hpp"

namespace dwcount {
namespace {

using modp::Matrix;
using modp::Row;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// (A_i)[j][k] = #{(u,v) in c_i x c_j : uv = w} for a fixed w in c_k, mod p.
std::vector<Matrix> class_multiplication_matrices(const FiniteGroup& g, const ClassData& cd,
                                                  std::uint32_t p) {
  const std::size_t r = cd.size();
  std::vector<std::vector<std::vector<std::uint64_t>>> counts(
      r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const Element w = cd.classes[k].representative;
    for (std::size_t i = 0; i < r; ++i)
      for (Element u : cd.classes[i].members) ++counts[i][cd.class_of[g.mul(g.inv(u), w)]][k];
  }
  std::vector<Matrix> a(r, Matrix(r, Row(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) a[i][j][k] = static_cast<std::uint32_t>(counts[i][j][k] % p);
  return a;
}

// Splits F_p^r into the one-dimensional common eigenspaces of the class
// matrices, refining each subspace by eigenspaces of seeded random combinations.
std::vector<Row> common_eigenvectors(const std::vector<Matrix>& a, std::uint32_t p,
                                     const CharacterTableOptions& options) {
  const std::size_t r = a.size();
  const auto& kern = kernels::active();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);

  Matrix identity(r, Row(r, 0));
  for (std::size_t k = 0; k < r; ++k) identity[k][k] = 1;
  std::vector<Matrix> pending{identity};
  std::vector<Row> result;

  while (!pending.empty()) {
    Matrix basis = std::move(pending.back());
    pending.pop_back();
    if (basis.size() == 1) {
      result.push_back(std::move(basis.front()));
      continue;
    }
    const std::size_t d = basis.size();
    std::vector<std::size_t> pivots(d);
    for (std::size_t l = 0; l < d; ++l)
      pivots[l] = static_cast<std::size_t>(
          std::find_if(basis[l].begin(), basis[l].end(), [](auto v) { return v != 0; }) -
          basis[l].begin());

    bool split = false;
    for (int attempt = 0; attempt < options.max_split_attempts && !split; ++attempt) {
      Matrix m(r, Row(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        const std::uint32_t c = coef(rng);
        if (c == 0) continue;
        for (std::size_t j = 0; j < r; ++j) kern.axpy_mod(m[j], a[i][j], c, p);
      }
      // restriction to the subspace, expressed in the RREF basis coordinates
      Matrix restricted(d, Row(d, 0));
      for (std::size_t k = 0; k < d; ++k) {
        Row image(r, 0);
        for (std::size_t j = 0; j < r; ++j)
          if (basis[k][j] != 0) {
            for (std::size_t row = 0; row < r; ++row)
              image[row] = modp::add(image[row], modp::mul(m[row][j], basis[k][j], p), p);
          }
        for (std::size_t l = 0; l < d; ++l) restricted[l][k] = image[pivots[l]];
      }
      const auto poly = modp::characteristic_polynomial(restricted, p);
      std::vector<std::uint32_t> roots;
      for (std::uint32_t x = 0; x < p && roots.size() < d; ++x)
        if (modp::evaluate(poly, x, p) == 0) roots.push_back(x);
      if (roots.size() < 2) continue;

      std::vector<Matrix> pieces;
      std::size_t total = 0;
      for (auto lambda : roots) {
        Matrix shifted = restricted;
        for (std::size_t l = 0; l < d; ++l) shifted[l][l] = modp::sub(shifted[l][l], lambda, p);
        Matrix piece;
        for (const auto& c : modp::null_space(std::move(shifted), p)) {
          Row v(r, 0);
          for (std::size_t k = 0; k < d; ++k)
            if (c[k] != 0) kern.axpy_mod(v, basis[k], c[k], p);
          piece.push_back(std::move(v));
        }
        modp::row_reduce(piece, p);
        total += piece.size();
        pieces.push_back(std::move(piece));
      }
      if (total != d)
        throw ConsistencyError("class matrix combination is not diagonalizable over F_" +
                               std::to_string(p));
      for (auto& piece : pieces) pending.push_back(std::move(piece));
      split = true;
    }
    if (!split)
      throw ConfigurationError("eigenspace splitting did not converge after " +
                               std::to_string(options.max_split_attempts) +
                               " attempts (seed " + std::to_string(options.seed) +
                               "); retry with another seed");
  }
  return result;
}

struct RowKey {
  std::uint64_t degree;
  std::vector<long long> re;
  std::vector<long long> im;
  auto operator<=>(const RowKey&) const = default;
};

// Values enter negated so larger values sort first; the trivial character
// leads the degree-1 rows.
RowKey row_key(std::uint64_t degree, const std::vector<Cyclotomic>& row) {
  RowKey key{degree, {}, {}};
  for (const auto& v : row) {
    const auto z = v.to_complex();
    key.re.push_back(-std::llround(z.real() * 1e9));
    key.im.push_back(-std::llround(z.imag() * 1e9));
  }
  return key;
}

}  // namespace

std::uint32_t dixon_prime(std::size_t order, std::uint64_t exponent, std::uint32_t bound) {
  bound = std::min(bound, kernels::kMaxModulus);
  const double floor_value = 2.0 * std::sqrt(static_cast<double>(order));
  for (std::uint64_t p = exponent + 1; p < bound; p += exponent) {
    if (static_cast<double>(p) <= floor_value || order % p == 0) continue;
    if (modp::is_prime(p)) return static_cast<std::uint32_t>(p);
  }
  throw ConfigurationError("no prime p = 1 mod " + std::to_string(exponent) + " with p > 2*sqrt(" +
                           std::to_string(order) + ") below " + std::to_string(bound));
}

CharacterTable character_table(const FiniteGroup& g, const CharacterTableOptions& options) {
  CharacterTable t;
  const std::size_t n = g.order();
  t.group_order = n;
  t.exponent = g.exponent();
  t.class_data = conjugacy_classes(g);
  const ClassData& cd = t.class_data;
  const std::size_t r = cd.size();
  for (std::size_t c = 0; c < r; ++c) {
    const Element rep = cd.classes[c].representative;
    t.inverse_class.push_back(cd.class_of[g.inv(rep)]);
    t.square_class.push_back(cd.class_of[g.mul(rep, rep)]);
  }

  const std::uint32_t p = dixon_prime(n, t.exponent, options.prime_bound);
  t.prime = p;
  const auto a = class_multiplication_matrices(g, cd, p);
  const auto vectors = common_eigenvectors(a, p, options);
  if (vectors.size() != r)
    throw ConsistencyError("found " + std::to_string(vectors.size()) + " central characters for " +
                           std::to_string(r) + " classes");

  const std::uint64_t max_degree = isqrt(n);
  const std::uint32_t n_mod = static_cast<std::uint32_t>(n % p);
  const std::uint32_t zeta_e =
      modp::pow(modp::primitive_root(p), (p - 1) / t.exponent, p);

  std::vector<std::pair<RowKey, std::size_t>> keys;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::uint64_t> degrees;
  for (const auto& raw : vectors) {
    // central character omega_k = |c_k| chi(g_k) / chi(1), normalized so omega_0 = 1
    Row omega = raw;
    kernels::active().scale_mod(omega, modp::inverse(omega[0], p), p);
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint32_t term = modp::mul(omega[k], omega[t.inverse_class[k]], p);
      s = modp::add(s, modp::mul(term, modp::inverse(cd.class_size(k) % p, p), p), p);
    }
    if (s == 0) throw ConsistencyError("degenerate central character");
    const std::uint32_t deg_sq = modp::mul(n_mod, modp::inverse(s, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree && degree == 0; ++d)
      if (modp::mul(static_cast<std::uint32_t>(d % p), static_cast<std::uint32_t>(d % p), p) ==
          deg_sq)
        degree = d;
    if (degree == 0) throw ConsistencyError("no character degree solves the modular degree equation");

    Row chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = modp::mul(modp::mul(omega[k], static_cast<std::uint32_t>(degree % p), p),
                         modp::inverse(cd.class_size(k) % p, p), p);

    std::vector<Cyclotomic> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const Element rep = cd.classes[k].representative;
      const std::uint32_t ord = g.element_order(rep);
      const std::uint32_t z = modp::pow(zeta_e, t.exponent / ord, p);
      const std::uint32_t z_inv = modp::inverse(z, p);
      const std::uint32_t ord_inv = modp::inverse(ord % p, p);
      std::vector<std::uint32_t> power_values(ord);
      Element y = FiniteGroup::identity();
      for (std::uint32_t j = 0; j < ord; ++j, y = g.mul(y, rep)) power_values[j] = chi[cd.class_of[y]];
      std::vector<Rational> weights(ord);
      std::uint64_t total = 0;
      for (std::uint32_t tt = 0; tt < ord; ++tt) {
        // multiplicity of the eigenvalue zeta_ord^tt of the representing matrix
        const std::uint32_t step = modp::pow(z_inv, tt, p);
        std::uint32_t acc = 0, zj = 1;
        for (std::uint32_t j = 0; j < ord; ++j) {
          acc = modp::add(acc, modp::mul(power_values[j], zj, p), p);
          zj = modp::mul(zj, step, p);
        }
        const std::uint32_t mult = modp::mul(acc, ord_inv, p);
        if (mult > degree)
          throw ConsistencyError("eigenvalue multiplicity does not lift to an integer in [0, degree]");
        weights[tt] = mult;
        total += mult;
      }
      if (total != degree) throw ConsistencyError("eigenvalue multiplicities do not sum to the degree");
      row[k] = Cyclotomic::from_root_weights(ord, weights);
    }
    keys.emplace_back(row_key(degree, row), rows.size());
    rows.push_back(std::move(row));
    degrees.push_back(degree);
  }

  std::sort(keys.begin(), keys.end());
  std::uint64_t sum_sq = 0;
  for (const auto& [key, idx] : keys) {
    t.values.push_back(std::move(rows[idx]));
    t.degrees.push_back(degrees[idx]);
    sum_sq += degrees[idx] * degrees[idx];
  }
  if (sum_sq != n) throw ConsistencyError("squared character degrees do not sum to the group order");
  return t;
}

Rational frobenius_schur(const CharacterTable& table, std::size_t row) {
  Cyclotomic sum;
  for (std::size_t c = 0; c < table.class_data.size(); ++c)
    sum.add_scaled(table.values[row][table.square_class[c]],
                   Rational(static_cast<unsigned long>(table.class_data.class_size(c))));
  sum /= Rational(static_cast<unsigned long>(table.group_order));
  const Rational value = sum.rational_value();
  if (value.get_den() != 1) throw ConsistencyError("Frobenius-Schur indicator is not an integer");
  return value;
}

bool rows_orthogonal(const CharacterTable& table) {
  const std::size_t r = table.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < r; ++c)
        sum.add_scaled(table.values[i][c] * table.values[j][c].conj(),
                       Rational(static_cast<unsigned long>(table.class_data.class_size(c))));
      const Cyclotomic expected(i == j ? static_cast<long>(table.group_order) : 0L);
      if (!(sum == expected)) return false;
    }
  return true;
}

bool columns_orthogonal(const CharacterTable& table) {
  const std::size_t r = table.size();
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = c; d < r; ++d) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < r; ++i) sum += table.values[i][c] * table.values[i][d].conj();
      const Cyclotomic expected(
          c == d ? ratio(static_cast<long>(table.group_order),
                         static_cast<long>(table.class_data.class_size(c)))
                 : Rational(0));
      if (!(sum == expected)) return false;
    }
  return true;
}

}  // namespace dwcount
