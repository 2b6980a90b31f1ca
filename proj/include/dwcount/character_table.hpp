#pragma once

#include <cstdint>
#include <vector>

#include "dwcount/cyclotomic.hpp"
#include "dwcount/group.hpp"

namespace dwcount {

struct CharacterTableOptions {
  std::uint64_t seed = 0;
  // Upper bound for the prime search (also capped by the kernels' modulus limit).
  std::uint32_t prime_bound = 1u << 26;
  // Random combinations tried on one subspace before giving up.
  int max_split_attempts = 64;
};

// Exact irreducible characters.  Rows are characters, columns follow the
// class order of class_data.  Rows are sorted by ascending degree, then
// by descending real parts of their values (rounded to 1e-9, compared
// lexicographically across classes), then by descending imaginary parts.
struct CharacterTable {
  std::size_t group_order = 0;
  std::uint64_t exponent = 1;
  ClassData class_data;
  std::vector<std::vector<Cyclotomic>> values;  // values[row][class]
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint32_t> inverse_class;  // class of rep^-1
  std::vector<std::uint32_t> square_class;   // class of rep^2
  std::uint32_t prime = 0;                   // prime used for the modular stage

  std::size_t size() const noexcept { return degrees.size(); }
  const Cyclotomic& operator()(std::size_t row, std::size_t cls) const { return values[row][cls]; }
};

CharacterTable character_table(const FiniteGroup& g, const CharacterTableOptions& options = {});
inline CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed) {
  CharacterTableOptions o;
  o.seed = seed;
  return character_table(g, o);
}

// Least prime p = 1 (mod exponent) with p > 2*sqrt(order) and p not dividing
// order; throws ConfigurationError when none lies below bound.
std::uint32_t dixon_prime(std::size_t order, std::uint64_t exponent, std::uint32_t bound);

// (1/|G|) sum_y chi(y^2), exact.
Rational frobenius_schur(const CharacterTable& table, std::size_t row);

// Row and column orthogonality, checked exactly.
bool rows_orthogonal(const CharacterTable& table);
bool columns_orthogonal(const CharacterTable& table);

}  // namespace dwcount
