#pragma once

// Arithmetic and dense linear algebra over the prime field F_p, p < 2^26.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dwcount::modp {

using Row = std::vector<std::uint32_t>;
using Matrix = std::vector<Row>;

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
// Reduces any signed integer into [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p);
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint64_t n);
// Smallest generator of the multiplicative group of F_p.
std::uint32_t primitive_root(std::uint32_t p);

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row (zero rows are removed).
std::vector<std::size_t> row_reduce(Matrix& rows, std::uint32_t p);

// Basis (RREF rows) of { v : a v = 0 } for a square or rectangular a.
Matrix null_space(Matrix a, std::uint32_t p);

// Characteristic polynomial det(xI - a), coefficients lowest degree first.
std::vector<std::uint32_t> characteristic_polynomial(Matrix a, std::uint32_t p);

std::uint32_t evaluate(const std::vector<std::uint32_t>& poly, std::uint32_t x, std::uint32_t p);

}  // namespace dwcount::modp
