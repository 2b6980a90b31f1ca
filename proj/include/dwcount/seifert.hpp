#pragma once

// Seifert manifold descriptors and the closed-form covering counts.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dwcount/cyclotomic.hpp"
#include "dwcount/lambda_basis.hpp"

namespace dwcount {

struct SeifertPair {
  std::int64_t a = 1;
  std::int64_t b = 0;
  bool operator==(const SeifertPair&) const = default;
};

struct SeifertData {
  bool orientable_base = true;
  std::int64_t genus = 0;
  std::vector<SeifertPair> pairs;
  bool operator==(const SeifertData&) const = default;
};

inline constexpr std::int64_t kMaxGenus = 100000;
inline constexpr std::int64_t kMaxPairEntry = 1'000'000'000'000LL;

// "O;g=2;(3,1)(5,2)"; whitespace is allowed between tokens.
SeifertData parse_seifert(std::string_view text);
std::string to_string(const SeifertData& data);
// Throws ValidationError unless every pair is coprime with a >= 1 and a
// non-orientable base has genus >= 1.
void validate(const SeifertData& data);

struct CountTerm {
  BasisIndex index;
  Cyclotomic eta_product;
  Cyclotomic term;  // contribution to the count
};

struct CountResult {
  Integer count;
  Rational z;  // count / |G|
  std::vector<CountTerm> terms;
};

// sum_i |G|^(2g-1) (dim chi_i)^-(n+2g-2) prod_j eta_i(a_j, b_j)
CountResult count_orientable(const LambdaBasis& basis, const SeifertData& data);
// sum_i |G|^(g-1) c~_i^g (dim chi_i)^-(n+g-2) prod_j eta_i(a_j, b_j)
CountResult count_nonorientable(const LambdaBasis& basis, const SeifertData& data);
CountResult count(const LambdaBasis& basis, const SeifertData& data);

// Closed form for A5 written out from its character table, independent of
// any group computation.  Orientable base only.
Integer count_a5_specialized(const SeifertData& data);

}  // namespace dwcount
