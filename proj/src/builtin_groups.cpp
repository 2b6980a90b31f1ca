#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "dwcount/errors.hpp"
#include "dwcount/group_io.hpp"

namespace dwcount {
namespace {

Permutation cycle_on(std::size_t degree, std::size_t from, std::size_t to) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = from; i < to; ++i) p[i] = static_cast<std::uint32_t>(i + 1);
  p[to] = static_cast<std::uint32_t>(from);
  return p;
}

// Regular representation of the quaternion group; element 2*u + s stands
// for (-1)^s * unit[u] with units 1, i, j, k.
FiniteGroup quaternion_group(std::size_t max_order) {
  // product of units as (sign, unit)
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto left_mult = [&](int unit) {
    Permutation p(8);
    for (int e = 0; e < 8; ++e) {
      const auto [s, u] = units[unit][e / 2];
      p[e] = static_cast<std::uint32_t>(2 * u + ((s + e % 2) % 2));
    }
    return p;
  };
  return FiniteGroup::from_permutation_generators(8, {left_mult(1), left_mult(2)}, max_order);
}

}  // namespace

FiniteGroup builtin_group(const std::string& name, std::size_t max_order) {
  if (name == "Q8") return quaternion_group(max_order);
  if (name.size() < 2 || !std::isdigit(static_cast<unsigned char>(name[1])))
    throw ValidationError("unknown builtin group '" + name + "'");
  std::size_t n = 0;
  std::size_t used = 0;
  try {
    n = std::stoul(name.substr(1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != name.size() - 1 || n == 0)
    throw ValidationError("unknown builtin group '" + name + "'");

  switch (name[0]) {
    case 'C':
      if (n > 100) throw ValidationError("builtin cyclic groups are limited to C100");
      if (n == 1) return FiniteGroup::from_permutation_generators(1, {}, max_order);
      return FiniteGroup::from_permutation_generators(n, {cycle_on(n, 0, n - 1)}, max_order);
    case 'D': {
      if (n == 1) return FiniteGroup::from_permutation_generators(2, {{1, 0}}, max_order);
      if (n == 2)
        return FiniteGroup::from_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}},
                                                        max_order);
      Permutation reflection(n);
      for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<std::uint32_t>((n - i) % n);
      return FiniteGroup::from_permutation_generators(n, {cycle_on(n, 0, n - 1), reflection},
                                                      max_order);
    }
    case 'S':
      if (n > 6) throw ValidationError("builtin symmetric groups are limited to S6");
      if (n == 1) return FiniteGroup::from_permutation_generators(1, {}, max_order);
      if (n == 2) return FiniteGroup::from_permutation_generators(2, {{1, 0}}, max_order);
      return FiniteGroup::from_permutation_generators(n, {cycle_on(n, 0, 1), cycle_on(n, 0, n - 1)},
                                                      max_order);
    case 'A':
      if (n > 6) throw ValidationError("builtin alternating groups are limited to A6");
      if (n <= 2) return FiniteGroup::from_permutation_generators(n, {}, max_order);
      if (n == 3) return FiniteGroup::from_permutation_generators(3, {cycle_on(3, 0, 2)}, max_order);
      return FiniteGroup::from_permutation_generators(
          n, {n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1), cycle_on(n, 0, 2)},
          max_order);
    default:
      throw ValidationError("unknown builtin group '" + name + "'");
  }
}

}  // namespace dwcount
