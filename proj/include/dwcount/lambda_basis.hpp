#pragma once

// The canonical basis of the torus state space of untwisted Dijkgraaf-Witten
// theory: one element per pair (conjugacy class c, irreducible character rho
// of the centralizer of the class representative).

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "dwcount/character_table.hpp"
#include "dwcount/cyclotomic.hpp"
#include "dwcount/group.hpp"

namespace dwcount {

struct BasisIndex {
  std::uint32_t class_index = 0;
  std::uint32_t char_row = 0;
  auto operator<=>(const BasisIndex&) const = default;
};

struct ClassSector {
  Element representative;
  EmbeddedGroup centralizer;
  CharacterTable table;                          // characters of the centralizer
  std::vector<std::vector<Cyclotomic>> values;   // table lifted to the group's exponent
};

class LambdaBasis {
 public:
  const FiniteGroup& group() const noexcept { return *group_; }
  const ClassData& classes() const noexcept { return classes_; }
  const std::vector<ClassSector>& sectors() const noexcept { return sectors_; }
  const std::vector<BasisIndex>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t position(BasisIndex i) const { return offsets_[i.class_index] + i.char_row; }
  // Conductor every evaluation is expressed in (the exponent of the group).
  std::uint32_t conductor() const noexcept { return conductor_; }
  std::uint64_t seed() const noexcept { return seed_; }
  // (identity class, trivial character); not necessarily row 0 under the
  // canonical row order.
  BasisIndex zero_index() const noexcept { return zero_; }

  // chi_i(x, h): zero unless x lies in the class of i and h commutes with x;
  // otherwise rho(u^-1 h u) where u * rep * u^-1 = x.
  Cyclotomic chi_eval(BasisIndex i, Element x, Element h) const;

  // #c * rho(e)
  std::uint64_t dim_chi(BasisIndex i) const;
  // rho(rep) / rho(e), a root of unity.
  Cyclotomic kappa(BasisIndex i) const;

  // sum over z of chi_i(z^a, z^-b), evaluated through the reduction
  // d = gcd(a, |G|), a*c = d (mod |G|) with c a unit: sum over y of chi_i(y^d, y^(-b*c)).
  // Requires a >= 1 and gcd(a, b) = 1.
  Cyclotomic eta(BasisIndex i, std::int64_t a, std::int64_t b) const;
  // The same value for every basis element, in basis order.
  std::vector<Cyclotomic> eta_all(std::int64_t a, std::int64_t b) const;
  // The unreduced sum over z, through chi_eval.
  Cyclotomic eta_direct(BasisIndex i, std::int64_t a, std::int64_t b) const;

  // Zero unless rep^2 = e; otherwise (1/#C(rep)) sum_{h in C(rep)} chi_i(rep, h^2).
  Cyclotomic c_tilde(BasisIndex i) const;

  // (1/|G|) sum over commuting (x,h) of chi_i(h^-1, x) * conj(chi_j(x, h)).
  Cyclotomic s_entry(BasisIndex i, BasisIndex j) const;
  // dim chi_i / |G|
  Rational s_zero(BasisIndex i) const;
  // Full matrix s[i][j] = s_entry(i, j) in basis order, accumulated per
  // pair of centralizer classes.
  std::vector<std::vector<Cyclotomic>> s_matrix_entries() const;

  // Local class (in the sector of x's class) of u^-1 h u, for commuting x, h.
  std::uint32_t transported_class(Element x, Element h) const;

 private:
  friend LambdaBasis build_lambda(std::shared_ptr<const FiniteGroup> group, std::uint64_t seed);

  std::shared_ptr<const FiniteGroup> group_;
  ClassData classes_;
  std::vector<ClassSector> sectors_;
  std::vector<BasisIndex> indices_;
  std::vector<std::size_t> offsets_;
  BasisIndex zero_{};
  std::uint32_t conductor_ = 1;
  std::uint64_t seed_ = 0;
};

LambdaBasis build_lambda(std::shared_ptr<const FiniteGroup> group, std::uint64_t seed = 0);
inline LambdaBasis build_lambda(const FiniteGroup& group, std::uint64_t seed = 0) {
  return build_lambda(std::make_shared<const FiniteGroup>(group), seed);
}

// Multiplier c with a*c = gcd(a, n) (mod n) and gcd(c, n) = 1.
std::int64_t eta_multiplier(std::int64_t a, std::int64_t n);

}  // namespace dwcount
