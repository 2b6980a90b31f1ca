#pragma once

// The torus state space E as functions on commuting pairs (x, h), with the
// chi and tau coordinate systems, the SL(2,Z) action, the fusion product,
// and Z(M) for Seifert manifolds assembled from cut-and-glue pieces.

#include <cstdint>
#include <vector>

#include "dwcount/cyclotomic.hpp"
#include "dwcount/lambda_basis.hpp"
#include "dwcount/seifert.hpp"

namespace dwcount {

enum class BasisTag { chi, tau };

// Commuting pairs of the group, indexed x-major with h ascending in C(x).
class CommutingPairs {
 public:
  explicit CommutingPairs(const FiniteGroup& g);
  std::size_t size() const noexcept { return xs_.size(); }
  Element x(std::size_t k) const { return xs_[k]; }
  Element h(std::size_t k) const { return hs_[k]; }
  // Index of (x, h), or -1 when they do not commute.
  std::int64_t find(Element x, Element h) const;

 private:
  std::vector<Element> xs_, hs_;
  std::vector<std::size_t> offset_;  // first index for each x
};

// A function on commuting pairs (values in pair order).
using PairFunction = std::vector<Cyclotomic>;

struct EVector {
  BasisTag tag = BasisTag::chi;
  std::vector<Cyclotomic> coords;  // LambdaBasis order
};

// Column convention: matrix[row][col] is the coefficient of basis vector
// `row` in the image of basis vector `col`.
struct EOperator {
  BasisTag domain = BasisTag::chi;
  BasisTag codomain = BasisTag::chi;
  std::vector<std::vector<Cyclotomic>> matrix;
};

class TorusSpace {
 public:
  explicit TorusSpace(const LambdaBasis& basis);

  const LambdaBasis& basis() const noexcept { return *basis_; }
  const CommutingPairs& pairs() const noexcept { return pairs_; }
  // s[i][j] = s_i^j
  const std::vector<std::vector<Cyclotomic>>& s() const noexcept { return s_; }

  PairFunction chi_function(std::size_t i) const;
  // tau_i(x, h) = chi_i(h, x^-1)
  PairFunction tau_function(std::size_t i) const;

  // (1/|G|) sum f * conj(g)
  Cyclotomic inner(const PairFunction& f, const PairFunction& g) const;

  PairFunction expand(const EVector& v) const;
  // Coordinates by inner products with the chosen basis; throws
  // ConsistencyError when f is not a conjugation-invariant function.
  EVector coordinates(const PairFunction& f, BasisTag tag) const;

  EVector to_tau(const EVector& v) const;
  EVector to_chi(const EVector& v) const;

  EOperator s_matrix() const;
  EOperator t_matrix() const;
  EVector apply(const EOperator& op, const EVector& v) const;

  // (A_* f)(x, h) = f(x^a h^b, x^c h^d)
  PairFunction sl2_action(const PairFunction& f, std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t d) const;

  // m(f (x) g)(x, h) = sum over x1 x2 = x of f(x1, h) g(x2, h); result in the tag of `left`.
  EVector fusion_product(const EVector& left, const EVector& right) const;

  // The glued solid-torus state delta(e, x^a h^b), in tau coordinates.  The
  // coordinates come from inner products and are checked against eta/|G|.
  EVector z_solid_torus(std::int64_t a, std::int64_t b) const;
  PairFunction solid_torus_function(std::int64_t a, std::int64_t b) const;

  // Diagonal of Z(Sigma_{g;p,q} x S^1) on tau tensors: (s_0^i)^-(p+q+2g-2).
  std::vector<Rational> surface_diagonal(std::int64_t genus, std::int64_t p, std::int64_t q) const;
  // Coefficients of tau_i^{(x)q} when the surface operator is applied to the
  // tensor product of the given tau-coordinate vectors.
  std::vector<Cyclotomic> apply_surface(std::int64_t genus, std::int64_t q,
                                        const std::vector<EVector>& inputs) const;

  // (Z(F_g), tau_i) for every i, in closed form.
  std::vector<Rational> crosscap_pairing(std::int64_t genus) const;
  // The same pairings from the function Z(F_g)(x, h) counted directly;
  // empty when the count would exceed `max_cost` group operations.
  std::vector<Cyclotomic> crosscap_pairing_direct(std::int64_t genus,
                                                  std::uint64_t max_cost = 200'000'000) const;

 private:
  const LambdaBasis* basis_;
  CommutingPairs pairs_;
  std::vector<std::vector<Cyclotomic>> s_;
};

struct StructuralResult {
  Rational z;
  bool crosscap_cross_checked = false;  // only meaningful for a non-orientable base
};

// Z(M) by composing solid-torus states, the surface operator and the closing
// piece (a standard solid torus, or the circle bundle F_g for a
// non-orientable base).
StructuralResult z_seifert_structural(const TorusSpace& space, const SeifertData& data);

}  // namespace dwcount
