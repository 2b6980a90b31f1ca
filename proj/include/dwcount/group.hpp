#pragma once

// Finite groups as dense multiplication tables over element indices
// 0..n-1, with 0 the identity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dwcount {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;  // image array of 0..degree-1

inline constexpr std::size_t kDefaultMaxOrder = 20000;
// Table entries are 16-bit.
inline constexpr std::size_t kHardMaxOrder = 65535;

struct EmbeddedGroup;

enum class AssociativityCheck { by_construction, exhaustive, sampled };

class FiniteGroup {
 public:
  // Closure of the generators under composition, indexed breadth-first from
  // the identity (generators tried in the given order).  Composition is
  // (p*q)[i] = p[q[i]].
  static FiniteGroup from_permutation_generators(std::size_t degree,
                                                 const std::vector<Permutation>& generators,
                                                 std::size_t max_order = kDefaultMaxOrder);

  // Validates Latin-square structure, identity at index 0 and associativity
  // (exhaustive for n <= 128, 10*n^2 seeded samples above).
  static FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                       std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return elem_order_[a]; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }

  // x^k for any integer k (negative powers through the inverse).
  Element power(Element x, std::int64_t k) const noexcept;

  // Raw row-major table with one padding entry, for the batched kernels.
  const std::uint16_t* table_data() const noexcept { return mul_.data(); }

  AssociativityCheck associativity_check() const noexcept { return assoc_check_; }

  // Permutation realization, when built from generators (degree 0 otherwise).
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Element a) const { return perms_.at(a); }

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> elem_order_;
  std::uint64_t exponent_ = 1;
  AssociativityCheck assoc_check_ = AssociativityCheck::by_construction;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;

  friend struct EmbeddedGroup;
  friend EmbeddedGroup subgroup_from_members(const FiniteGroup&, std::vector<Element>);
};

inline Element power(const FiniteGroup& g, Element x, std::int64_t k) { return g.power(x, k); }

struct ConjugacyClass {
  Element representative;        // minimal index in the class
  std::vector<Element> members;  // ascending
};

struct ClassData {
  std::vector<ConjugacyClass> classes;  // ordered by representative
  std::vector<std::uint32_t> class_of;  // element -> class index
  // element x -> u with u * rep * u^-1 = x
  std::vector<Element> conjugator;

  std::size_t size() const noexcept { return classes.size(); }
  std::size_t class_size(std::size_t c) const { return classes[c].members.size(); }
};

ClassData conjugacy_classes(const FiniteGroup& g);

// A subgroup together with its own indexed group structure.  members[k] is
// the parent element with local index k; local index 0 is the identity.
struct EmbeddedGroup {
  std::vector<Element> members;      // ascending parent indices
  FiniteGroup local;
  std::vector<std::int32_t> to_local;  // parent element -> local index or -1

  Element to_parent(Element local_index) const { return members[local_index]; }
  bool contains(Element parent_element) const { return to_local[parent_element] >= 0; }
  std::size_t order() const noexcept { return members.size(); }
};

// members must be closed under multiplication and contain the identity.
EmbeddedGroup subgroup_from_members(const FiniteGroup& parent, std::vector<Element> members);

EmbeddedGroup centralizer(const FiniteGroup& g, Element x);

// Cycle type (descending cycle lengths, fixed points included) of a
// permutation-group element, or empty when the group has no permutation data.
std::vector<std::uint32_t> cycle_type(const FiniteGroup& g, Element x);

}  // namespace dwcount
