#include "dwcount/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "dwcount/errors.hpp"

namespace dwcount {
namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

void check_bijection(const Permutation& p, std::size_t degree, std::size_t which) {
  if (p.size() != degree)
    throw ValidationError("generator " + std::to_string(which) + " has " +
                          std::to_string(p.size()) + " images, expected " +
                          std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v])
      throw ValidationError("generator " + std::to_string(which) + " is not a bijection of 0.." +
                            std::to_string(degree - 1));
    seen[v] = true;
  }
}

std::size_t effective_limit(std::size_t max_order) { return std::min(max_order, kHardMaxOrder); }

}  // namespace

Element FiniteGroup::power(Element x, std::int64_t k) const noexcept {
  const std::int64_t ord = elem_order_[x];
  std::int64_t e = k % ord;
  if (e < 0) e += ord;
  Element result = identity();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void FiniteGroup::finish() {
  const std::size_t n = order_;
  inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (mul(a, b) == identity()) {
        inv_[a] = b;
        break;
      }
  elem_order_.assign(n, 1);
  exponent_ = 1;
  for (Element a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    for (Element y = a; y != identity(); y = mul(y, a)) ++k;
    elem_order_[a] = k;
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(elem_order_[a]));
  }
}

FiniteGroup FiniteGroup::from_permutation_generators(std::size_t degree,
                                                     const std::vector<Permutation>& generators,
                                                     std::size_t max_order) {
  if (degree == 0) throw ValidationError("permutation degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) check_bijection(generators[i], degree, i);
  const std::size_t limit = effective_limit(max_order);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  std::vector<std::vector<Element>> right(1);  // right[x][k] = x * generators[k]
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};

  for (std::size_t head = 0; head < elements.size(); ++head) {
    right[head].resize(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation y = compose(elements[head], generators[k]);
      auto [it, inserted] = index.try_emplace(y, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= limit)
          throw SizeLimitError("permutation group closure exceeds the maximum order " +
                               std::to_string(limit));
        elements.push_back(std::move(y));
        right.emplace_back();
        parent.push_back(static_cast<Element>(head));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right[head][k] = it->second;
    }
  }

  FiniteGroup g;
  const std::size_t n = elements.size();
  g.order_ = n;
  g.mul_.assign(n * n + 1, 0);
  // b = parent[b] * gen, so a*b = (a*parent[b]) * gen; parents precede children.
  for (Element a = 0; a < n; ++a) {
    g.mul_[static_cast<std::size_t>(a) * n] = static_cast<std::uint16_t>(a);
    for (Element b = 1; b < n; ++b)
      g.mul_[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(right[g.mul(a, parent[b])][via[b]]);
  }
  g.degree_ = degree;
  g.perms_ = std::move(elements);
  g.assoc_check_ = AssociativityCheck::by_construction;
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                           std::size_t max_order) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("Cayley table is empty");
  if (n > effective_limit(max_order))
    throw SizeLimitError("Cayley table order " + std::to_string(n) + " exceeds the maximum order " +
                         std::to_string(effective_limit(max_order)));
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw ValidationError("Cayley table row " + std::to_string(r) + " has " +
                            std::to_string(table[r].size()) + " entries, expected " +
                            std::to_string(n));
    for (auto v : table[r])
      if (v >= n)
        throw ValidationError("Cayley table entry " + std::to_string(v) + " in row " +
                              std::to_string(r) + " is out of range");
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      if (row[table[r][c]])
        throw ValidationError("Cayley table is not a Latin square: row " + std::to_string(r) +
                              " repeats " + std::to_string(table[r][c]));
      if (col[table[c][r]])
        throw ValidationError("Cayley table is not a Latin square: column " + std::to_string(r) +
                              " repeats " + std::to_string(table[c][r]));
      row[table[r][c]] = true;
      col[table[c][r]] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = table[e][k] == k && table[k][e] == k;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("Cayley table has no identity element");
  if (*identity != 0)
    throw ValidationError("the identity must be element 0, found it at " +
                          std::to_string(*identity));

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw ValidationError("Cayley table is not associative: (a*b)*c != a*(b*c) for (a,b,c) = (" +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
  };
  FiniteGroup g;
  if (n <= 128) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
    g.assoc_check_ = AssociativityCheck::exhaustive;
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < 10 * n * n; ++s) check(pick(rng), pick(rng), pick(rng));
    g.assoc_check_ = AssociativityCheck::sampled;
  }

  g.order_ = n;
  g.mul_.assign(n * n + 1, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul_[a * n + b] = static_cast<std::uint16_t>(table[a][b]);
  g.finish();
  return g;
}

ClassData conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  ClassData cd;
  cd.class_of.assign(n, unset);
  cd.conjugator.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (cd.class_of[x] != unset) continue;
    const auto c = static_cast<std::uint32_t>(cd.classes.size());
    ConjugacyClass cls{x, {}};
    for (Element u = 0; u < n; ++u) {
      const Element y = g.mul(g.mul(u, x), g.inv(u));
      if (cd.class_of[y] == unset) {
        cd.class_of[y] = c;
        cd.conjugator[y] = u;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cd.classes.push_back(std::move(cls));
  }
  return cd;
}

EmbeddedGroup subgroup_from_members(const FiniteGroup& parent, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != FiniteGroup::identity())
    throw ValidationError("subgroup must contain the identity");
  EmbeddedGroup sub;
  sub.to_local.assign(parent.order(), -1);
  for (std::size_t k = 0; k < members.size(); ++k)
    sub.to_local[members[k]] = static_cast<std::int32_t>(k);
  const std::size_t m = members.size();
  FiniteGroup& local = sub.local;
  local.order_ = m;
  local.mul_.assign(m * m + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::int32_t k = sub.to_local[parent.mul(members[i], members[j])];
      if (k < 0) throw ValidationError("subgroup members are not closed under multiplication");
      local.mul_[i * m + j] = static_cast<std::uint16_t>(k);
    }
  if (parent.degree() > 0) {
    local.degree_ = parent.degree();
    local.perms_.reserve(m);
    for (auto e : members) local.perms_.push_back(parent.permutation(e));
  }
  local.assoc_check_ = AssociativityCheck::by_construction;
  local.finish();
  sub.members = std::move(members);
  return sub;
}

EmbeddedGroup centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> members;
  for (Element u = 0; u < g.order(); ++u)
    if (g.commute(u, x)) members.push_back(u);
  return subgroup_from_members(g, std::move(members));
}

std::vector<std::uint32_t> cycle_type(const FiniteGroup& g, Element x) {
  if (g.degree() == 0) return {};
  const Permutation& p = g.permutation(x);
  std::vector<bool> seen(p.size(), false);
  std::vector<std::uint32_t> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

}  // namespace dwcount
