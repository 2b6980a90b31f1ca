#include "dwcount/lambda_basis.hpp"

#include <numeric>
#include <string>

#include "dwcount/errors.hpp"

namespace dwcount {
namespace {

void check_slope(std::int64_t a, std::int64_t b) {
  if (a < 1) throw ValidationError("slope (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") needs a >= 1");
  if (std::gcd(a, b) != 1)
    throw ValidationError("slope (" + std::to_string(a) + "," + std::to_string(b) +
                          ") is not coprime");
}

std::int64_t mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// inverse of a modulo n, for gcd(a, n) = 1
std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return mod(s0, n);
}

}  // namespace

std::int64_t eta_multiplier(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  const std::int64_t d = std::gcd(a, n);
  const std::int64_t m = n / d;
  const std::int64_t base = m == 1 ? 0 : inverse_mod(a / d, m);
  // Any c = base (mod n/d) satisfies a*c = d (mod n); only a unit c makes
  // y -> y^c a bijection of the group, which the reduction relies on.
  for (std::int64_t k = 0; k < d; ++k) {
    const std::int64_t c = base + k * m;
    if (std::gcd(c, n) == 1) return c;
  }
  throw ConsistencyError("no unit multiplier for a = " + std::to_string(a));
}

LambdaBasis build_lambda(std::shared_ptr<const FiniteGroup> group, std::uint64_t seed) {
  LambdaBasis lb;
  lb.group_ = std::move(group);
  lb.seed_ = seed;
  const FiniteGroup& g = *lb.group_;
  lb.conductor_ = static_cast<std::uint32_t>(g.exponent());
  lb.classes_ = conjugacy_classes(g);
  for (std::uint32_t c = 0; c < lb.classes_.size(); ++c) {
    ClassSector sector;
    sector.representative = lb.classes_.classes[c].representative;
    sector.centralizer = centralizer(g, sector.representative);
    sector.table = character_table(sector.centralizer.local, seed);
    for (const auto& row : sector.table.values) {
      std::vector<Cyclotomic> lifted;
      lifted.reserve(row.size());
      for (const auto& v : row) lifted.push_back(v.lifted(lb.conductor_));
      sector.values.push_back(std::move(lifted));
    }
    lb.offsets_.push_back(lb.indices_.size());
    for (std::uint32_t r = 0; r < sector.table.size(); ++r) lb.indices_.push_back({c, r});
    lb.sectors_.push_back(std::move(sector));
  }
  const auto& trivial_sector = lb.sectors_[lb.classes_.class_of[FiniteGroup::identity()]];
  bool found = false;
  for (std::uint32_t r = 0; r < trivial_sector.table.size() && !found; ++r) {
    bool all_one = true;
    for (const auto& v : trivial_sector.table.values[r]) all_one = all_one && v == Cyclotomic(1L);
    if (all_one) {
      lb.zero_ = {lb.classes_.class_of[FiniteGroup::identity()], r};
      found = true;
    }
  }
  if (!found) throw ConsistencyError("no trivial character in the identity sector");
  return lb;
}

std::uint32_t LambdaBasis::transported_class(Element x, Element h) const {
  const FiniteGroup& g = *group_;
  const auto& sector = sectors_[classes_.class_of[x]];
  const Element u = classes_.conjugator[x];
  const Element moved = g.mul(g.mul(g.inv(u), h), u);
  const std::int32_t local = sector.centralizer.to_local[moved];
  if (local < 0) throw ConsistencyError("transported element left the centralizer");
  return sector.table.class_data.class_of[static_cast<std::size_t>(local)];
}

Cyclotomic LambdaBasis::chi_eval(BasisIndex i, Element x, Element h) const {
  if (classes_.class_of[x] != i.class_index || !group_->commute(x, h))
    return Cyclotomic(0L).lifted(conductor_);
  return sectors_[i.class_index].values[i.char_row][transported_class(x, h)];
}

std::uint64_t LambdaBasis::dim_chi(BasisIndex i) const {
  return classes_.class_size(i.class_index) *
         sectors_[i.class_index].table.degrees[i.char_row];
}

Cyclotomic LambdaBasis::kappa(BasisIndex i) const {
  const auto& sector = sectors_[i.class_index];
  const auto local = sector.centralizer.to_local[sector.representative];
  const auto k = sector.table.class_data.class_of[static_cast<std::size_t>(local)];
  return sector.values[i.char_row][k] /
         Rational(static_cast<unsigned long>(sector.table.degrees[i.char_row]));
}

std::vector<Cyclotomic> LambdaBasis::eta_all(std::int64_t a, std::int64_t b) const {
  check_slope(a, b);
  const FiniteGroup& g = *group_;
  const auto n = static_cast<std::int64_t>(g.order());
  const std::int64_t d = std::gcd(a, n);
  const std::int64_t h_exp = mod(-b * eta_multiplier(a, n), n);

  // tally[c][k]: number of y with y^d in class c and the transported y^(-bc) in local class k
  std::vector<std::vector<long>> tally(sectors_.size());
  for (std::size_t c = 0; c < sectors_.size(); ++c) tally[c].assign(sectors_[c].table.size(), 0);
  for (Element y = 0; y < g.order(); ++y) {
    const Element x = g.power(y, d);
    const Element h = g.power(y, h_exp);
    ++tally[classes_.class_of[x]][transported_class(x, h)];
  }
  std::vector<Cyclotomic> out;
  out.reserve(indices_.size());
  for (const auto& i : indices_) {
    Cyclotomic sum = Cyclotomic(0L).lifted(conductor_);
    const auto& counts = tally[i.class_index];
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k] != 0) sum.add_scaled(sectors_[i.class_index].values[i.char_row][k], counts[k]);
    out.push_back(std::move(sum));
  }
  return out;
}

Cyclotomic LambdaBasis::eta(BasisIndex i, std::int64_t a, std::int64_t b) const {
  return eta_all(a, b)[position(i)];
}

Cyclotomic LambdaBasis::eta_direct(BasisIndex i, std::int64_t a, std::int64_t b) const {
  check_slope(a, b);
  const FiniteGroup& g = *group_;
  Cyclotomic sum = Cyclotomic(0L).lifted(conductor_);
  for (Element z = 0; z < g.order(); ++z) sum += chi_eval(i, g.power(z, a), g.power(z, -b));
  return sum;
}

Cyclotomic LambdaBasis::c_tilde(BasisIndex i) const {
  const FiniteGroup& g = *group_;
  const auto& sector = sectors_[i.class_index];
  const Element rep = sector.representative;
  Cyclotomic sum = Cyclotomic(0L).lifted(conductor_);
  if (g.mul(rep, rep) != FiniteGroup::identity()) return sum;
  for (Element h : sector.centralizer.members) sum += chi_eval(i, rep, g.mul(h, h));
  return sum / Rational(static_cast<unsigned long>(sector.centralizer.order()));
}

Cyclotomic LambdaBasis::s_entry(BasisIndex i, BasisIndex j) const {
  const FiniteGroup& g = *group_;
  const auto& sector = sectors_[j.class_index];
  Cyclotomic sum = Cyclotomic(0L).lifted(conductor_);
  for (Element x : classes_.classes[j.class_index].members) {
    const Element u = classes_.conjugator[x];
    for (Element m : sector.centralizer.members) {
      const Element h = g.mul(g.mul(u, m), g.inv(u));
      const Cyclotomic left = chi_eval(i, g.inv(h), x);
      if (left.is_zero()) continue;
      sum += left * chi_eval(j, x, h).conj();
    }
  }
  return sum / Rational(static_cast<unsigned long>(g.order()));
}

Rational LambdaBasis::s_zero(BasisIndex i) const {
  return ratio(static_cast<long>(dim_chi(i)), static_cast<long>(group_->order()));
}

std::vector<std::vector<Cyclotomic>> LambdaBasis::s_matrix_entries() const {
  const FiniteGroup& g = *group_;
  const std::size_t nc = sectors_.size();
  // blocks[ci][cj][ki][kj] counts commuting (x,h), x in c_j, h^-1 in c_i, by local classes
  std::vector<std::vector<std::vector<std::vector<long>>>> blocks(
      nc, std::vector<std::vector<std::vector<long>>>(nc));
  for (std::size_t ci = 0; ci < nc; ++ci)
    for (std::size_t cj = 0; cj < nc; ++cj)
      blocks[ci][cj].assign(sectors_[ci].table.size(),
                            std::vector<long>(sectors_[cj].table.size(), 0));
  for (std::size_t cj = 0; cj < nc; ++cj) {
    const auto& sector = sectors_[cj];
    for (Element x : classes_.classes[cj].members) {
      const Element u = classes_.conjugator[x];
      for (Element m : sector.centralizer.members) {
        const Element h = g.mul(g.mul(u, m), g.inv(u));
        const Element hinv = g.inv(h);
        const std::size_t ci = classes_.class_of[hinv];
        ++blocks[ci][cj][transported_class(hinv, x)][transported_class(x, h)];
      }
    }
  }
  const Rational scale(Rational(1) / Rational(static_cast<unsigned long>(g.order())));
  std::vector<std::vector<Cyclotomic>> s(indices_.size(),
                                         std::vector<Cyclotomic>(indices_.size()));
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    const auto [ci, ri] = indices_[p];
    for (std::size_t q = 0; q < indices_.size(); ++q) {
      const auto [cj, rj] = indices_[q];
      const auto& block = blocks[ci][cj];
      Cyclotomic sum = Cyclotomic(0L).lifted(conductor_);
      for (std::size_t kj = 0; kj < block.front().size(); ++kj) {
        Cyclotomic partial = Cyclotomic(0L).lifted(conductor_);
        for (std::size_t ki = 0; ki < block.size(); ++ki)
          if (block[ki][kj] != 0) partial.add_scaled(sectors_[ci].values[ri][ki], block[ki][kj]);
        if (!partial.is_zero()) sum += partial * sectors_[cj].values[rj][kj].conj();
      }
      s[p][q] = sum * scale;
    }
  }
  return s;
}

}  // namespace dwcount
