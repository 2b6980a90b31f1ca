#include "dwcount/tqft.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "dwcount/errors.hpp"

namespace dwcount {

CommutingPairs::CommutingPairs(const FiniteGroup& g) {
  offset_.reserve(g.order() + 1);
  for (Element x = 0; x < g.order(); ++x) {
    offset_.push_back(xs_.size());
    for (Element h = 0; h < g.order(); ++h) {
      if (!g.commute(x, h)) continue;
      xs_.push_back(x);
      hs_.push_back(h);
    }
  }
  offset_.push_back(xs_.size());
}

std::int64_t CommutingPairs::find(Element x, Element h) const {
  const auto first = hs_.begin() + static_cast<std::ptrdiff_t>(offset_[x]);
  const auto last = hs_.begin() + static_cast<std::ptrdiff_t>(offset_[x + 1]);
  const auto it = std::lower_bound(first, last, h);
  if (it == last || *it != h) return -1;
  return it - hs_.begin();
}

namespace {

Cyclotomic zero_at(std::uint32_t conductor) { return Cyclotomic(0L).lifted(conductor); }

}  // namespace

TorusSpace::TorusSpace(const LambdaBasis& basis)
    : basis_(&basis), pairs_(basis.group()), s_(basis.s_matrix_entries()) {}

PairFunction TorusSpace::chi_function(std::size_t i) const {
  const auto idx = basis_->indices()[i];
  PairFunction f;
  f.reserve(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k) f.push_back(basis_->chi_eval(idx, pairs_.x(k), pairs_.h(k)));
  return f;
}

PairFunction TorusSpace::tau_function(std::size_t i) const {
  const auto idx = basis_->indices()[i];
  const FiniteGroup& g = basis_->group();
  PairFunction f;
  f.reserve(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k)
    f.push_back(basis_->chi_eval(idx, pairs_.h(k), g.inv(pairs_.x(k))));
  return f;
}

Cyclotomic TorusSpace::inner(const PairFunction& f, const PairFunction& g) const {
  Cyclotomic sum = zero_at(basis_->conductor());
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (f[k].is_zero() || g[k].is_zero()) continue;
    sum += f[k] * g[k].conj();
  }
  return sum / Rational(static_cast<unsigned long>(basis_->group().order()));
}

PairFunction TorusSpace::expand(const EVector& v) const {
  PairFunction f(pairs_.size(), zero_at(basis_->conductor()));
  for (std::size_t i = 0; i < basis_->size(); ++i) {
    if (v.coords[i].is_zero()) continue;
    const PairFunction bf = v.tag == BasisTag::chi ? chi_function(i) : tau_function(i);
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (!bf[k].is_zero()) f[k] += v.coords[i] * bf[k];
  }
  return f;
}

EVector TorusSpace::coordinates(const PairFunction& f, BasisTag tag) const {
  EVector v{tag, {}};
  v.coords.reserve(basis_->size());
  for (std::size_t i = 0; i < basis_->size(); ++i)
    v.coords.push_back(inner(f, tag == BasisTag::chi ? chi_function(i) : tau_function(i)));
  if (expand(v) != f) throw ConsistencyError("function is not in the span of the basis");
  return v;
}

EVector TorusSpace::to_tau(const EVector& v) const {
  if (v.tag == BasisTag::tau) return v;
  // t_j = sum_i a_i s_i^j
  EVector out{BasisTag::tau, std::vector<Cyclotomic>(basis_->size(), zero_at(basis_->conductor()))};
  for (std::size_t i = 0; i < basis_->size(); ++i) {
    if (v.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < basis_->size(); ++j) out.coords[j] += v.coords[i] * s_[i][j];
  }
  return out;
}

EVector TorusSpace::to_chi(const EVector& v) const {
  if (v.tag == BasisTag::chi) return v;
  // a_i = sum_j conj(s_i^j) t_j
  EVector out{BasisTag::chi, std::vector<Cyclotomic>(basis_->size(), zero_at(basis_->conductor()))};
  for (std::size_t i = 0; i < basis_->size(); ++i)
    for (std::size_t j = 0; j < basis_->size(); ++j)
      if (!v.coords[j].is_zero()) out.coords[i] += s_[i][j].conj() * v.coords[j];
  return out;
}

EOperator TorusSpace::s_matrix() const {
  const std::size_t n = basis_->size();
  EOperator op{BasisTag::chi, BasisTag::chi, std::vector<std::vector<Cyclotomic>>(n, std::vector<Cyclotomic>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.matrix[j][i] = s_[i][j];
  return op;
}

EOperator TorusSpace::t_matrix() const {
  const std::size_t n = basis_->size();
  EOperator op{BasisTag::chi, BasisTag::chi,
               std::vector<std::vector<Cyclotomic>>(n, std::vector<Cyclotomic>(n, zero_at(basis_->conductor())))};
  for (std::size_t i = 0; i < n; ++i) op.matrix[i][i] = basis_->kappa(basis_->indices()[i]);
  return op;
}

EVector TorusSpace::apply(const EOperator& op, const EVector& v) const {
  const EVector in = op.domain == BasisTag::chi ? to_chi(v) : to_tau(v);
  EVector out{op.codomain, std::vector<Cyclotomic>(op.matrix.size(), zero_at(basis_->conductor()))};
  for (std::size_t r = 0; r < op.matrix.size(); ++r)
    for (std::size_t c = 0; c < in.coords.size(); ++c)
      if (!in.coords[c].is_zero() && !op.matrix[r][c].is_zero()) out.coords[r] += op.matrix[r][c] * in.coords[c];
  return out;
}

PairFunction TorusSpace::sl2_action(const PairFunction& f, std::int64_t a, std::int64_t b, std::int64_t c,
                                    std::int64_t d) const {
  if (a * d - b * c != 1) throw ValidationError("matrix is not in SL(2,Z)");
  const FiniteGroup& g = basis_->group();
  PairFunction out;
  out.reserve(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const Element x = pairs_.x(k), h = pairs_.h(k);
    const Element x2 = g.mul(g.power(x, a), g.power(h, b));
    const Element h2 = g.mul(g.power(x, c), g.power(h, d));
    out.push_back(f[static_cast<std::size_t>(pairs_.find(x2, h2))]);
  }
  return out;
}

EVector TorusSpace::fusion_product(const EVector& left, const EVector& right) const {
  const FiniteGroup& g = basis_->group();
  const PairFunction f = expand(left), gf = expand(right);
  PairFunction out(pairs_.size(), zero_at(basis_->conductor()));
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const Element x = pairs_.x(k), h = pairs_.h(k);
    // x1 ranges over C(h); pairs (h, x1) enumerate it
    const auto first = static_cast<std::size_t>(pairs_.find(h, FiniteGroup::identity()));
    for (std::size_t q = first; q < pairs_.size() && pairs_.x(q) == h; ++q) {
      const Element x1 = pairs_.h(q);
      const auto k1 = static_cast<std::size_t>(pairs_.find(x1, h));
      if (f[k1].is_zero()) continue;
      const auto k2 = static_cast<std::size_t>(pairs_.find(g.mul(g.inv(x1), x), h));
      if (gf[k2].is_zero()) continue;
      out[k] += f[k1] * gf[k2];
    }
  }
  return coordinates(out, left.tag);
}

PairFunction TorusSpace::solid_torus_function(std::int64_t a, std::int64_t b) const {
  if (a < 1 || std::gcd(a, b) != 1) throw ValidationError("solid torus slope needs a >= 1 and gcd(a, b) = 1");
  const FiniteGroup& g = basis_->group();
  PairFunction f;
  f.reserve(pairs_.size());
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const Element v = g.mul(g.power(pairs_.x(k), a), g.power(pairs_.h(k), b));
    f.push_back(Cyclotomic(v == FiniteGroup::identity() ? 1L : 0L));
  }
  return f;
}

EVector TorusSpace::z_solid_torus(std::int64_t a, std::int64_t b) const {
  const EVector v = coordinates(solid_torus_function(a, b), BasisTag::tau);
  const auto eta = basis_->eta_all(a, b);
  const Rational scale = Rational(1) / Rational(static_cast<unsigned long>(basis_->group().order()));
  for (std::size_t i = 0; i < basis_->size(); ++i)
    if (v.coords[i] != eta[i] * scale)
      throw ConsistencyError("solid torus state disagrees with eta at slope (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
  return v;
}

std::vector<Rational> TorusSpace::surface_diagonal(std::int64_t genus, std::int64_t p, std::int64_t q) const {
  if (genus < 0 || p < 1 || q < 1) throw ValidationError("surface needs g >= 0 and p, q >= 1");
  std::vector<Rational> d;
  d.reserve(basis_->size());
  for (const auto& idx : basis_->indices())
    d.push_back(rational_pow(basis_->s_zero(idx), -(p + q + 2 * genus - 2)));
  return d;
}

std::vector<Cyclotomic> TorusSpace::apply_surface(std::int64_t genus, std::int64_t q,
                                                  const std::vector<EVector>& inputs) const {
  const auto diag = surface_diagonal(genus, static_cast<std::int64_t>(inputs.size()), q);
  std::vector<Cyclotomic> out;
  out.reserve(diag.size());
  for (const auto& d : diag) out.emplace_back(d);
  for (const auto& in : inputs) {
    const EVector t = to_tau(in);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= t.coords[i];
  }
  return out;
}

std::vector<Rational> TorusSpace::crosscap_pairing(std::int64_t genus) const {
  const Rational order(static_cast<unsigned long>(basis_->group().order()));
  std::vector<Rational> out;
  for (const auto& idx : basis_->indices()) {
    const Rational ct = basis_->c_tilde(idx).rational_value();
    const Rational ratio_ = order / Rational(static_cast<unsigned long>(basis_->dim_chi(idx)));
    out.push_back(rational_pow(ratio_, genus - 1) * rational_pow(ct, genus));
  }
  return out;
}

std::vector<Cyclotomic> TorusSpace::crosscap_pairing_direct(std::int64_t genus, std::uint64_t max_cost) const {
  const FiniteGroup& g = basis_->group();
  const std::size_t n = g.order();
  std::uint64_t cost = 0;
  for (Element h = 0; h < n; ++h) {
    if (g.mul(h, h) != FiniteGroup::identity()) continue;
    std::uint64_t centralizer_order = 0;
    for (Element y = 0; y < n; ++y) centralizer_order += g.commute(h, y) ? 1 : 0;
    cost += static_cast<std::uint64_t>(genus) * centralizer_order * centralizer_order;
    if (cost > max_cost) return {};
  }

  // Z(F_g)(x, h) = [h^2 = e] #{y in C(h)^g : y_1^2 ... y_g^2 = x}
  PairFunction f(pairs_.size(), Cyclotomic(0L));
  for (Element h = 0; h < n; ++h) {
    if (g.mul(h, h) != FiniteGroup::identity()) continue;
    std::vector<Element> cent;
    for (Element y = 0; y < n; ++y)
      if (g.commute(h, y)) cent.push_back(y);
    std::map<Element, Integer> squares;
    for (Element y : cent) squares[g.mul(y, y)] += 1;
    std::map<Element, Integer> dist{{FiniteGroup::identity(), Integer(1)}};
    for (std::int64_t step = 0; step < genus; ++step) {
      std::map<Element, Integer> next;
      for (const auto& [u, cu] : dist)
        for (const auto& [z, cz] : squares) next[g.mul(u, z)] += cu * cz;
      dist = std::move(next);
    }
    for (const auto& [x, cnt] : dist)
      f[static_cast<std::size_t>(pairs_.find(x, h))] = Cyclotomic(Rational(cnt));
  }
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < basis_->size(); ++i) out.push_back(inner(f, tau_function(i)));
  return out;
}

StructuralResult z_seifert_structural(const TorusSpace& space, const SeifertData& data) {
  validate(data);
  std::vector<SeifertPair> pairs = data.pairs;
  // Gluing in an unexceptional solid torus leaves the manifold unchanged and
  // keeps the surface operator's input side nonempty.
  if (pairs.empty()) pairs.push_back({1, 0});

  std::vector<EVector> states;
  states.reserve(pairs.size());
  for (const auto& p : pairs) states.push_back(space.z_solid_torus(p.a, p.b));

  StructuralResult result;
  Cyclotomic z(0L);
  if (data.orientable_base) {
    const auto coef = space.apply_surface(data.genus, 1, states);
    const EVector cap = space.z_solid_torus(1, 0);
    for (std::size_t i = 0; i < coef.size(); ++i) z += coef[i] * cap.coords[i].conj();
  } else {
    const auto coef = space.apply_surface(0, 1, states);
    const auto pairing = space.crosscap_pairing(data.genus);
    const auto direct = space.crosscap_pairing_direct(data.genus);
    if (!direct.empty()) {
      for (std::size_t i = 0; i < pairing.size(); ++i)
        if (direct[i] != Cyclotomic(pairing[i]))
          throw ConsistencyError("crosscap state disagrees with its closed form");
      result.crosscap_cross_checked = true;
    }
    for (std::size_t i = 0; i < coef.size(); ++i) z += coef[i] * pairing[i];
  }
  result.z = z.rational_value();
  return result;
}

}  // namespace dwcount
