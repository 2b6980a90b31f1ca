#include "dwcount/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "dwcount/errors.hpp"

namespace dwcount {

Rational rational_pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw ValidationError("zero to a negative power");
    return rational_pow(Rational(1) / r, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

namespace {

std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint32_t m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);  // monic
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
      const std::int64_t c = num[k];
      quot[k - dd] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
      if (k == dd) break;
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<std::vector<std::int64_t>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<std::vector<std::int64_t>>(
      m == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic_polynomial(m));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(m, std::move(poly));
  return *it->second;
}

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t result = m;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Cyclotomic::Cyclotomic(std::uint32_t m, std::vector<Rational> coeffs)
    : conductor_(m), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::reduce(std::uint32_t m, std::vector<Rational> dense) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = dense.size(); k-- > deg;) {
    if (sgn(dense[k]) == 0) continue;
    const Rational c = dense[k];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) dense[k - deg + j] -= c * phi[j];
    dense[k] = 0;
  }
  dense.resize(deg);
  return Cyclotomic(m, std::move(dense));
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t m, std::int64_t k) {
  if (m == 0) throw ValidationError("root of unity of order 0");
  std::int64_t e = k % static_cast<std::int64_t>(m);
  if (e < 0) e += m;
  std::vector<Rational> dense(m);
  dense[static_cast<std::size_t>(e)] = 1;
  return reduce(m, std::move(dense));
}

Cyclotomic Cyclotomic::from_root_weights(std::uint32_t m, std::span<const Rational> weights) {
  if (weights.size() != m) throw ValidationError("root weights must have one entry per power");
  return reduce(m, std::vector<Rational>(weights.begin(), weights.end()));
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw ValidationError("cannot lift conductor " + std::to_string(conductor_) + " to " +
                          std::to_string(m));
  const std::uint32_t step = m / conductor_;
  std::vector<Rational> dense(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) dense[k * step] = coeffs_[k];
  return reduce(m, std::move(dense));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw ConsistencyError("value " + to_string() + " is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ <= 2) return *this;
  std::vector<Rational> dense(conductor_);
  dense[0] = coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) dense[conductor_ - k] = coeffs_[k];
  return reduce(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::pow(std::uint32_t e) const {
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic& Cyclotomic::add_scaled(const Cyclotomic& o, const Rational& w) {
  if (sgn(w) == 0) return *this;
  if (o.conductor_ != conductor_) {
    const std::uint32_t m = std::lcm(conductor_, o.conductor_);
    if (m != conductor_) *this = lifted(m);
    if (m != o.conductor_) return add_scaled(o.lifted(m), w);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(o.coeffs_[k]) != 0) coeffs_[k] += w * o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) return add_scaled(o, 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) return add_scaled(o, -1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1) return b * a.coeffs_[0];
  if (b.conductor_ == 1) return a * b.coeffs_[0];
  if (a.conductor_ != b.conductor_) {
    const std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m) * b.lifted(m);
  }
  const std::size_t n = a.coeffs_.size();
  std::vector<Rational> dense(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(b.coeffs_[j]) != 0) dense[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic::reduce(a.conductor_, std::move(dense));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (sgn(r) == 0) throw ValidationError("division by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  const std::string root = "E(" + std::to_string(conductor_) + ")";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      const std::string power = k == 1 ? root : root + "^" + std::to_string(k);
      if (c == 1)
        term = power;
      else if (c == -1)
        term = "-" + power;
      else
        term = c.get_str() + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace dwcount
