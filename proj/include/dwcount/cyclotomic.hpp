#pragma once

// Exact elements of cyclotomic fields Q(zeta_m), stored as rational
// coefficients on zeta_m^k for 0 <= k < phi(m), always reduced modulo the
// m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dwcount {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in canonical form.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// r^e for any integer e (r nonzero when e < 0).
Rational rational_pow(const Rational& r, long e);

// Integer coefficients of Phi_m, lowest degree first (cached, thread-safe).
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

std::uint32_t euler_phi(std::uint32_t m);

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}  // NOLINT: implicit by design of a number type
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}   // NOLINT

  // zeta_m^k for any integer k.
  static Cyclotomic root_of_unity(std::uint32_t m, std::int64_t k);
  // sum_t weights[t] * zeta_m^t, with weights.size() == m.
  static Cyclotomic from_root_weights(std::uint32_t m, std::span<const Rational> weights);

  std::uint32_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  // The same value expressed over Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic lifted(std::uint32_t m) const;

  bool is_zero() const;
  bool is_rational() const;
  // Throws ConsistencyError when the value is not rational.
  Rational rational_value() const;

  std::complex<double> to_complex() const;
  Cyclotomic conj() const;
  Cyclotomic pow(std::uint32_t e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);
  // this += w * o, skipping the temporary.
  Cyclotomic& add_scaled(const Cyclotomic& o, const Rational& w);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // GAP-style text, e.g. "-1-E(5)^2" where E(m) is exp(2*pi*i/m).
  std::string to_string() const;

 private:
  Cyclotomic(std::uint32_t m, std::vector<Rational> coeffs);
  static Cyclotomic reduce(std::uint32_t m, std::vector<Rational> dense);

  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

}  // namespace dwcount
