#include "dwcount/seifert.hpp"

#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "dwcount/errors.hpp"

namespace dwcount {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SeifertData run() {
    SeifertData data;
    skip_space();
    if (peek() == 'O') {
      data.orientable_base = true;
    } else if (peek() == 'N') {
      data.orientable_base = false;
    } else {
      fail("expected 'O' or 'N'");
    }
    ++pos_;
    expect(';');
    expect('g');
    expect('=');
    const std::size_t genus_at = pos_;
    data.genus = integer();
    if (data.genus < 0) throw ParseError("genus must be nonnegative", genus_at);
    if (data.genus > kMaxGenus) throw ParseError("genus too large", genus_at);
    expect(';');
    skip_space();
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      expect('(');
      SeifertPair pair;
      pair.a = integer();
      expect(',');
      pair.b = integer();
      expect(')');
      if (pair.a < 1) throw ParseError("pair needs a >= 1", start);
      if (std::gcd(pair.a, pair.b) != 1) throw ParseError("pair is not coprime", start);
      data.pairs.push_back(pair);
      skip_space();
    }
    if (!data.orientable_base && data.genus < 1)
      throw ParseError("non-orientable base needs g >= 1", genus_at);
    return data;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxPairEntry) throw ParseError("integer out of range", start);
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational group_power(std::size_t order, long e) {
  return rational_pow(Rational(static_cast<unsigned long>(order)), e);
}

// prod_j eta_i(a_j, b_j) for every i, computing each distinct pair once.
std::vector<Cyclotomic> eta_products(const LambdaBasis& basis, const std::vector<SeifertPair>& pairs) {
  std::vector<Cyclotomic> prod(basis.size(), Cyclotomic(1L));
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Cyclotomic>> cache;
  for (const auto& p : pairs) {
    auto it = cache.find({p.a, p.b});
    if (it == cache.end()) it = cache.emplace(std::pair{p.a, p.b}, basis.eta_all(p.a, p.b)).first;
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= it->second[i];
  }
  return prod;
}

CountResult finish(const LambdaBasis& basis, std::vector<CountTerm> terms) {
  Cyclotomic total(0L);
  for (const auto& t : terms) total += t.term;
  const Rational value = total.rational_value();
  if (value.get_den() != 1) throw ConsistencyError("count " + value.get_str() + " is not an integer");
  if (value < 1) throw ConsistencyError("count " + value.get_str() + " is below 1");
  CountResult out;
  out.count = value.get_num();
  out.z = value / Rational(static_cast<unsigned long>(basis.group().order()));
  out.terms = std::move(terms);
  return out;
}

}  // namespace

SeifertData parse_seifert(std::string_view text) { return Parser(text).run(); }

std::string to_string(const SeifertData& data) {
  std::string out = data.orientable_base ? "O" : "N";
  out += ";g=" + std::to_string(data.genus) + ";";
  for (const auto& p : data.pairs) out += "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  return out;
}

void validate(const SeifertData& data) {
  if (data.genus < 0 || data.genus > kMaxGenus) throw ValidationError("genus out of range");
  if (!data.orientable_base && data.genus < 1)
    throw ValidationError("non-orientable base needs genus >= 1");
  for (const auto& p : data.pairs) {
    const std::string text = "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    if (p.a < 1) throw ValidationError("pair " + text + " needs a >= 1");
    if (p.a > kMaxPairEntry || p.b > kMaxPairEntry || p.b < -kMaxPairEntry)
      throw ValidationError("pair " + text + " out of range");
    if (std::gcd(p.a, p.b) != 1) throw ValidationError("pair " + text + " is not coprime");
  }
}

CountResult count_orientable(const LambdaBasis& basis, const SeifertData& data) {
  validate(data);
  if (!data.orientable_base) throw ValidationError("expected an orientable base");
  const long n = static_cast<long>(data.pairs.size());
  const long g = static_cast<long>(data.genus);
  const Rational prefactor = group_power(basis.group().order(), 2 * g - 1);
  const auto etas = eta_products(basis, data.pairs);
  std::vector<CountTerm> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto idx = basis.indices()[i];
    const Rational dim(static_cast<unsigned long>(basis.dim_chi(idx)));
    Cyclotomic term = etas[i] * (prefactor * rational_pow(dim, -(n + 2 * g - 2)));
    terms.push_back({idx, etas[i], std::move(term)});
  }
  return finish(basis, std::move(terms));
}

CountResult count_nonorientable(const LambdaBasis& basis, const SeifertData& data) {
  validate(data);
  if (data.orientable_base) throw ValidationError("expected a non-orientable base");
  const long n = static_cast<long>(data.pairs.size());
  const long g = static_cast<long>(data.genus);
  const Rational prefactor = group_power(basis.group().order(), g - 1);
  const auto etas = eta_products(basis, data.pairs);
  std::vector<CountTerm> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto idx = basis.indices()[i];
    const Rational ct = basis.c_tilde(idx).rational_value();
    const Rational dim(static_cast<unsigned long>(basis.dim_chi(idx)));
    Cyclotomic term =
        etas[i] * (prefactor * rational_pow(ct, g) * rational_pow(dim, -(n + g - 2)));
    terms.push_back({idx, etas[i], std::move(term)});
  }
  return finish(basis, std::move(terms));
}

CountResult count(const LambdaBasis& basis, const SeifertData& data) {
  return data.orientable_base ? count_orientable(basis, data) : count_nonorientable(basis, data);
}

Integer count_a5_specialized(const SeifertData& data) {
  validate(data);
  if (!data.orientable_base) throw ValidationError("the A5 closed form covers orientable bases only");
  const long g = static_cast<long>(data.genus);
  auto mod = [](std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; };

  bool all_odd = true, all_prime3 = true, all_prime5 = true;
  std::int64_t sum_b = 0, sum_ab = 0, sum_a3b = 0;
  for (const auto& p : data.pairs) {
    all_odd = all_odd && mod(p.a, 2) == 1;
    const std::int64_t a3 = mod(p.a, 3);
    all_prime3 = all_prime3 && a3 * a3 % 3 == 1;
    const std::int64_t a5 = mod(p.a, 5);
    all_prime5 = all_prime5 && a5 * a5 * a5 * a5 % 5 == 1;
    sum_b = mod(sum_b + mod(p.b, 2), 2);
    sum_ab = mod(sum_ab + a3 * mod(p.b, 3), 3);
    sum_a3b = mod(sum_a3b + a5 * a5 * a5 % 5 * mod(p.b, 5), 5);
  }

  Rational z(0);
  if (all_odd && sum_b == 0) z += rational_pow(4, 2 * g - 1);
  if (all_prime3 && sum_ab == 0) z += rational_pow(3, 2 * g - 1);
  if (all_prime5 && sum_a3b == 0) z += 2 * rational_pow(5, 2 * g - 1);

  // omega_j(p) for the characters of degree 1, 3, 3, 4, 5 (j = 1..5)
  const std::map<int, std::array<long, 5>> omega = {
      {2, {15, -15, -15, 0, 15}},
      {3, {20, 0, 0, 20, -20}},
      {5, {24, 12, 12, -24, 0}},
  };
  auto product = [&](int j, long degree) {
    Rational prod(1);
    for (const auto& p : data.pairs) {
      long sum = 0;
      for (const auto& [prime, w] : omega)
        if (p.a % prime == 0) sum += w[static_cast<std::size_t>(j)];
      prod *= 1 + ratio(sum, degree);
    }
    return prod;
  };
  z += rational_pow(60, 2 * g - 2) * product(0, 1);
  z += 2 * rational_pow(20, 2 * g - 2) * product(1, 3);
  z += rational_pow(15, 2 * g - 2) * product(3, 4);
  z += rational_pow(12, 2 * g - 2) * product(4, 5);

  const Rational total = 60 * z;
  if (total.get_den() != 1) throw ConsistencyError("A5 closed form gave " + total.get_str());
  return total.get_num();
}

}  // namespace dwcount
