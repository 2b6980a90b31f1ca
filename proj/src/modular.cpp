#include "dwcount/modular.hpp"

#include <utility>

#include "dwcount/kernels.hpp"

namespace dwcount::modp {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) { return pow(a, p - 2, p); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

std::vector<std::size_t> row_reduce(Matrix& rows, std::uint32_t p) {
  const auto& k = kernels::active();
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    k.scale_mod(rows[rank], inverse(rows[rank][c], p), p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      k.axpy_mod(rows[r], rows[rank], p - rows[r][c], p);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

Matrix null_space(Matrix a, std::uint32_t p) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  const auto pivots = row_reduce(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, a[r][f], p);
    basis.push_back(std::move(v));
  }
  row_reduce(basis, p);
  return basis;
}

std::vector<std::uint32_t> characteristic_polynomial(Matrix h, std::uint32_t p) {
  const std::size_t n = h.size();
  const auto& k = kernels::active();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (auto& row : h) std::swap(row[piv], row[col + 1]);
    }
    const std::uint32_t inv_pivot = inverse(h[col + 1][col], p);
    for (std::size_t r = col + 2; r < n; ++r) {
      if (h[r][col] == 0) continue;
      const std::uint32_t u = mul(h[r][col], inv_pivot, p);
      k.axpy_mod(h[r], h[col + 1], p - u, p);  // row_r -= u * row_{col+1}
      for (std::size_t i = 0; i < n; ++i)      // col_{col+1} += u * col_r
        h[i][col + 1] = add(h[i][col + 1], mul(u, h[i][r], p), p);
    }
  }
  // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x) - sum_i t_i h[i-1][m-1] p_{i-1}(x)
  std::vector<std::vector<std::uint32_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = polys[m];
    cur.assign(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add(cur[d + 1], prev[d], p);
      cur[d] = sub(cur[d], mul(h[m - 1][m - 1], prev[d], p), p);
    }
    std::uint32_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul(t, h[i][i - 1], p);
      if (t == 0) break;
      const std::uint32_t coef = mul(t, h[i - 1][m - 1], p);
      const auto& pi = polys[i - 1];
      for (std::size_t d = 0; d < pi.size(); ++d) cur[d] = sub(cur[d], mul(coef, pi[d], p), p);
    }
  }
  return polys[n];
}

std::uint32_t evaluate(const std::vector<std::uint32_t>& poly, std::uint32_t x, std::uint32_t p) {
  std::uint32_t acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = add(mul(acc, x, p), poly[d], p);
  return acc;
}

}  // namespace dwcount::modp
