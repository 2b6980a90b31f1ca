#include "dwcount/kernels.hpp"

namespace dwcount::kernels {
namespace {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t f,
              std::uint32_t p) {
  const std::uint64_t ff = f;
  for (std::size_t k = 0; k < y.size(); ++k)
    y[k] = static_cast<std::uint32_t>((y[k] + ff * x[k]) % p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t f, std::uint32_t p) {
  const std::uint64_t ff = f;
  for (auto& v : y) v = static_cast<std::uint32_t>((ff * v) % p);
}

void compose_each(std::span<std::uint32_t> acc, std::span<const std::uint32_t> rhs,
                  const std::uint16_t* table, std::uint32_t n) {
  for (std::size_t k = 0; k < acc.size(); ++k)
    acc[k] = table[static_cast<std::size_t>(acc[k]) * n + rhs[k]];
}

void compose_fixed(std::span<std::uint32_t> acc, std::uint32_t rhs, const std::uint16_t* table,
                   std::uint32_t n) {
  for (auto& a : acc) a = table[static_cast<std::size_t>(a) * n + rhs];
}

std::size_t keep_identity(std::span<std::uint32_t> cand, std::span<const std::uint32_t> acc) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < cand.size(); ++k)
    if (acc[k] == 0) cand[out++] = cand[k];
  return out;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{axpy_mod, scale_mod, compose_each, compose_fixed, keep_identity};
  return table;
}

}  // namespace dwcount::kernels
