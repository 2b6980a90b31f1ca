#pragma once

// Data-parallel inner loops used by the modular linear algebra (character
// tables) and by the exhaustive homomorphism search.  Every kernel has a
// scalar reference implementation; an AVX2 variant is selected at runtime
// when the CPU supports it.  Both must produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dwcount::kernels {

enum class Isa { scalar, avx2 };

// Largest modulus the mod-p kernels accept (products must stay exact in a double).
inline constexpr std::uint32_t kMaxModulus = 1u << 26;

struct KernelTable {
  // y[k] = (y[k] + f * x[k]) mod p, with all inputs already reduced mod p.
  void (*axpy_mod)(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                   std::uint32_t f, std::uint32_t p);
  // y[k] = (f * y[k]) mod p.
  void (*scale_mod)(std::span<std::uint32_t> y, std::uint32_t f, std::uint32_t p);
  // acc[k] = table[acc[k] * n + rhs[k]]   (table is a padded n*n uint16 array).
  void (*compose_each)(std::span<std::uint32_t> acc, std::span<const std::uint32_t> rhs,
                       const std::uint16_t* table, std::uint32_t n);
  // acc[k] = table[acc[k] * n + rhs].
  void (*compose_fixed)(std::span<std::uint32_t> acc, std::uint32_t rhs,
                        const std::uint16_t* table, std::uint32_t n);
  // Stable compaction: keeps cand[k] where acc[k] == 0, returns the number kept.
  std::size_t (*keep_identity)(std::span<std::uint32_t> cand, std::span<const std::uint32_t> acc);
};

const KernelTable& scalar_kernels();
// Only valid to call when avx2_supported() is true.
const KernelTable& avx2_kernels();
bool avx2_supported();

// The table chosen for this process (AVX2 when available unless the
// DWCOUNT_ISA=scalar environment variable is set, or overridden via set_isa).
const KernelTable& active();
Isa active_isa();
void set_isa(Isa isa);
std::string_view isa_name(Isa isa);

}  // namespace dwcount::kernels
