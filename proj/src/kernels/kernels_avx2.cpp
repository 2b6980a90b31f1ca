#include "dwcount/kernels.hpp"

#include <array>
#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define DWCOUNT_HAVE_X86 1
#else
#define DWCOUNT_HAVE_X86 0
#endif

namespace dwcount::kernels {

#if DWCOUNT_HAVE_X86
namespace {

#define DWCOUNT_AVX2 __attribute__((target("avx2")))

// Gather indices are signed 32-bit; larger tables take the scalar path.
constexpr std::uint32_t kMaxGatherOrder = 46340;

// Reduces exact non-negative integers t < 2^53 held in doubles modulo p.
DWCOUNT_AVX2 inline __m256d reduce_pd(__m256d t, __m256d vp, __m256d vpinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vpinv));
  __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vp));
  const __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
  const __m256d big = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(big, vp));
}

DWCOUNT_AVX2 void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                           std::uint32_t f, std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(1.0 / p);
  const __m256d vf = _mm256_set1_pd(f);
  std::size_t k = 0;
  for (; k + 4 <= y.size(); k += 4) {
    const __m256d xd =
        _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + k)));
    const __m256d yd =
        _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y.data() + k)));
    const __m256d r = reduce_pd(_mm256_add_pd(_mm256_mul_pd(vf, xd), yd), vp, vpinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y.data() + k), _mm256_cvttpd_epi32(r));
  }
  const std::uint64_t ff = f;
  for (; k < y.size(); ++k) y[k] = static_cast<std::uint32_t>((y[k] + ff * x[k]) % p);
}

DWCOUNT_AVX2 void scale_mod(std::span<std::uint32_t> y, std::uint32_t f, std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(1.0 / p);
  const __m256d vf = _mm256_set1_pd(f);
  std::size_t k = 0;
  for (; k + 4 <= y.size(); k += 4) {
    const __m256d yd =
        _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y.data() + k)));
    const __m256d r = reduce_pd(_mm256_mul_pd(vf, yd), vp, vpinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y.data() + k), _mm256_cvttpd_epi32(r));
  }
  const std::uint64_t ff = f;
  for (; k < y.size(); ++k) y[k] = static_cast<std::uint32_t>((ff * y[k]) % p);
}

// 16-bit table entries are fetched with a 32-bit gather at scale 2 and
// masked; the table carries one element of padding so the last read stays
// in bounds.
DWCOUNT_AVX2 void compose_each(std::span<std::uint32_t> acc, std::span<const std::uint32_t> rhs,
                               const std::uint16_t* table, std::uint32_t n) {
  std::size_t k = 0;
  if (n <= kMaxGatherOrder) {
    const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
    const __m256i lo = _mm256_set1_epi32(0xFFFF);
    const int* base = reinterpret_cast<const int*>(table);
    for (; k + 8 <= acc.size(); k += 8) {
      auto* pa = reinterpret_cast<__m256i*>(acc.data() + k);
      const __m256i a = _mm256_loadu_si256(pa);
      const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs.data() + k));
      const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(a, vn), r);
      _mm256_storeu_si256(pa, _mm256_and_si256(_mm256_i32gather_epi32(base, idx, 2), lo));
    }
  }
  for (; k < acc.size(); ++k) acc[k] = table[static_cast<std::size_t>(acc[k]) * n + rhs[k]];
}

DWCOUNT_AVX2 void compose_fixed(std::span<std::uint32_t> acc, std::uint32_t rhs,
                                const std::uint16_t* table, std::uint32_t n) {
  std::size_t k = 0;
  if (n <= kMaxGatherOrder) {
    const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
    const __m256i vr = _mm256_set1_epi32(static_cast<int>(rhs));
    const __m256i lo = _mm256_set1_epi32(0xFFFF);
    const int* base = reinterpret_cast<const int*>(table);
    for (; k + 8 <= acc.size(); k += 8) {
      auto* pa = reinterpret_cast<__m256i*>(acc.data() + k);
      const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(_mm256_loadu_si256(pa), vn), vr);
      _mm256_storeu_si256(pa, _mm256_and_si256(_mm256_i32gather_epi32(base, idx, 2), lo));
    }
  }
  for (; k < acc.size(); ++k) acc[k] = table[static_cast<std::size_t>(acc[k]) * n + rhs];
}

// Lane shuffles that pack the selected lanes of an 8-lane vector to the front.
constexpr std::array<std::array<std::uint32_t, 8>, 256> make_compaction_lut() {
  std::array<std::array<std::uint32_t, 8>, 256> lut{};
  for (unsigned m = 0; m < 256; ++m) {
    unsigned out = 0;
    for (unsigned lane = 0; lane < 8; ++lane)
      if (m & (1u << lane)) lut[m][out++] = lane;
    for (; out < 8; ++out) lut[m][out] = 0;
  }
  return lut;
}
constexpr auto kCompactionLut = make_compaction_lut();

DWCOUNT_AVX2 std::size_t keep_identity(std::span<std::uint32_t> cand,
                                       std::span<const std::uint32_t> acc) {
  std::size_t out = 0;
  std::size_t k = 0;
  for (; k + 8 <= cand.size(); k += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc.data() + k));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cand.data() + k));
    const __m256i hit = _mm256_cmpeq_epi32(a, _mm256_setzero_si256());
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)));
    const __m256i perm =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(kCompactionLut[mask].data()));
    // out <= k, so the 8-lane store only touches lanes already loaded.
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(cand.data() + out),
                        _mm256_permutevar8x32_epi32(c, perm));
    out += static_cast<std::size_t>(std::popcount(mask));
  }
  for (; k < cand.size(); ++k)
    if (acc[k] == 0) cand[out++] = cand[k];
  return out;
}

}  // namespace

bool avx2_supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

const KernelTable& avx2_kernels() {
  static const KernelTable table{axpy_mod, scale_mod, compose_each, compose_fixed, keep_identity};
  return table;
}

#else

bool avx2_supported() { return false; }
const KernelTable& avx2_kernels() { return scalar_kernels(); }

#endif

}  // namespace dwcount::kernels
