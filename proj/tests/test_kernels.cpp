#include <doctest.h>

#include <random>
#include <vector>

#include "dwcount/group_io.hpp"
#include "dwcount/kernels.hpp"

using namespace dwcount;

namespace {

std::vector<std::uint32_t> random_vector(std::mt19937& rng, std::size_t n, std::uint32_t bound) {
  std::uniform_int_distribution<std::uint32_t> d(0, bound - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!kernels::avx2_supported()) {
    MESSAGE("AVX2 not available on this machine; only the scalar path is exercised");
    return;
  }
  const auto& s = kernels::scalar_kernels();
  const auto& v = kernels::avx2_kernels();
  std::mt19937 rng(12345);

  SUBCASE("modular axpy and scale") {
    for (std::uint32_t p : {2u, 3u, 31u, 61u, 65521u, 1048573u, 67108859u}) {
      for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 100u}) {
        auto y1 = random_vector(rng, n, p), x = random_vector(rng, n, p);
        auto y2 = y1;
        const std::uint32_t f = random_vector(rng, 1, p)[0];
        s.axpy_mod(y1, x, f, p);
        v.axpy_mod(y2, x, f, p);
        CHECK(y1 == y2);
        s.scale_mod(y1, f, p);
        v.scale_mod(y2, f, p);
        CHECK(y1 == y2);
      }
    }
  }

  SUBCASE("table composition and compaction") {
    for (const char* name : {"C2", "S3", "A5", "S5", "A6", "C97"}) {
      const FiniteGroup g = builtin_group(name);
      const auto n = static_cast<std::uint32_t>(g.order());
      for (std::size_t len : {0u, 1u, 5u, 8u, 13u, 64u, 257u}) {
        auto a1 = random_vector(rng, len, n), rhs = random_vector(rng, len, n);
        auto a2 = a1;
        s.compose_each(a1, rhs, g.table_data(), n);
        v.compose_each(a2, rhs, g.table_data(), n);
        CHECK(a1 == a2);
        const std::uint32_t fixed = random_vector(rng, 1, n)[0];
        s.compose_fixed(a1, fixed, g.table_data(), n);
        v.compose_fixed(a2, fixed, g.table_data(), n);
        CHECK(a1 == a2);
        for (std::size_t k = 0; k < len; ++k) CHECK(a1[k] < n);
      }
    }
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 200u}) {
      auto acc = random_vector(rng, len, 3);  // about a third are zero
      auto c1 = random_vector(rng, len, 1000);
      auto c2 = c1;
      const std::size_t k1 = s.keep_identity(c1, acc);
      const std::size_t k2 = v.keep_identity(c2, acc);
      REQUIRE(k1 == k2);
      c1.resize(k1);
      c2.resize(k2);
      CHECK(c1 == c2);
    }
  }
}

TEST_CASE("isa selection can be forced") {
  const auto before = kernels::active_isa();
  kernels::set_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
  kernels::set_isa(before);
  CHECK(kernels::active_isa() == before);
}
