#include "dwcount/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace dwcount::kernels {
namespace {

Isa detect() {
  if (const char* env = std::getenv("DWCOUNT_ISA"); env && std::string_view(env) == "scalar")
    return Isa::scalar;
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const KernelTable& active() {
  return selected().load(std::memory_order_relaxed) == Isa::avx2 ? avx2_kernels()
                                                                  : scalar_kernels();
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported()) isa = Isa::scalar;
  selected().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace dwcount::kernels
