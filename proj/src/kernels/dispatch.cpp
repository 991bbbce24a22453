#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "zdg/kernels.hpp"

namespace zdg::kernels {

#if defined(ZDG_HAVE_AVX2)
const KernelTable* avx2_table_impl();
#endif

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* best_available() {
  if (const char* forced = std::getenv("ZDG_KERNELS")) {
    if (std::string(forced) == "scalar") return &scalar_table();
  }
  if (cpu_supports(Isa::Avx2)) {
    if (const KernelTable* t = avx2_table()) return t;
  }
  return &scalar_table();
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(ZDG_HAVE_AVX2)
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = best_available();
    const KernelTable* expected = nullptr;
    if (!g_active.compare_exchange_strong(expected, t, std::memory_order_acq_rel)) {
      t = expected;
    }
  }
  return *t;
}

void set_kernel_isa(Isa isa) {
  const KernelTable* t = nullptr;
  if (isa == Isa::Scalar) {
    t = &scalar_table();
  } else if (isa == Isa::Avx2 && cpu_supports(Isa::Avx2)) {
    t = avx2_table();
  }
  if (t == nullptr) {
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) +
                                "' is not available on this build or CPU");
  }
  g_active.store(t, std::memory_order_release);
}

void reset_kernel_isa() { g_active.store(best_available(), std::memory_order_release); }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace zdg::kernels
