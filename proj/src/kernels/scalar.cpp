#include <bit>

#include "zdg/kernels.hpp"

namespace zdg::kernels {
namespace {

void diff_mask_scalar(const std::uint16_t* a, const std::uint16_t* b, std::size_t len,
                      std::uint64_t* out) {
  const std::size_t words = words_for(len);
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

std::size_t mismatch_count_scalar(const std::uint16_t* a, const std::uint16_t* b,
                                  std::size_t len) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < len; ++i) n += (a[i] != b[i]);
  return n;
}

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += std::popcount(a[i] & b[i]);
  return n;
}

std::size_t andnot_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                   std::size_t words) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += std::popcount(a[i] & ~b[i]);
  return n;
}

bool is_subset_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

constexpr KernelTable kScalar{
    Isa::Scalar,          diff_mask_scalar,       mismatch_count_scalar,
    and_popcount_scalar,  andnot_popcount_scalar, is_subset_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace zdg::kernels
