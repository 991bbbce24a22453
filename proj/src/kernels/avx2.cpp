#include <immintrin.h>

#include <bit>

#include "zdg/kernels.hpp"

namespace zdg::kernels {
namespace {

// 32 bits, one per uint16 lane of the two inputs: set where the lanes are equal.
inline std::uint32_t equal_bits32(__m256i a0, __m256i b0, __m256i a1, __m256i b1) {
  const __m256i eq0 = _mm256_cmpeq_epi16(a0, b0);
  const __m256i eq1 = _mm256_cmpeq_epi16(a1, b1);
  // packs works per 128-bit lane; restore element order afterwards.
  const __m256i packed = _mm256_packs_epi16(eq0, eq1);
  const __m256i ordered = _mm256_permute4x64_epi64(packed, 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(ordered));
}

inline __m256i load(const std::uint16_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Nibble-lookup popcount; returns four 64-bit partial sums.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void diff_mask_avx2(const std::uint16_t* a, const std::uint16_t* b, std::size_t len,
                    std::uint64_t* out) {
  std::size_t i = 0;
  std::size_t w = 0;
  for (; i + 64 <= len; i += 64, ++w) {
    const std::uint32_t lo =
        equal_bits32(load(a + i), load(b + i), load(a + i + 16), load(b + i + 16));
    const std::uint32_t hi =
        equal_bits32(load(a + i + 32), load(b + i + 32), load(a + i + 48), load(b + i + 48));
    out[w] = ~((static_cast<std::uint64_t>(hi) << 32) | lo);
  }
  if (i < len) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (a[i + j] != b[i + j]) bits |= std::uint64_t{1} << j;
    }
    out[w] = bits;
  }
}

std::size_t mismatch_count_avx2(const std::uint16_t* a, const std::uint16_t* b,
                                std::size_t len) {
  std::size_t equal = 0;
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    equal += std::popcount(equal_bits32(load(a + i), load(b + i), load(a + i + 16),
                                        load(b + i + 16)));
  }
  std::size_t mismatches = i - equal;
  for (; i < len; ++i) mismatches += (a[i] != b[i]);
  return mismatches;
}

std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t n = horizontal_sum_epi64(acc);
  for (; i < words; ++i) n += std::popcount(a[i] & b[i]);
  return n;
}

std::size_t andnot_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                 std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // _mm256_andnot_si256(x, y) computes ~x & y.
    acc = _mm256_add_epi64(acc,
                           popcount_epi64(_mm256_andnot_si256(load(b + i), load(a + i))));
  }
  std::size_t n = horizontal_sum_epi64(acc);
  for (; i < words; ++i) n += std::popcount(a[i] & ~b[i]);
  return n;
}

bool is_subset_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0.
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

constexpr KernelTable kAvx2{
    Isa::Avx2,         diff_mask_avx2,       mismatch_count_avx2,
    and_popcount_avx2, andnot_popcount_avx2, is_subset_avx2,
};

}  // namespace

const KernelTable* avx2_table_impl() { return &kAvx2; }

}  // namespace zdg::kernels
