#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Data-parallel inner loops shared by the metric and solver code.
//
// Every kernel has a portable scalar reference implementation. Wider variants
// are compiled into separate translation units and picked once at startup
// from what the CPU reports; `ZDG_KERNELS=scalar` in the environment, or
// set_kernel_isa(), pins the choice. All variants must agree bit for bit.

namespace zdg::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  // out[i/64] bit (i%64) set iff a[i] != b[i]; trailing bits of the last word are zero.
  void (*diff_mask)(const std::uint16_t* a, const std::uint16_t* b, std::size_t len,
                    std::uint64_t* out);
  // Number of positions where a and b differ.
  std::size_t (*mismatch_count)(const std::uint16_t* a, const std::uint16_t* b,
                                std::size_t len);
  // popcount(a & b)
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words);
  // popcount(a & ~b)
  std::size_t (*andnot_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                 std::size_t words);
  // (a & ~b) == 0, i.e. a is a subset of b
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const KernelTable& scalar_table();
// Null when the variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

// The table in use. Resolved on first call.
const KernelTable& active();

// Forces a variant; throws std::invalid_argument if it is unavailable.
void set_kernel_isa(Isa isa);
// Back to automatic selection.
void reset_kernel_isa();

std::string_view isa_name(Isa isa);

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace zdg::kernels
