#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace metricdim::kernels {

/// Word-level bitset primitives behind the subset-search inner loops.
/// The scalar implementations are the reference; SIMD variants must agree
/// bit for bit on every input and are selected at runtime.
struct BitKernels {
    /// acc |= row
    void (*or_into)(std::uint64_t* acc, const std::uint64_t* row, std::size_t words);
    /// (acc & full) == full
    bool (*covers)(const std::uint64_t* acc, const std::uint64_t* full, std::size_t words);
    /// ((acc | row) & full) == full, without writing acc
    bool (*or_covers)(const std::uint64_t* acc, const std::uint64_t* row,
                      const std::uint64_t* full, std::size_t words);
    /// popcount(row & ~acc)
    std::size_t (*andnot_popcount)(const std::uint64_t* row, const std::uint64_t* acc,
                                   std::size_t words);
    const char* name;
};

const BitKernels& scalar_kernels();

/// AVX2 variant, or nullptr when the CPU (or build target) lacks AVX2.
const BitKernels* avx2_kernels();

/// Best available backend. Honors METRICDIM_KERNELS=scalar|avx2 on first use.
const BitKernels& active_kernels();

/// Force a backend by name ("scalar", "avx2"). Returns false if unavailable.
bool force_kernels(std::string_view name);

} // namespace metricdim::kernels
