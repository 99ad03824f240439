#pragma once

// Word-level kernels for bit-packed GF(2) vectors. Every kernel has a scalar
// reference implementation; an AVX2 variant is compiled with a function-level
// target attribute and selected at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace kfloer::simd {

enum class Backend { Scalar, Avx2 };

struct F2Kernels {
  Backend backend;
  /// dst[k] ^= src[k] for k < words.
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  /// True iff every word is zero.
  bool (*is_zero)(const std::uint64_t* a, std::size_t words);
  /// True iff a & b has a set bit.
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// Number of set bits.
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
};

/// Whether the backend can run on this machine.
bool available(Backend backend) noexcept;

/// The kernel table for a specific backend. Requires available(backend).
const F2Kernels& kernels_for(Backend backend);

/// The kernel table chosen once at startup (AVX2 when available, else scalar).
/// Setting the environment variable KFLOER_SIMD=scalar forces the scalar path.
const F2Kernels& active_kernels() noexcept;

std::string_view backend_name(Backend backend) noexcept;

}  // namespace kfloer::simd
