#pragma once

#include <cstddef>
#include <cstdint>

namespace kfloer::simd {

namespace scalar {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
bool is_zero(const std::uint64_t* a, std::size_t words);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t popcount(const std::uint64_t* a, std::size_t words);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define KFLOER_HAVE_AVX2_KERNELS 1
namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
bool is_zero(const std::uint64_t* a, std::size_t words);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t popcount(const std::uint64_t* a, std::size_t words);
}  // namespace avx2
#endif

}  // namespace kfloer::simd
