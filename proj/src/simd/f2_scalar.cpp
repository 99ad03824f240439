#include "f2_kernels_impl.hpp"

#include <bit>

namespace kfloer::simd::scalar {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) dst[k] ^= src[k];
}

bool is_zero(const std::uint64_t* a, std::size_t words) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words; ++k) acc |= a[k];
  return acc == 0;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) {
    if (a[k] & b[k]) return true;
  }
  return false;
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < words; ++k) n += static_cast<std::size_t>(std::popcount(a[k]));
  return n;
}

}  // namespace kfloer::simd::scalar
