#include "kfloer/f2_kernels.hpp"

#include "f2_kernels_impl.hpp"
#include "kfloer/errors.hpp"

#include <cstdlib>
#include <string>

namespace kfloer::simd {

namespace {

const F2Kernels kScalar{Backend::Scalar, scalar::xor_into, scalar::is_zero, scalar::intersects,
                        scalar::popcount};

#if defined(KFLOER_HAVE_AVX2_KERNELS)
const F2Kernels kAvx2{Backend::Avx2, avx2::xor_into, avx2::is_zero, avx2::intersects,
                      avx2::popcount};
#endif

const F2Kernels& select() noexcept {
  const char* env = std::getenv("KFLOER_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return kScalar;
#if defined(KFLOER_HAVE_AVX2_KERNELS)
  if (available(Backend::Avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

bool available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(KFLOER_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

const F2Kernels& kernels_for(Backend backend) {
  if (!available(backend))
    throw DomainError("SIMD backend " + std::string(backend_name(backend)) + " is unavailable");
#if defined(KFLOER_HAVE_AVX2_KERNELS)
  if (backend == Backend::Avx2) return kAvx2;
#endif
  return kScalar;
}

const F2Kernels& active_kernels() noexcept {
  static const F2Kernels& chosen = select();
  return chosen;
}

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

}  // namespace kfloer::simd
