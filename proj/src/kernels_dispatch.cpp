#include <stdexcept>

#include "tcgabor/kernels.hpp"

namespace tcgabor::simd {

#if defined(TCGABOR_HAVE_AVX2)
const Kernels& avx2_kernels();
#endif
#if defined(TCGABOR_HAVE_NEON)
const Kernels& neon_kernels();
#endif

bool isa_available(IsaLevel level) {
  switch (level) {
    case IsaLevel::scalar:
      return true;
    case IsaLevel::avx2:
#if defined(TCGABOR_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case IsaLevel::neon:
#if defined(TCGABOR_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Kernels& kernels_for(IsaLevel level) {
  switch (level) {
    case IsaLevel::scalar:
      return scalar_kernels();
    case IsaLevel::avx2:
#if defined(TCGABOR_HAVE_AVX2)
      if (isa_available(IsaLevel::avx2)) return avx2_kernels();
#endif
      break;
    case IsaLevel::neon:
#if defined(TCGABOR_HAVE_NEON)
      return neon_kernels();
#endif
      break;
  }
  throw std::runtime_error("requested SIMD kernel set is not available on this CPU");
}

namespace {

const Kernels* detect_best() {
#if defined(TCGABOR_HAVE_AVX2)
  if (isa_available(IsaLevel::avx2)) return &kernels_for(IsaLevel::avx2);
#endif
#if defined(TCGABOR_HAVE_NEON)
  return &kernels_for(IsaLevel::neon);
#endif
  return &scalar_kernels();
}

const Kernels*& active_slot() {
  static const Kernels* active = detect_best();
  return active;
}

}  // namespace

const Kernels& active_kernels() { return *active_slot(); }

void set_active_isa(IsaLevel level) { active_slot() = &kernels_for(level); }

void reset_active_isa() { active_slot() = detect_best(); }

}  // namespace tcgabor::simd
