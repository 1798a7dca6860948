#include <cstdio>
#include <cstdlib>

#include "rankforge/kernels.hpp"

namespace rankforge::kernels {

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> v{&scalar_kernels()};
  if (const KernelSet* k = avx2_kernels()) v.push_back(k);
  if (const KernelSet* k = neon_kernels()) v.push_back(k);
  return v;
}

const KernelSet* kernels_by_name(std::string_view name) {
  for (const KernelSet* k : available_kernels()) {
    if (k->name == name) return k;
  }
  return nullptr;
}

const KernelSet& preferred_kernels() {
  static const KernelSet* chosen = [] {
    if (const char* env = std::getenv("RANKFORGE_KERNEL")) {
      if (const KernelSet* k = kernels_by_name(env)) return k;
      std::fprintf(stderr, "rankforge: kernel '%s' unavailable, using scalar\n", env);
      return &scalar_kernels();
    }
    if (const KernelSet* k = avx2_kernels()) return k;
    if (const KernelSet* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace rankforge::kernels
