#include "basecraft/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace basecraft::kernels {

namespace {

const KernelTable *pick() {
  const char *env = std::getenv("BASECRAFT_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0)
    return &scalar();
  if (const KernelTable *t = avx2())
    return t;
  return &scalar();
}

std::atomic<const KernelTable *> &slot() {
  static std::atomic<const KernelTable *> s{pick()};
  return s;
}

} // namespace

const KernelTable &active() { return *slot().load(std::memory_order_relaxed); }

void force_scalar(bool on) { slot().store(on ? &scalar() : pick()); }

} // namespace basecraft::kernels
