#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops shared by the permutation engine. Every kernel has
// a portable scalar reference version; an AVX2 version is selected at runtime
// when the CPU supports it. The two must agree bit for bit.
namespace basecraft::kernels {

struct KernelTable {
  const char *name;

  // out[i] = b[a[i]]  (apply a, then b)
  void (*compose)(const std::uint32_t *a, const std::uint32_t *b,
                  std::uint32_t *out, std::size_t n);

  // out[a[i]] = i
  void (*invert)(const std::uint32_t *a, std::uint32_t *out, std::size_t n);

  std::size_t (*count_fixed)(const std::uint32_t *a, std::size_t n);
  bool (*is_identity)(const std::uint32_t *a, std::size_t n);
  bool (*equal)(const std::uint32_t *a, const std::uint32_t *b, std::size_t n);

  // acc &= row
  void (*and_into)(std::uint64_t *acc, const std::uint64_t *row,
                   std::size_t words);
  bool (*any_set)(const std::uint64_t *a, std::size_t words);
};

const KernelTable &scalar();

// nullptr when the build or the running CPU lacks AVX2.
const KernelTable *avx2();

// The table used by the library. Defaults to the fastest supported variant;
// BASECRAFT_KERNELS=scalar in the environment forces the reference kernels.
const KernelTable &active();

void force_scalar(bool on);

} // namespace basecraft::kernels
