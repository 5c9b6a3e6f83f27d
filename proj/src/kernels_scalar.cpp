#include "basecraft/kernels.hpp"

namespace basecraft::kernels {

namespace {

void compose_scalar(const std::uint32_t *a, const std::uint32_t *b,
                    std::uint32_t *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = b[a[i]];
}

void invert_scalar(const std::uint32_t *a, std::uint32_t *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[a[i]] = static_cast<std::uint32_t>(i);
}

std::size_t count_fixed_scalar(const std::uint32_t *a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    c += (a[i] == i);
  return c;
}

bool is_identity_scalar(const std::uint32_t *a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != i)
      return false;
  return true;
}

bool equal_scalar(const std::uint32_t *a, const std::uint32_t *b,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i])
      return false;
  return true;
}

void and_into_scalar(std::uint64_t *acc, const std::uint64_t *row,
                     std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    acc[i] &= row[i];
}

bool any_set_scalar(const std::uint64_t *a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i])
      return true;
  return false;
}

} // namespace

const KernelTable &scalar() {
  static const KernelTable table{"scalar",          compose_scalar,
                                 invert_scalar,     count_fixed_scalar,
                                 is_identity_scalar, equal_scalar,
                                 and_into_scalar,   any_set_scalar};
  return table;
}

} // namespace basecraft::kernels
