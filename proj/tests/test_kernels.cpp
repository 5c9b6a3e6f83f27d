#include "doctest.h"

#include "basecraft/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace basecraft::kernels;

namespace {

std::vector<std::uint32_t> random_perm(std::size_t n, std::mt19937_64 &rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Perms with many fixed points exercise the comparison kernels harder.
std::vector<std::uint32_t> sparse_perm(std::size_t n, std::mt19937_64 &rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t k = 0; k < n / 7 + 1 && n > 1; ++k) {
    std::size_t a = rng() % n, b = rng() % n;
    std::swap(p[a], p[b]);
  }
  return p;
}

} // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelTable *v = avx2();
  if (!v) {
    MESSAGE("AVX2 unavailable; only the scalar kernels are in use");
    return;
  }
  const KernelTable &s = scalar();
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 16u, 31u, 33u, 130u, 1225u}) {
    for (int rep = 0; rep < 40; ++rep) {
      auto a = rep % 2 ? random_perm(n, rng) : sparse_perm(n, rng);
      auto b = random_perm(n, rng);
      std::vector<std::uint32_t> o1(n), o2(n);
      s.compose(a.data(), b.data(), o1.data(), n);
      v->compose(a.data(), b.data(), o2.data(), n);
      CHECK(o1 == o2);
      s.invert(a.data(), o1.data(), n);
      v->invert(a.data(), o2.data(), n);
      CHECK(o1 == o2);
      CHECK(s.count_fixed(a.data(), n) == v->count_fixed(a.data(), n));
      CHECK(s.is_identity(a.data(), n) == v->is_identity(a.data(), n));
      auto c = a;
      if (n && rep % 3 == 0)
        c[rng() % n] ^= 1u;
      CHECK(s.equal(a.data(), c.data(), n) == v->equal(a.data(), c.data(), n));

      std::size_t words = n / 8 + 1;
      std::vector<std::uint64_t> x(words), y(words);
      for (auto &w : x)
        w = rng() & rng();
      for (auto &w : y)
        w = rng() & rng() & rng();
      auto x2 = x;
      s.and_into(x.data(), y.data(), words);
      v->and_into(x2.data(), y.data(), words);
      CHECK(x == x2);
      CHECK(s.any_set(x.data(), words) == v->any_set(x2.data(), words));
    }
    std::vector<std::uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0u);
    CHECK(v->is_identity(id.data(), n));
    CHECK(v->count_fixed(id.data(), n) == n);
    std::vector<std::uint64_t> zero(n / 4 + 1, 0);
    CHECK_FALSE(v->any_set(zero.data(), zero.size()));
  }
}

TEST_CASE("dispatch can be forced to scalar") {
  force_scalar(true);
  CHECK(std::string(active().name) == "scalar");
  force_scalar(false);
  if (avx2())
    CHECK(std::string(active().name) == "avx2");
}
