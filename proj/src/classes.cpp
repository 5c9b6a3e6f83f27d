#include "basecraft/classes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace basecraft {

namespace {

// Prime p if x has order p; seen is scratch of size n, left zeroed.
unsigned prime_order_fast(const Perm &x, std::vector<char> &seen) {
  const std::size_t n = x.degree();
  std::size_t p = 0;
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    if (seen[i] || x[i] == i)
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = x[j]) {
      seen[j] = 1;
      ++len;
    }
    if (p == 0)
      p = len;
    else if (len != p)
      ok = false;
  }
  std::fill(seen.begin(), seen.end(), 0);
  if (!ok || p < 2)
    return 0;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return 0;
  return static_cast<unsigned>(p);
}

void sort_classes(std::vector<ClassData> &cls) {
  std::sort(cls.begin(), cls.end(), [](const ClassData &a, const ClassData &b) {
    if (a.prime != b.prime)
      return a.prime < b.prime;
    if (a.fixed_points != b.fixed_points)
      return a.fixed_points > b.fixed_points;
    if (a.class_size != b.class_size)
      return a.class_size < b.class_size;
    return a.rep < b.rep;
  });
}

ClassTable exact_classes(const PermGroup &g) {
  ClassTable t;
  t.exact = true;
  auto idx = std::make_shared<const ElementIndex>(g.chain());
  t.index = idx;
  const std::uint64_t N = idx->size();
  const std::size_t n = g.degree();
  const auto &base = idx->base();
  const std::size_t L = base.size();

  std::vector<std::uint32_t> parent(N);
  std::vector<unsigned char> prime(N, 0);
  std::vector<unsigned char> fix0(N, 0);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<Perm> gens, ginv;
  for (const auto &s : g.generators())
    if (!s.is_identity()) {
      gens.push_back(s);
      ginv.push_back(s.inverse());
    }
  std::vector<char> seen(n, 0);
  std::vector<Point> im(L);
  idx->for_each([&](std::uint64_t r, const Perm &x) {
    unsigned p = prime_order_fast(x, seen);
    if (!p)
      return;
    prime[r] = static_cast<unsigned char>(p > 255 ? 255 : p);
    fix0[r] = x[0] == 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      // y = s^-1 x s: beta^y = s[x[s^-1[beta]]]
      for (std::size_t i = 0; i < L; ++i)
        im[i] = gens[k][x[ginv[k][base[i]]]];
      auto ry = static_cast<std::uint32_t>(idx->rank_of_images(im.data()));
      auto a = find(static_cast<std::uint32_t>(r)), b = find(ry);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  });

  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<std::uint64_t> sizes, fixing;
  t.class_of_rank.assign(N, -1);
  for (std::uint64_t r = 0; r < N; ++r) {
    if (!prime[r])
      continue;
    auto root = find(static_cast<std::uint32_t>(r));
    auto [it, fresh] = slot.emplace(root, sizes.size());
    if (fresh) {
      sizes.push_back(0);
      fixing.push_back(0);
    }
    sizes[it->second]++;
    fixing[it->second] += fix0[r];
    t.class_of_rank[r] = static_cast<std::int32_t>(it->second);
  }
  std::vector<ClassData> cls(sizes.size());
  for (auto [root, s] : slot) {
    ClassData &c = cls[s];
    c.rep = idx->unrank(root);
    c.prime = c.rep.prime_order();
    c.class_size = big(sizes[s]);
    c.fixing_zero = big(fixing[s]);
    c.fixed_points = c.rep.fixed_points();
    c.complete = true;
  }
  // keep class_of_rank consistent with the sorted order
  std::vector<std::size_t> order(cls.size());
  std::iota(order.begin(), order.end(), 0);
  auto sorted = cls;
  sort_classes(sorted);
  std::vector<std::int32_t> remap(cls.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      if (cls[j].rep == sorted[i].rep)
        remap[j] = static_cast<std::int32_t>(i);
  for (auto &c : t.class_of_rank)
    if (c >= 0)
      c = remap[c];
  t.classes = std::move(sorted);
  return t;
}

ClassTable sampled_classes(const PermGroup &g, std::uint64_t cap,
                           std::uint64_t seed) {
  ClassTable t;
  t.exact = false;
  Rng rng(seed);
  std::vector<std::unordered_set<Perm, PermHash>> members;
  std::vector<char> seen(g.degree(), 0);
  const auto &gens = g.generators();
  const int samples = 4000;
  // points stored across all kept orbits, about 200 MB
  std::uint64_t room = 50'000'000 / std::max<std::size_t>(1, g.degree());
  for (int s = 0; s < samples; ++s) {
    Perm x = g.random_element(rng);
    unsigned p = prime_order_fast(x, seen);
    if (!p)
      continue;
    bool known = false;
    for (std::size_t c = 0; c < members.size() && !known; ++c)
      known = members[c].count(x) > 0;
    if (known)
      continue;
    bool dup = false;
    for (const auto &c : t.classes)
      dup = dup || (!c.complete && c.prime == p &&
                    c.fixed_points == x.fixed_points());
    if (dup)
      continue;
    const std::uint64_t limit = std::min(cap, room);
    std::unordered_set<Perm, PermHash> orbit{x};
    std::vector<Perm> todo{x};
    bool complete = true;
    while (!todo.empty() && complete) {
      Perm y = todo.back();
      todo.pop_back();
      for (const auto &s : gens) {
        Perm z = y.conj(s);
        if (orbit.insert(z).second) {
          todo.push_back(z);
          if (orbit.size() > limit) {
            complete = false;
            break;
          }
        }
      }
    }
    if (complete)
      room -= orbit.size();
    ClassData c;
    c.rep = x;
    c.prime = p;
    c.fixed_points = x.fixed_points();
    c.complete = complete;
    c.class_size = big(orbit.size());
    t.classes.push_back(c);
    members.push_back(complete ? std::move(orbit)
                               : std::unordered_set<Perm, PermHash>{});
  }
  sort_classes(t.classes);
  return t;
}

} // namespace

int ClassTable::class_of(const Perm &g) const {
  if (!exact || !index)
    return -1;
  return class_of_rank[index->rank(g)];
}

ClassTable prime_order_classes(const PermGroup &g, std::uint64_t cap,
                               std::uint64_t seed) {
  if (g.order() <= big(cap))
    return exact_classes(g);
  return sampled_classes(g, std::min<std::uint64_t>(cap, 2'000'000), seed);
}

std::vector<Perm> all_elements(const PermGroup &g, std::uint64_t cap) {
  if (g.order() > big(cap))
    throw BudgetExceeded("group order exceeds the element budget");
  ElementIndex idx(g.chain());
  std::vector<Perm> out;
  out.reserve(idx.size());
  idx.for_each([&](std::uint64_t, const Perm &x) { out.push_back(x); });
  return out;
}

BigInt intersection_with_conjugate(const PermGroup &h, const Perm &x,
                                   std::uint64_t cap) {
  if (h.order() > big(cap))
    throw BudgetExceeded("subgroup order exceeds the element budget");
  ElementIndex idx(h.chain());
  const StabChain &c = h.chain();
  Perm xi = x.inverse();
  std::uint64_t count = 0;
  // h in H^x iff x h x^-1 in H
  idx.for_each([&](std::uint64_t, const Perm &e) {
    count += c.contains(x * e * xi);
  });
  return big(count);
}

} // namespace basecraft
