#include "basecraft/prodaction.hpp"
#include "basecraft/parallel.hpp"

#include <random>

namespace basecraft {

namespace {

unsigned ceil_log2(std::uint64_t x) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < x)
    ++k;
  return k;
}

unsigned floor_log2(std::uint64_t x) {
  unsigned k = 0;
  while (x >>= 1)
    ++k;
  return k;
}

struct Colouring {
  const std::vector<Perm> &elems; // nonidentity elements
  std::size_t m;
  unsigned k;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  std::vector<int> colour;

  // alive: elements not yet shown to move some colour class
  bool dfs(std::size_t p, unsigned used, const std::vector<std::uint32_t> &alive) {
    if (++nodes > max_nodes)
      throw BudgetExceeded("colouring search budget exhausted");
    if (alive.empty())
      return true;
    if (p == m)
      return false;
    // Colour names are interchangeable: a new colour is always the next one.
    const unsigned top = std::min(k, used + 1);
    std::vector<std::uint32_t> next;
    for (unsigned c = 0; c < top; ++c) {
      colour[p] = static_cast<int>(c);
      next.clear();
      for (auto e : alive) {
        const Perm &g = elems[e];
        Point img = g[p];
        bool killed = img <= p && colour[img] != static_cast<int>(c);
        if (!killed) {
          // preimage of p already coloured differently
          for (std::size_t q = 0; q < p && !killed; ++q)
            if (g[q] == p && colour[q] != static_cast<int>(c))
              killed = true;
        }
        if (!killed)
          next.push_back(e);
      }
      if (dfs(p + 1, std::max(used, c + 1), next))
        return true;
    }
    colour[p] = -1;
    return false;
  }
};

} // namespace

unsigned distinguishing_number(const PermGroup &P, std::uint64_t max_nodes) {
  const std::size_t m = P.degree();
  if (m > 16)
    throw std::invalid_argument("distinguishing number search needs m <= 16");
  if (P.is_trivial())
    return 1;
  std::vector<Perm> elems;
  for (auto &g : all_elements(P, 50'000'000))
    if (!g.is_identity())
      elems.push_back(std::move(g));
  std::vector<std::uint32_t> all(elems.size());
  for (std::uint32_t i = 0; i < all.size(); ++i)
    all[i] = i;
  // a distinguishing colouring has a regular P-orbit, so k^m >= |P|
  unsigned k = 1;
  while (pow_big(big(k), static_cast<unsigned>(m)) < P.order())
    ++k;
  std::uint64_t spent = 0;
  for (;; ++k) {
    Colouring c{elems, m, k, max_nodes - spent, 0, std::vector<int>(m, -1)};
    if (c.dfs(0, 0, all))
      return k;
    spent += c.nodes;
  }
}

BigInt regular_orbit_count(const PermGroup &L, unsigned d,
                           const SearchBudget &budget, std::uint64_t seed) {
  BigInt tuples = count_base_tuples(L, d, budget, seed);
  const BigInt order = L.order();
  if (tuples % order != 0)
    throw std::logic_error("base tuple count not divisible by |L|");
  return tuples / order;
}

unsigned wreath_base_bound(unsigned b_LK, unsigned dP, std::size_t gamma) {
  if (gamma < 2)
    throw std::invalid_argument("need |Gamma| >= 2");
  if (dP == 0)
    throw std::invalid_argument("distinguishing number is positive");
  const unsigned num = ceil_log2(dP);
  const unsigned den = floor_log2(gamma);
  return (num + den - 1) / den + b_LK;
}

BigInt anchored_tuple_count(const PermGroup &L, Point gamma, unsigned d,
                            const SearchBudget &budget, std::uint64_t seed) {
  if (d == 0)
    throw std::invalid_argument("d must be positive");
  if (gamma >= L.degree())
    throw std::out_of_range("anchor outside the domain");
  PermGroup K = L.pointwise_stabiliser({gamma});
  return count_base_tuples(K, d - 1, budget, seed);
}

McEstimate anchored_tuple_probability(const PermGroup &L, Point gamma,
                                      unsigned d, std::uint64_t samples,
                                      std::uint64_t seed, unsigned threads) {
  if (d < 2)
    throw std::invalid_argument("need d >= 2");
  PermGroup K = L.pointwise_stabiliser({gamma});
  const std::size_t n = L.degree();
  K.chain();
  // Stratify on the first free coordinate: each point gets an equal share.
  const std::uint64_t per = std::max<std::uint64_t>(1, samples / n);
  std::vector<std::uint64_t> hits(n, 0);
  parallel_for(n, threads, [&](std::size_t s) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + s);
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
    std::vector<Point> pts(d - 1);
    pts[0] = static_cast<Point>(s);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < per; ++i) {
      for (std::size_t j = 1; j < pts.size(); ++j)
        pts[j] = pick(rng);
      h += is_base(K, pts);
    }
    hits[s] = h;
  });
  McEstimate est;
  est.samples = per * n;
  for (auto h : hits)
    est.hits += h;
  est.p_hat = static_cast<double>(est.hits) / est.samples;
  std::tie(est.lo, est.hi) = wilson_interval(est.hits, est.samples);
  return est;
}

ProductVerdict product_verdict(const PermGroup &L, const PermGroup &P,
                               unsigned c, unsigned b_LK,
                               const SearchBudget &budget, std::uint64_t seed) {
  ProductVerdict v;
  v.c = c;
  v.dP = distinguishing_number(P);
  v.reg = regular_orbit_count(L, c, budget, seed);
  v.at_most_c = v.reg >= v.dP;
  v.bound = wreath_base_bound(b_LK, v.dP, L.degree());
  return v;
}

} // namespace basecraft
