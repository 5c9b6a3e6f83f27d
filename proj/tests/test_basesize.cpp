#include "basecraft/actions.hpp"
#include "basecraft/basesize.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace basecraft;

namespace {

PermGroup s4_wr_s2_cosets() {
  PermGroup h(8, {Perm::parse("(0 1)", 8), Perm::parse("(0 1 2 3)", 8),
                  Perm::parse("(0 4)(1 5)(2 6)(3 7)", 8)});
  return coset_action(PermGroup::symmetric(8), h).action.group;
}

// Fixed-point masks of the nonidentity elements, deduplicated (n <= 64).
std::vector<std::uint64_t> fix_masks(const PermGroup &G) {
  std::set<std::uint64_t> masks;
  for (const auto &g : all_elements(G)) {
    if (g.is_identity())
      continue;
    std::uint64_t m = 0;
    for (Point p = 0; p < G.degree(); ++p)
      if (g[p] == p)
        m |= std::uint64_t{1} << p;
    masks.insert(m);
  }
  return {masks.begin(), masks.end()};
}

bool brute_is_base(const std::vector<std::uint64_t> &masks, std::uint64_t set) {
  for (auto m : masks)
    if ((m & set) == set)
      return false;
  return true;
}

// Smallest k such that some k-subset of points is a base.
unsigned brute_base_size(const PermGroup &G) {
  auto masks = fix_masks(G);
  const unsigned n = static_cast<unsigned>(G.degree());
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      std::uint64_t set = 0;
      for (unsigned i = 0; i < n; ++i)
        if (pick[i])
          set |= std::uint64_t{1} << i;
      if (brute_is_base(masks, set))
        return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

// Ordered c-tuples with trivial pointwise stabiliser.
std::uint64_t brute_tuple_count(const PermGroup &G, unsigned c) {
  auto masks = fix_masks(G);
  const std::uint64_t n = G.degree();
  std::uint64_t total = 1, hits = 0;
  for (unsigned i = 0; i < c; ++i)
    total *= n;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t set = 0, x = t;
    for (unsigned i = 0; i < c; ++i, x /= n)
      set |= std::uint64_t{1} << (x % n);
    hits += brute_is_base(masks, set);
  }
  return hits;
}

// Sum of fpr(x)^c over prime-order elements, element by element.
Rational brute_q(const PermGroup &G, unsigned c) {
  Rational q = 0;
  for (const auto &g : all_elements(G)) {
    if (!g.prime_order())
      continue;
    Rational f(big(g.fixed_points()), big(G.degree()));
    f.canonicalize();
    Rational t = 1;
    for (unsigned i = 0; i < c; ++i)
      t *= f;
    q += t;
  }
  q.canonicalize();
  return q;
}

PermGroup line(unsigned q, bool delta, unsigned phi) {
  return l2_on_projective_line(L2Group{q, delta, phi}).line.group;
}

} // namespace

TEST_CASE("log lower bound") {
  CHECK(log_lower_bound(PermGroup::trivial(5)) == 0);
  CHECK(log_lower_bound(PermGroup::cyclic(7)) == 1);
  CHECK(log_lower_bound(PermGroup::symmetric(5)) == 3); // 125 >= 120
  CHECK(log_lower_bound(s4_wr_s2_cosets()) == 3);       // 35^2 < 40320
  // exact at a perfect power: |C2 x C2| = 4 = 2^2 on 2+2 points is 1
  PermGroup v4(4, {Perm::parse("(0 1)", 4), Perm::parse("(2 3)", 4)});
  CHECK(log_lower_bound(v4) == 1);
}

TEST_CASE("exact base size against brute force") {
  struct Row {
    PermGroup g;
    unsigned expect;
  };
  std::vector<Row> rows = {
      {PermGroup::symmetric(5), 4},  {PermGroup::alternating(5), 3},
      {PermGroup::cyclic(6), 1},     {line(8, false, 1), 4},
      {line(8, false, 0), 3},        {line(7, true, 0), 3},
      {s4_wr_s2_cosets(), 5},        {PermGroup::trivial(4), 0},
  };
  for (auto &r : rows) {
    auto res = exact_base_size(r.g);
    CAPTURE(r.g.degree());
    CHECK(res.exact);
    CHECK(res.lo == r.expect);
    CHECK(res.hi == r.expect);
    CHECK(brute_base_size(r.g) == r.expect);
    CHECK(res.hi_cert.points.size() == r.expect);
    CHECK(res.hi_cert.verified);
    CHECK(is_base(r.g, res.hi_cert.points));
  }
  auto s8 = exact_base_size(s4_wr_s2_cosets());
  CHECK(s8.lo_kind == LowerKind::Exhaustive);
}

TEST_CASE("node budget turns into an interval") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  tiny.random_trials = 0;
  auto res = exact_base_size(s4_wr_s2_cosets(), tiny);
  CHECK(res.budget_exceeded);
  CHECK_FALSE(res.exact);
  CHECK(res.lo <= 5);
  CHECK(res.hi >= 5);
}

TEST_CASE("is_base") {
  auto a5 = PermGroup::alternating(5);
  CHECK(is_base(a5, {0, 1, 2}));
  CHECK_FALSE(is_base(a5, {0, 1}));
  CHECK_FALSE(is_base(a5, {0, 0, 1}));
  CHECK_THROWS(is_base(a5, {7}));
}

TEST_CASE("Q bound matches element-wise sum") {
  auto pgl7 = line(7, true, 0);
  auto rep = q_bound(pgl7, 4);
  CHECK(rep.exact);
  Rational expect(174, 512);
  expect.canonicalize();
  CHECK(rep.total == expect);
  CHECK(rep.total == brute_q(pgl7, 4));
  CHECK(rep.certifies());
  for (unsigned c = 1; c <= 5; ++c) {
    auto s8 = s4_wr_s2_cosets();
    CHECK(q_bound(s8, c).total == brute_q(s8, c));
  }
  // per-class contributions add up
  Rational sum = 0;
  for (const auto &r : rep.rows)
    sum += r.contribution;
  CHECK(sum == rep.total);
}

TEST_CASE("fixed point ratio through class membership") {
  // |x^G cap G_0| / |x^G| equals fix(x)/n for a transitive group
  auto g = line(11, true, 0);
  auto t = prime_order_classes(g);
  for (const auto &c : t.classes) {
    Rational lhs(c.fixing_zero, c.class_size);
    lhs.canonicalize();
    Rational rhs(big(c.fixed_points), big(g.degree()));
    rhs.canonicalize();
    CHECK(lhs == rhs);
    CHECK(t.class_of(c.rep) >= 0);
  }
}

TEST_CASE("partial Q never certifies") {
  auto g = line(13, true, 0);
  auto rep = q_bound(g, 3, 100);
  CHECK_FALSE(rep.exact);
  CHECK_FALSE(rep.certifies());
  CHECK(rep.total <= q_bound(g, 3).total);
}

TEST_CASE("ratio power bound") {
  CHECK(ratio_power_bound(big(3), big(10), 2) == Rational(9, 10));
  CHECK(ratio_power_bound(big(1), big(1), 7) == 1);
  CHECK_THROWS(ratio_power_bound(big(1), big(0), 1));
}

TEST_CASE("exact base probability") {
  auto pgl7 = line(7, true, 0);
  auto pairs7 = pair_action(pgl7).group;
  CHECK(exact_base_probability(pairs7, 2) == Rational(3, 7));
  CHECK(count_base_tuples(pairs7, 2) == big(brute_tuple_count(pairs7, 2)));
  auto l11 = pair_action(line(11, false, 0)).group;
  CHECK(exact_base_probability(l11, 2) == Rational(20, 33));
  auto l13 = pair_action(line(13, false, 0)).group;
  CHECK(exact_base_probability(l13, 2) == Rational(60, 91));
  for (unsigned q : {9u, 11u, 13u}) {
    auto g = pair_action(line(q, true, 0)).group;
    Rational expect(big(4 * (q - 1)), big(q * (q + 1)));
    expect.canonicalize();
    CHECK(exact_base_probability(g, 2) == expect);
  }
  auto s5 = PermGroup::symmetric(5);
  for (unsigned c = 0; c <= 5; ++c)
    CHECK(count_base_tuples(s5, c) == big(brute_tuple_count(s5, c)));
  auto s8 = s4_wr_s2_cosets();
  CHECK(count_base_tuples(s8, 3) == big(brute_tuple_count(s8, 3)));
}

TEST_CASE("thread count does not change results") {
  auto g = pair_action(line(11, true, 0)).group;
  SearchBudget one, four;
  four.threads = 4;
  CHECK(count_base_tuples(g, 3, one) == count_base_tuples(g, 3, four));
  auto a = mc_base_probability(g, 2, 5000, 9, 1);
  auto b = mc_base_probability(g, 2, 5000, 9, 3);
  CHECK(a.hits == b.hits);
}

TEST_CASE("Monte Carlo estimate brackets the exact value") {
  auto g = pair_action(line(7, true, 0)).group;
  auto est = mc_base_probability(g, 2, 20000, 5);
  CHECK(est.lo <= 3.0 / 7);
  CHECK(est.hi >= 3.0 / 7);
  CHECK(est.hi - est.lo < 0.02);
  auto [lo, hi] = wilson_interval(0, 10);
  CHECK(lo == 0.0);
  CHECK(hi > 0.2);
}

TEST_CASE("double coset certificate") {
  auto s = l2_on_projective_line(L2Group{7, true, 0});
  auto G = s.line.group;
  // D16: no regular suborbit, so b >= 3 on its cosets
  auto d16 = l2_subgroup(s, L2Subgroup::NonsplitNormaliser);
  REQUIRE(d16.order() == 16);
  auto out = no_regular_orbit_certificate(G, d16);
  REQUIRE(out.certificate);
  CHECK_FALSE(out.regular_rep);
  CHECK(verify_no_regular_orbit(G, d16, *out.certificate));
  auto cosets = coset_action(G, d16).action.group;
  CHECK(exact_base_size(cosets).lo == 3);

  auto bad = *out.certificate;
  bad.sizes[0] += 1;
  CHECK_FALSE(verify_no_regular_orbit(G, d16, bad));
  auto dup = *out.certificate;
  dup.reps.push_back(dup.reps[0]);
  dup.sizes.push_back(dup.sizes[0]);
  CHECK_FALSE(verify_no_regular_orbit(G, d16, dup));

  // D12: a regular suborbit exists
  auto d12 = l2_subgroup(s, L2Subgroup::SplitNormaliser);
  REQUIRE(d12.order() == 12);
  auto out2 = no_regular_orbit_certificate(G, d12);
  CHECK_FALSE(out2.certificate);
  REQUIRE(out2.regular_rep);
  CHECK(intersection_with_conjugate(d12, *out2.regular_rep) == 1);
}

TEST_CASE("deterministic decomposition sums to the group order") {
  auto G = PermGroup::symmetric(6);
  PermGroup h(6, {Perm::parse("(0 1)", 6), Perm::parse("(0 1 2 3)", 6)});
  auto out = no_regular_orbit_certificate(G, h, kDefaultElementCap, 3);
  REQUIRE(out.certificate);
  BigInt sum = 0;
  for (const auto &s : out.sizes)
    sum += s;
  if (out.complete_decomposition)
    CHECK(sum == G.order());
  CHECK(verify_no_regular_orbit(G, h, *out.certificate));
}
