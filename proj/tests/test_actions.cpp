#include "doctest.h"

#include "basecraft/actions.hpp"

#include <random>

using namespace basecraft;

namespace {

// image(word) == product of generator images, for random words
template <class Apply>
void check_homomorphism(const std::vector<SemilinearMap> &gens,
                        const Action &a, Apply apply_word_to_label,
                        std::mt19937_64 &rng, int words = 200) {
  for (int w = 0; w < words; ++w) {
    std::vector<std::size_t> word(1 + rng() % 6);
    for (auto &x : word)
      x = rng() % gens.size();
    Perm prod(a.domain.size());
    SemilinearMap m = gens[word[0]];
    prod = a.group.generators()[word[0]];
    for (std::size_t k = 1; k < word.size(); ++k) {
      m = m * gens[word[k]];
      prod = prod * a.group.generators()[word[k]];
    }
    Point p = rng() % a.domain.size();
    CHECK(apply_word_to_label(m, a.domain.labels[p]) ==
          a.domain.labels[prod[p]]);
  }
}

} // namespace

TEST_CASE("projective and subspace actions") {
  std::mt19937_64 rng(1);
  auto sl27 = classical_generators(MatGroupSpec::parse("SL-2-7"));
  auto line = subspace_action(linear(sl27.gens), *sl27.field, 2, 1,
                              SubspaceConstraint::All);
  CHECK(line.domain.size() == 8);
  auto gens = linear(sl27.gens);
  check_homomorphism(gens, line,
                     [&](const SemilinearMap &m, const std::vector<std::uint32_t> &l) {
                       std::vector<Vec> im;
                       for (const auto &r : subspace_basis(l, 2))
                         im.push_back(m.apply(r));
                       return subspace_label(im, *sl27.field);
                     },
                     rng);

  auto sl43 = classical_generators(MatGroupSpec::parse("SL-4-3"));
  auto planes = subspace_action(linear(sl43.gens), *sl43.field, 4, 2,
                                SubspaceConstraint::All);
  CHECK(planes.domain.size() == 130);
  CHECK(planes.domain.size() == gaussian_binomial(4, 2, 3));
  CHECK(planes.group.order() == classical_order(sl43.spec) / 2);
  CHECK(planes.group.is_transitive());

  for (unsigned m = 1; m <= 3; ++m) {
    auto sub = subspace_action(linear(sl43.gens), *sl43.field, 4, m,
                               SubspaceConstraint::All);
    CHECK(sub.domain.size() == gaussian_binomial(4, m, 3));
  }
}

TEST_CASE("isotropic points of the unitary 5-space over GF(4)") {
  auto su = classical_generators(MatGroupSpec::parse("SU-5-2"));
  auto iso = subspace_action(linear(su.gens), *su.field, 5, 1,
                             SubspaceConstraint::TotallyIsotropic, &su.form);
  CHECK(iso.domain.size() == 165);
  CHECK(iso.group.order() == 13685760);
  CHECK(classical_order(su.spec) == 13685760);
  for (const auto &l : iso.domain.labels) {
    Vec v(l.begin(), l.end());
    CHECK(su.form.B(v, v) == 0);
  }
  CHECK_THROWS(subspace_action(linear(su.gens), *su.field, 5, 1,
                               SubspaceConstraint::TotallyIsotropic, nullptr));
}

TEST_CASE("nondegenerate subspaces") {
  auto sp = classical_generators(MatGroupSpec::parse("Sp-4-3"));
  auto nd = subspace_action(linear(sp.gens), *sp.field, 4, 2,
                            SubspaceConstraint::Nondegenerate, &sp.form);
  // |Sp4(3)| / |Sp2(3) x Sp2(3)| = 51840 / 576
  CHECK(nd.domain.size() == 90);
}

TEST_CASE("coset actions") {
  auto s8 = PermGroup::symmetric(8);
  // S4 wr S2: stabiliser of the partition {0123|4567}
  PermGroup h(8, {Perm::parse("(0 1)", 8), Perm::parse("(0 1 2 3)", 8),
                  Perm::parse("(0 4)(1 5)(2 6)(3 7)", 8)});
  CHECK(h.order() == 1152);
  auto ca = coset_action(s8, h);
  CHECK(ca.table.degree == 35);
  CHECK(ca.action.group.order() == 40320);
  CHECK(ca.table.kernel_order == 1);
  CHECK(ca.action.group.is_transitive());
  auto stab = ca.action.group.pointwise_stabiliser({0});
  CHECK(stab.order() * 35 == 40320);
  auto self = coset_action(s8, s8);
  CHECK(self.table.degree == 1);
  CHECK_THROWS(coset_action(PermGroup::alternating(8), h));
}

TEST_CASE("pair and product actions") {
  auto s3 = PermGroup::symmetric(3);
  auto p3 = pair_action(s3);
  CHECK(p3.domain.size() == 3);
  CHECK(p3.group.order() == 6);
  auto c2 = PermGroup::cyclic(2);
  CHECK(pair_action(c2).domain.size() == 1);

  auto s5 = PermGroup::symmetric(5);
  auto w = product_action(s5, PermGroup::cyclic(2));
  CHECK(w.degree() == 25);
  CHECK(w.order() == 28800);
  CHECK(w.is_transitive());
  auto one = product_action(s5, PermGroup::trivial(1));
  CHECK(one.degree() == 5);
  CHECK(one.order() == 120);
  auto three = product_action(PermGroup::symmetric(3), PermGroup::symmetric(3));
  CHECK(three.order() == 6 * 6 * 6 * 6);
}

TEST_CASE("projective line groups and their subgroups") {
  struct Row {
    unsigned q;
    bool delta;
    unsigned phi;
    unsigned long order;
  };
  for (Row r : {Row{7, false, 0, 168}, Row{7, true, 0, 336},
                Row{8, false, 1, 1512}, Row{16, false, 2, 8160},
                Row{27, false, 1, 29484}, Row{27, true, 1, 58968}}) {
    L2Group g{r.q, r.delta, r.phi};
    auto s = l2_on_projective_line(g);
    CHECK(s.line.domain.size() == r.q + 1);
    CHECK(s.line.group.order() == r.order);
    CHECK(g.order() == r.order);
  }
  CHECK(psl2_subgroup(7, L2Subgroup::SplitNormaliser, true).order() == 12);
  CHECK(psl2_subgroup(7, L2Subgroup::NonsplitNormaliser, true).order() == 16);
  CHECK(psl2_subgroup(8, L2Subgroup::P1, false).order() == 56);
  CHECK(psl2_subgroup(11, L2Subgroup::SplitNormaliser, false).order() == 10);
  CHECK(psl2_subgroup(11, L2Subgroup::NonsplitNormaliser, false).order() == 12);
  CHECK(psl2_subgroup(13, L2Subgroup::Octahedral, false).order() == 12);
  CHECK(psl2_subgroup(7, L2Subgroup::Octahedral, false).order() == 24);
  CHECK(psl2_subgroup(11, L2Subgroup::Octahedral, true).order() == 24);
  auto s27 = l2_on_projective_line(L2Group{27, false, 0});
  CHECK(l2_subgroup(s27, L2Subgroup::Subfield).order() == 12);
  auto g7 = l2_on_projective_line(L2Group{7, true, 0});
  auto h = l2_subgroup(g7, L2Subgroup::NonsplitNormaliser);
  auto ca = coset_action(g7.line.group, h);
  CHECK(ca.table.degree == 21);
  CHECK(ca.action.group.order() == 336);
}
