#include "doctest.h"

#include "basecraft/gf.hpp"

#include <random>
#include <set>

using namespace basecraft;

TEST_CASE("field construction") {
  const Field &F2 = Field::get(2, 1);
  CHECK(F2.q() == 2);
  CHECK(F2.primitive() == 1);
  CHECK(&Field::get(2, 1) == &F2);
  CHECK_THROWS(Field::get(4, 1));
  CHECK_THROWS(Field::get(2, 17));
  CHECK_THROWS(Field::get(3, 0));
  CHECK_THROWS(Field::of_order(12));

  // GF(9): x^2+1 is irreducible over Z_3, and it is the least candidate
  const Field &F9 = Field::get(3, 2);
  bool x2p1_irreducible = true;
  for (unsigned x = 0; x < 3; ++x)
    if ((x * x + 1) % 3 == 0)
      x2p1_irreducible = false;
  CHECK(x2p1_irreducible);
  CHECK(is_irreducible(F9.modulus(), 3));
  CHECK(F9.modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(F9.elem(F9.primitive()).order() == 8);
}

TEST_CASE("least irreducible modulus by brute force") {
  for (auto [p, f] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 7}}) {
    const Field &F = Field::get(p, f);
    // oracle: smallest code whose polynomial has no root and no factor,
    // checked by evaluating all products of lower-degree monic polynomials
    unsigned q = F.q();
    auto decode = [&](unsigned c) {
      std::vector<unsigned> a(f + 1, 0);
      for (unsigned i = 0; i < f; ++i) {
        a[i] = c % p;
        c /= p;
      }
      a[f] = 1;
      return a;
    };
    unsigned expect = q;
    for (unsigned c = 0; c < q && expect == q; ++c)
      if (is_irreducible(decode(c), p))
        expect = c;
    CHECK(F.modulus() == decode(expect));
  }
}

TEST_CASE("field axioms exhaustively for small q") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u}) {
    const Field &F = Field::of_order(q);
    for (FCode a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
      }
      for (FCode b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (b)
          CHECK(F.mul(F.div(a, b), b) == a);
        // Frobenius is additive and multiplicative
        CHECK(F.frob(F.add(a, b), 1) == F.add(F.frob(a, 1), F.frob(b, 1)));
        CHECK(F.frob(F.mul(a, b), 1) == F.mul(F.frob(a, 1), F.frob(b, 1)));
        for (FCode c = 0; c < q && q <= 27; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
    std::set<FCode> powers;
    for (unsigned k = 0; k + 1 < q; ++k)
      powers.insert(F.power_of_primitive(k));
    CHECK(powers.size() == q - 1);
    CHECK(powers.count(0) == 0);
  }
}

TEST_CASE("field axioms on random triples for larger q") {
  std::mt19937_64 rng(99);
  for (unsigned q : {81u, 128u, 729u, 1024u, 2187u, 65536u}) {
    const Field &F = Field::of_order(q);
    for (int t = 0; t < 3000; ++t) {
      FCode a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.frob(F.add(a, b), 1) == F.add(F.frob(a, 1), F.frob(b, 1)));
    }
  }
}

TEST_CASE("element examples") {
  const Field &F7 = Field::get(7, 1);
  CHECK((F7.elem(3) * F7.elem(5)).code() == 1);
  const Field &F4 = Field::get(2, 2);
  FieldElem w = F4.elem(F4.primitive());
  CHECK(w * w == w + F4.elem(1));
  CHECK(w.pow(3) == F4.elem(1));
  CHECK((w + w).is_zero());
  CHECK(w.frobenius(1) == w * w);
  const Field &F9 = Field::get(3, 2);
  for (FCode a = 0; a < 9; ++a)
    CHECK(F9.elem(a).frobenius(1).frobenius(1) == F9.elem(a));
  const Field &F8 = Field::get(2, 3);
  std::set<FCode> fixed;
  for (FCode a = 0; a < 8; ++a)
    if (F8.frob(a, 1) == a)
      fixed.insert(a);
  CHECK(fixed == std::set<FCode>{0, 1});
  CHECK_THROWS(F7.elem(1) / F7.elem(0));
  CHECK_THROWS(F7.elem(1) + F4.elem(1));
}
