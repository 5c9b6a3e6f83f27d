#include "doctest.h"

#include "basecraft/actions.hpp"
#include "basecraft/classical.hpp"

#include <random>

using namespace basecraft;

namespace {

Matrix random_matrix(const Field &F, unsigned n, std::mt19937_64 &rng) {
  std::vector<FCode> e(n * n);
  for (auto &x : e)
    x = rng() % F.q();
  return Matrix(F, n, e);
}

// adjugate inverse for 2x2, an independent oracle
Matrix adjugate_inverse(const Matrix &A) {
  const Field &F = A.field();
  FCode d = F.inv(A.det());
  return Matrix(F, 2,
                {F.mul(A.at(1, 1), d), F.mul(F.neg(A.at(0, 1)), d),
                 F.mul(F.neg(A.at(1, 0)), d), F.mul(A.at(0, 0), d)});
}

BigInt order_on_vectors(const ClassicalGroup &g) {
  return vector_action(linear(g.gens), *g.field, g.spec.n).group.order();
}

} // namespace

TEST_CASE("matrix operations") {
  const Field &F7 = Field::get(7, 1);
  CHECK(Matrix::diag(F7, {3, 1}).det() == 3);
  std::mt19937_64 rng(4);
  const Field &F9 = Field::get(3, 2);
  int tested = 0;
  while (tested < 100) {
    Matrix A = random_matrix(F9, 2, rng);
    if (A.det() == 0) {
      CHECK_THROWS(A.inverse());
      continue;
    }
    ++tested;
    CHECK(A.inverse() == adjugate_inverse(A));
    CHECK((A * A.inverse()).is_identity());
    CHECK((Matrix::identity(F9, 2) * A) == A);
  }
  for (int t = 0; t < 20; ++t) {
    Matrix A = random_matrix(F7, 4, rng), B = random_matrix(F7, 4, rng);
    CHECK((A * B).det() == F7.mul(A.det(), B.det()));
    CHECK(A.transpose().det() == A.det());
  }
}

TEST_CASE("semilinear composition matches sequential application") {
  const Field &F = Field::get(2, 4);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    SemilinearMap a(random_matrix(F, 3, rng), rng() % 4);
    SemilinearMap b(random_matrix(F, 3, rng), rng() % 4);
    Vec v{static_cast<FCode>(rng() % 16), static_cast<FCode>(rng() % 16),
          static_cast<FCode>(rng() % 16)};
    CHECK((a * b).apply(v) == b.apply(a.apply(v)));
  }
}

TEST_CASE("gaussian binomials against a direct count") {
  // count m-subspaces of GF(q)^n by counting ordered bases
  auto direct = [](unsigned n, unsigned m, unsigned long long q) {
    unsigned long long num = 1, den = 1, qn = 1, qm = 1;
    for (unsigned i = 0; i < n; ++i)
      qn *= q;
    for (unsigned i = 0; i < m; ++i)
      qm *= q;
    unsigned long long qi = 1;
    for (unsigned i = 0; i < m; ++i) {
      num *= qn - qi;
      den *= qm - qi;
      qi *= q;
    }
    return num / den;
  };
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (unsigned n = 1; n <= 5; ++n)
      for (unsigned m = 0; m <= n; ++m)
        CHECK(gaussian_binomial(n, m, q) == direct(n, m, q));
  CHECK(gaussian_binomial(4, 2, 3) == 130);
}

TEST_CASE("classical generator orders") {
  // brute-force count of SL(2,7): matrices with determinant 1
  const Field &F7 = Field::get(7, 1);
  unsigned long sl27 = 0;
  for (FCode a = 0; a < 7; ++a)
    for (FCode b = 0; b < 7; ++b)
      for (FCode c = 0; c < 7; ++c)
        for (FCode d = 0; d < 7; ++d)
          sl27 += F7.sub(F7.mul(a, d), F7.mul(b, c)) == 1;
  CHECK(sl27 == 336);
  auto sl = classical_generators(MatGroupSpec::parse("SL-2-7"));
  CHECK(order_on_vectors(sl) == 336);
  auto line = subspace_action(linear(sl.gens), F7, 2, 1, SubspaceConstraint::All);
  CHECK(line.domain.size() == 8);
  CHECK(line.group.order() == 168);

  CHECK(order_on_vectors(classical_generators(MatGroupSpec::parse("GL-2-3"))) == 48);

  const char *specs[] = {"SL-3-2",  "SL-3-3",  "GL-3-2",  "SL-2-8",
                         "SL-4-2",  "GL-2-9",  "SL-2-13", "SU-2-2",
                         "SU-3-2",  "GU-3-2",  "SU-2-3",  "SU-3-3",
                         "SU-4-2",  "GU-2-4",  "Sp-4-2",  "Sp-4-3",
                         "Sp-4-4",  "Sp-2-5",  "OmegaPlus-4-2",
                         "OmegaPlus-4-3", "OmegaMinus-4-2", "OmegaMinus-4-3",
                         "OmegaPlus-6-2", "OmegaMinus-6-2", "SO-3-3",
                         "SO-5-3", "SO-3-2", "SO-5-2"};
  for (const char *s : specs) {
    CAPTURE(std::string(s));
    auto g = classical_generators(MatGroupSpec::parse(s));
    CHECK(order_on_vectors(g) == classical_order(g.spec));
  }
}

TEST_CASE("forms are preserved") {
  std::mt19937_64 rng(17);
  for (const char *s : {"Sp-4-2", "Sp-4-3", "SU-3-2", "SU-4-3", "GU-3-3",
                        "OmegaPlus-6-3", "OmegaMinus-4-3", "SO-5-3", "Sp-4-8"}) {
    CAPTURE(std::string(s));
    auto g = classical_generators(MatGroupSpec::parse(s));
    CHECK(preserves_form(Matrix::identity(*g.field, g.spec.n), g.form));
    Matrix w = Matrix::identity(*g.field, g.spec.n);
    for (int t = 0; t < 1000; ++t) {
      w = w * g.gens[rng() % g.gens.size()];
      if (t % 50 == 0)
        CHECK(preserves_form(w, g.form));
    }
    CHECK(preserves_form(w, g.form));
    // perturb one entry: no longer an isometry
    Matrix bad = g.gens[0];
    bad.at(0, 0) = g.field->add(bad.at(0, 0), 1);
    CHECK_FALSE(preserves_form(bad, g.form));
  }
  CHECK_THROWS(classical_generators(MatGroupSpec::parse("Sp-4-9")));
  CHECK_THROWS(classical_generators(MatGroupSpec::parse("SL-7-2")));
  CHECK_THROWS(MatGroupSpec::parse("XX-2-2"));
}
