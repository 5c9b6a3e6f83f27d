#pragma once

#include "basecraft/matrix.hpp"
#include "basecraft/numeric.hpp"

#include <string>
#include <vector>

namespace basecraft {

enum class FormKind {
  None,
  Symplectic,
  Unitary,
  QuadraticPlus,
  QuadraticMinus,
  QuadraticOdd
};

// Standard forms. Hyperbolic pairs sit at positions (i, n-1-i); the minus
// type puts an anisotropic plane in the middle, the odd type a vector w with
// Q(w) = 1.
struct ClassicalForm {
  FormKind kind = FormKind::None;
  Matrix gram; // bilinear / sesquilinear Gram matrix (polarisation if quadratic)
  Matrix quad; // upper triangular: Q(x) = sum_{i<=j} quad_ij x_i x_j
  unsigned twist = 0; // Frobenius exponent making the unitary form sesquilinear

  FCode B(const Vec &u, const Vec &v) const;
  FCode Q(const Vec &v) const;
};

enum class Family { SL, GL, SU, GU, Sp, OmegaPlus, OmegaMinus, SOOdd };

struct MatGroupSpec {
  Family family = Family::SL;
  unsigned n = 2;
  unsigned q = 2; // for unitary families the matrices live over GF(q^2)

  static MatGroupSpec parse(const std::string &s); // e.g. "SU-5-2"
  std::string str() const;
};

struct ClassicalGroup {
  MatGroupSpec spec;
  const Field *field = nullptr;
  std::vector<Matrix> gens;
  ClassicalForm form;
};

ClassicalForm standard_form(FormKind kind, const Field &F, unsigned n);

// Throws std::invalid_argument for specs outside the supported table.
ClassicalGroup classical_generators(const MatGroupSpec &spec);

bool preserves_form(const Matrix &A, const ClassicalForm &form);

// Standard closed-form orders.
BigInt classical_order(const MatGroupSpec &spec);

std::string family_name(Family f);

} // namespace basecraft
