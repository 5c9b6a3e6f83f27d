#pragma once

#include "basecraft/gf.hpp"

#include <string>
#include <vector>

namespace basecraft {

using Vec = std::vector<FCode>;

// Dense square matrix over a finite field; acts on row vectors, v -> vA.
class Matrix {
public:
  Matrix() = default;
  Matrix(const Field &F, std::size_t n);
  Matrix(const Field &F, std::size_t n, std::vector<FCode> rowmajor);
  static Matrix identity(const Field &F, std::size_t n);
  static Matrix diag(const Field &F, const std::vector<FCode> &d);

  const Field &field() const { return *F_; }
  std::size_t n() const { return n_; }
  FCode at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  FCode &at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<FCode> &entries() const { return a_; }

  Matrix operator*(const Matrix &b) const;
  Matrix inverse() const; // throws std::domain_error when singular
  FCode det() const;
  Matrix transpose() const;
  // entrywise a -> a^(p^j)
  Matrix frob(unsigned j) const;
  // (A^sigma)^T with sigma = p^twist
  Matrix conj_transpose(unsigned twist) const;
  bool is_identity() const;
  bool operator==(const Matrix &o) const;
  bool operator!=(const Matrix &o) const { return !(*this == o); }

  std::string str() const;

private:
  const Field *F_ = nullptr;
  std::size_t n_ = 0;
  std::vector<FCode> a_;
  void same(const Matrix &o) const;
};

Vec vec_times(const Vec &v, const Matrix &A);
Vec vec_frob(const Vec &v, const Field &F, unsigned j);

// v -> (vA)^(p^j): covers the field automorphisms the catalog adjoins.
struct SemilinearMap {
  Matrix A;
  unsigned j = 0;

  SemilinearMap() = default;
  SemilinearMap(Matrix a, unsigned twist = 0) : A(std::move(a)), j(twist) {}
  Vec apply(const Vec &v) const;
  SemilinearMap operator*(const SemilinearMap &o) const;
};

// Reduced row echelon form in place; returns the rank.
std::size_t rref(std::vector<Vec> &rows, const Field &F);

// Number of m-dimensional subspaces of GF(q)^n.
unsigned long long gaussian_binomial(unsigned n, unsigned m, unsigned q);

} // namespace basecraft
