#include "basecraft/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace basecraft {

Matrix::Matrix(const Field &F, std::size_t n) : F_(&F), n_(n), a_(n * n, 0) {}

Matrix::Matrix(const Field &F, std::size_t n, std::vector<FCode> rowmajor)
    : F_(&F), n_(n), a_(std::move(rowmajor)) {
  if (a_.size() != n * n)
    throw std::invalid_argument("matrix entry count mismatch");
  for (FCode c : a_)
    if (c >= F.q())
      throw std::out_of_range("matrix entry outside the field");
}

Matrix Matrix::identity(const Field &F, std::size_t n) {
  Matrix m(F, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diag(const Field &F, const std::vector<FCode> &d) {
  Matrix m(F, d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m.at(i, i) = d[i];
  return m;
}

void Matrix::same(const Matrix &o) const {
  if (F_ != o.F_)
    throw std::invalid_argument("matrices over different fields");
  if (n_ != o.n_)
    throw std::invalid_argument("matrix dimension mismatch");
}

Matrix Matrix::operator*(const Matrix &b) const {
  same(b);
  Matrix r(*F_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      FCode x = at(i, k);
      if (!x)
        continue;
      for (std::size_t j = 0; j < n_; ++j)
        r.at(i, j) = F_->add(r.at(i, j), F_->mul(x, b.at(k, j)));
    }
  return r;
}

Matrix Matrix::inverse() const {
  const Field &F = *F_;
  Matrix a = *this, r = identity(F, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a.at(piv, c) == 0)
      ++piv;
    if (piv == n_)
      throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(a.at(c, j), a.at(piv, j));
      std::swap(r.at(c, j), r.at(piv, j));
    }
    FCode s = F.inv(a.at(c, c));
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), s);
      r.at(c, j) = F.mul(r.at(c, j), s);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a.at(i, c) == 0)
        continue;
      FCode m = F.neg(a.at(i, c));
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(i, j) = F.add(a.at(i, j), F.mul(m, a.at(c, j)));
        r.at(i, j) = F.add(r.at(i, j), F.mul(m, r.at(c, j)));
      }
    }
  }
  return r;
}

FCode Matrix::det() const {
  const Field &F = *F_;
  Matrix a = *this;
  FCode d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a.at(piv, c) == 0)
      ++piv;
    if (piv == n_)
      return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j)
        std::swap(a.at(c, j), a.at(piv, j));
      d = F.neg(d);
    }
    d = F.mul(d, a.at(c, c));
    FCode s = F.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n_; ++i) {
      if (a.at(i, c) == 0)
        continue;
      FCode m = F.neg(F.mul(a.at(i, c), s));
      for (std::size_t j = c; j < n_; ++j)
        a.at(i, j) = F.add(a.at(i, j), F.mul(m, a.at(c, j)));
    }
  }
  return d;
}

Matrix Matrix::transpose() const {
  Matrix r(*F_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::frob(unsigned j) const {
  Matrix r = *this;
  for (auto &c : r.a_)
    c = F_->frob(c, j);
  return r;
}

Matrix Matrix::conj_transpose(unsigned twist) const {
  return frob(twist).transpose();
}

bool Matrix::is_identity() const { return *this == identity(*F_, n_); }

bool Matrix::operator==(const Matrix &o) const {
  return F_ == o.F_ && n_ == o.n_ && a_ == o.a_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j)
      os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Vec vec_times(const Vec &v, const Matrix &A) {
  const Field &F = A.field();
  const std::size_t n = A.n();
  Vec r(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!v[k])
      continue;
    for (std::size_t j = 0; j < n; ++j)
      r[j] = F.add(r[j], F.mul(v[k], A.at(k, j)));
  }
  return r;
}

Vec vec_frob(const Vec &v, const Field &F, unsigned j) {
  Vec r(v);
  if (j % F.f())
    for (auto &c : r)
      c = F.frob(c, j);
  return r;
}

Vec SemilinearMap::apply(const Vec &v) const {
  return vec_frob(vec_times(v, A), A.field(), j);
}

SemilinearMap SemilinearMap::operator*(const SemilinearMap &o) const {
  // v (A,j) (B,k) = ((vA)^s^j B)^s^k = (v A B^(s^-j))^(s^(j+k))
  const unsigned f = A.field().f();
  unsigned back = (f - j % f) % f;
  return SemilinearMap(A * o.A.frob(back), (j + o.j) % f);
}

std::size_t rref(std::vector<Vec> &rows, const Field &F) {
  if (rows.empty())
    return 0;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    FCode s = F.inv(rows[r][c]);
    for (auto &x : rows[r])
      x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      FCode m = F.neg(rows[i][c]);
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = F.add(rows[i][j], F.mul(m, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

unsigned long long gaussian_binomial(unsigned n, unsigned m, unsigned q) {
  // rank recursion: [n,m] = [n-1,m-1] + q^m [n-1,m]
  if (m > n)
    return 0;
  std::vector<std::vector<unsigned long long>> t(
      n + 1, std::vector<unsigned long long>(n + 1, 0));
  for (unsigned a = 0; a <= n; ++a) {
    t[a][0] = 1;
    for (unsigned b = 1; b <= a; ++b) {
      unsigned long long qb = 1;
      for (unsigned k = 0; k < b; ++k)
        qb *= q;
      t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? qb * t[a - 1][b] : 0);
    }
  }
  return t[n][m];
}

} // namespace basecraft
