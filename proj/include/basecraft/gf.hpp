#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace basecraft {

// Element codes: the residue sum c_i x^i is stored as the integer sum c_i p^i.
using FCode = std::uint32_t;

class FieldElem;

// GF(p^f) with log/antilog tables, q <= 2^16. Fields are interned: field(p,f)
// returns the same object every time, so identity comparison is meaningful.
class Field {
public:
  static const Field &get(unsigned p, unsigned f);
  static const Field &of_order(unsigned q);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  // Coefficients of the monic modulus, constant term first (size f+1).
  const std::vector<unsigned> &modulus() const { return modulus_; }
  FCode primitive() const { return prim_; }

  FCode add(FCode a, FCode b) const;
  FCode sub(FCode a, FCode b) const;
  FCode neg(FCode a) const;
  FCode mul(FCode a, FCode b) const {
    if (a == 0 || b == 0)
      return 0;
    return exp_[log_[a] + log_[b]];
  }
  FCode inv(FCode a) const;
  FCode div(FCode a, FCode b) const;
  FCode pow(FCode a, long long k) const;
  // a^(p^j)
  FCode frob(FCode a, unsigned j) const;
  // primitive^k
  FCode power_of_primitive(long long k) const;
  // discrete log base the primitive element; a != 0
  unsigned log(FCode a) const { return log_[a]; }
  // code of the integer k (mod p) in the prime field
  FCode from_int(long long k) const;
  // Is a in the subfield GF(p^e)? (e divides f)
  bool in_subfield(FCode a, unsigned e) const { return frob(a, e) == a; }

  FieldElem elem(FCode c) const;
  std::string describe() const;

private:
  Field(unsigned p, unsigned f);
  unsigned p_, f_, q_;
  std::vector<unsigned> modulus_;
  FCode prim_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<FCode> exp_;   // length 2(q-1)
  std::vector<std::uint16_t> add_; // full table for small q
  std::vector<FCode> neg_;

  FCode add_slow(FCode a, FCode b) const;
  friend struct FieldRegistry;
};

// Value type pairing a code with its field; mixing fields throws.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(const Field &F, FCode c);

  const Field &field() const { return *F_; }
  FCode code() const { return c_; }
  bool is_zero() const { return c_ == 0; }

  FieldElem operator+(const FieldElem &o) const;
  FieldElem operator-(const FieldElem &o) const;
  FieldElem operator*(const FieldElem &o) const;
  FieldElem operator/(const FieldElem &o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long long k) const;
  FieldElem frobenius(unsigned j) const;
  // Multiplicative order (0 for the zero element).
  unsigned order() const;
  bool operator==(const FieldElem &o) const {
    return F_ == o.F_ && c_ == o.c_;
  }
  bool operator!=(const FieldElem &o) const { return !(*this == o); }

private:
  const Field *F_ = nullptr;
  FCode c_ = 0;
  void same(const FieldElem &o) const;
};

bool is_prime(unsigned long n);
// Is the polynomial (constant term first) irreducible over Z_p?
bool is_irreducible(const std::vector<unsigned> &poly, unsigned p);

} // namespace basecraft
