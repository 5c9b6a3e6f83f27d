#include "basecraft/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace basecraft {

bool is_prime(unsigned long n) {
  if (n < 2)
    return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>; // constant term first, trimmed

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// remainder of a modulo monic-or-not b over Z_p
Poly poly_mod(Poly a, const Poly &b, unsigned p) {
  trim(a);
  Poly bb = b;
  trim(bb);
  if (bb.empty())
    throw std::invalid_argument("division by zero polynomial");
  unsigned lead_inv = 1;
  for (unsigned x = 1; x < p; ++x)
    if (bb.back() * x % p == 1)
      lead_inv = x;
  while (a.size() >= bb.size()) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i)
      a[shift + i] = (a[shift + i] + p - c * bb[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t code, unsigned p, std::size_t len) {
  Poly a(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    a[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return a;
}

FCode encode(const Poly &a, unsigned p) {
  FCode c = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    c = c * p + a[i];
  return c;
}

Poly poly_mul(const Poly &a, const Poly &b, unsigned p) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace

bool is_irreducible(const std::vector<unsigned> &poly, unsigned p) {
  Poly a = poly;
  trim(a);
  if (a.size() < 2)
    return false;
  std::size_t deg = a.size() - 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly b = decode(c, p, d);
      b.push_back(1);
      if (poly_mod(a, b, p).empty())
        return false;
    }
  }
  return true;
}

Field::Field(unsigned p, unsigned f) : p_(p), f_(f) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic must be prime");
  if (f < 1)
    throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > 65536)
      throw std::invalid_argument("field order exceeds 2^16");
  }
  q_ = static_cast<unsigned>(q);

  // least monic irreducible of degree f, ordered by integer code
  for (std::uint64_t c = 0; c < q; ++c) {
    Poly m = decode(c, p, f);
    m.push_back(1);
    if (is_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }
  auto slow_mul = [&](FCode a, FCode b) {
    return encode(poly_mod(poly_mul(decode(a, p, f), decode(b, p, f), p),
                           modulus_, p),
                  p);
  };
  auto slow_pow = [&](FCode a, unsigned long e) {
    FCode r = 1;
    while (e) {
      if (e & 1)
        r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  if (q_ == 2) {
    prim_ = 1;
  } else {
    auto divs = prime_divisors(q_ - 1);
    for (FCode g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : divs)
        ok = ok && slow_pow(g, (q_ - 1) / r) != 1;
      if (ok) {
        prim_ = g;
        break;
      }
    }
  }
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  FCode x = 1;
  for (unsigned k = 0; k < q_ - 1; ++k) {
    exp_[k] = exp_[k + q_ - 1] = x;
    log_[x] = k;
    x = slow_mul(x, prim_);
  }
  if (x != 1)
    throw std::logic_error("primitive element check failed");
  neg_.resize(q_);
  for (FCode a = 0; a < q_; ++a) {
    Poly d = decode(a, p, f);
    for (auto &c : d)
      c = (p - c) % p;
    neg_[a] = encode(d, p);
  }
  if (q_ <= 1024) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (FCode a = 0; a < q_; ++a)
      for (FCode b = 0; b < q_; ++b)
        add_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
  }
}

FCode Field::add_slow(FCode a, FCode b) const {
  if (p_ == 2)
    return a ^ b;
  FCode r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FCode Field::add(FCode a, FCode b) const {
  if (!add_.empty())
    return add_[a * q_ + b];
  return add_slow(a, b);
}

FCode Field::neg(FCode a) const { return neg_[a]; }
FCode Field::sub(FCode a, FCode b) const { return add(a, neg_[b]); }

FCode Field::inv(FCode a) const {
  if (a == 0)
    throw std::domain_error("division by zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FCode Field::div(FCode a, FCode b) const { return mul(a, inv(b)); }

FCode Field::pow(FCode a, long long k) const {
  if (a == 0) {
    if (k < 0)
      throw std::domain_error("division by zero in finite field");
    return k == 0 ? 1 : 0;
  }
  long long m = q_ - 1;
  long long e = (static_cast<long long>(log_[a]) * (k % m)) % m;
  if (e < 0)
    e += m;
  return exp_[e];
}

FCode Field::frob(FCode a, unsigned j) const {
  if (a == 0)
    return 0;
  std::uint64_t pj = 1;
  for (unsigned i = 0; i < j % f_; ++i)
    pj *= p_;
  return exp_[(log_[a] * pj) % (q_ - 1)];
}

FCode Field::power_of_primitive(long long k) const {
  long long m = q_ - 1;
  k %= m;
  if (k < 0)
    k += m;
  return exp_[k];
}

FCode Field::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return static_cast<FCode>(r);
}

FieldElem Field::elem(FCode c) const {
  if (c >= q_)
    throw std::out_of_range("field element code out of range");
  return FieldElem(*this, c);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") modulus";
  for (std::size_t i = modulus_.size(); i-- > 0;)
    os << ' ' << modulus_[i];
  os << " primitive " << prim_;
  return os.str();
}

struct FieldRegistry {
  std::mutex m;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> fields;
};

const Field &Field::get(unsigned p, unsigned f) {
  static FieldRegistry reg;
  std::lock_guard<std::mutex> lock(reg.m);
  auto &slot = reg.fields[{p, f}];
  if (!slot)
    slot.reset(new Field(p, f));
  return *slot;
}

const Field &Field::of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p)
      continue;
    unsigned f = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++f;
    }
    if (r != 1)
      break;
    return get(p, f);
  }
  throw std::invalid_argument("not a prime power: " + std::to_string(q));
}

FieldElem::FieldElem(const Field &F, FCode c) : F_(&F), c_(c) {
  if (c >= F.q())
    throw std::out_of_range("field element code out of range");
}

void FieldElem::same(const FieldElem &o) const {
  if (F_ != o.F_)
    throw std::invalid_argument("elements of different fields");
}

FieldElem FieldElem::operator+(const FieldElem &o) const {
  same(o);
  return {*F_, F_->add(c_, o.c_)};
}
FieldElem FieldElem::operator-(const FieldElem &o) const {
  same(o);
  return {*F_, F_->sub(c_, o.c_)};
}
FieldElem FieldElem::operator*(const FieldElem &o) const {
  same(o);
  return {*F_, F_->mul(c_, o.c_)};
}
FieldElem FieldElem::operator/(const FieldElem &o) const {
  same(o);
  return {*F_, F_->div(c_, o.c_)};
}
FieldElem FieldElem::operator-() const { return {*F_, F_->neg(c_)}; }
FieldElem FieldElem::inverse() const { return {*F_, F_->inv(c_)}; }
FieldElem FieldElem::pow(long long k) const { return {*F_, F_->pow(c_, k)}; }
FieldElem FieldElem::frobenius(unsigned j) const {
  return {*F_, F_->frob(c_, j)};
}

unsigned FieldElem::order() const {
  if (c_ == 0)
    return 0;
  unsigned m = F_->q() - 1, l = F_->log(c_);
  unsigned g = m;
  for (unsigned a = l; a;) {
    unsigned t = g % a;
    g = a;
    a = t;
  }
  return m / g;
}

} // namespace basecraft
