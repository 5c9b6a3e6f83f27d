#include "basecraft/classical.hpp"

#include <sstream>
#include <stdexcept>

namespace basecraft {

namespace {

BigInt ipow(unsigned long b, unsigned long e) {
  return pow_big(BigInt(b), e);
}

Vec unit(unsigned n, unsigned i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// Rows of the matrix of a map given on the standard basis.
template <class F> Matrix matrix_of(const Field &K, unsigned n, F &&image) {
  Matrix m(K, n);
  for (unsigned i = 0; i < n; ++i) {
    Vec r = image(unit(n, i));
    for (unsigned j = 0; j < n; ++j)
      m.at(i, j) = r[j];
  }
  return m;
}

Vec axpy(const Field &K, const Vec &x, FCode a, const Vec &y) {
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = K.add(r[i], K.mul(a, y[i]));
  return r;
}

// Additive basis {mu^k : k < f} of GF(p^f) over GF(p).
std::vector<FCode> additive_basis(const Field &K) {
  std::vector<FCode> b;
  for (unsigned k = 0; k < K.f(); ++k)
    b.push_back(K.power_of_primitive(k));
  return b;
}

unsigned gcd(unsigned a, unsigned b) {
  while (b) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

FCode ClassicalForm::B(const Vec &u, const Vec &v) const {
  const Field &K = gram.field();
  Vec w = vec_frob(v, K, twist);
  Vec uj = vec_times(u, gram);
  FCode r = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    r = K.add(r, K.mul(uj[i], w[i]));
  return r;
}

FCode ClassicalForm::Q(const Vec &v) const {
  const Field &K = quad.field();
  FCode r = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j)
      if (quad.at(i, j))
        r = K.add(r, K.mul(quad.at(i, j), K.mul(v[i], v[j])));
  return r;
}

ClassicalForm standard_form(FormKind kind, const Field &K, unsigned n) {
  ClassicalForm f;
  f.kind = kind;
  f.gram = Matrix(K, n);
  f.quad = Matrix(K, n);
  switch (kind) {
  case FormKind::None:
    break;
  case FormKind::Symplectic:
    if (n % 2)
      throw std::invalid_argument("symplectic forms need even dimension");
    for (unsigned i = 0; i < n; ++i)
      f.gram.at(i, n - 1 - i) = i < n / 2 ? 1 : K.neg(1);
    break;
  case FormKind::Unitary:
    if (K.f() % 2)
      throw std::invalid_argument("unitary forms need a field of square order");
    f.twist = K.f() / 2;
    for (unsigned i = 0; i < n; ++i)
      f.gram.at(i, n - 1 - i) = 1;
    break;
  case FormKind::QuadraticPlus:
  case FormKind::QuadraticMinus:
  case FormKind::QuadraticOdd: {
    unsigned pairs = n / 2;
    if (kind == FormKind::QuadraticMinus)
      pairs = n / 2 - 1;
    if ((kind == FormKind::QuadraticOdd) != (n % 2 == 1))
      throw std::invalid_argument("quadratic form type and dimension parity");
    for (unsigned i = 0; i < pairs; ++i)
      f.quad.at(i, n - 1 - i) = 1;
    if (kind == FormKind::QuadraticMinus) {
      unsigned a = n / 2 - 1, b = n / 2;
      // x^2 + x + nu irreducible
      FCode nu = 0;
      for (FCode c = 1; c < K.q() && !nu; ++c) {
        bool root = false;
        for (FCode x = 0; x < K.q() && !root; ++x)
          root = K.add(K.add(K.mul(x, x), x), c) == 0;
        if (!root)
          nu = c;
      }
      f.quad.at(a, a) = 1;
      f.quad.at(a, b) = 1;
      f.quad.at(b, b) = nu;
    }
    if (kind == FormKind::QuadraticOdd)
      f.quad.at(n / 2, n / 2) = 1;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        f.gram.at(i, j) = K.add(f.quad.at(i, j), f.quad.at(j, i));
    break;
  }
  }
  return f;
}

bool preserves_form(const Matrix &A, const ClassicalForm &form) {
  const Field &K = A.field();
  const unsigned n = static_cast<unsigned>(A.n());
  if (form.kind == FormKind::None)
    return true;
  if (A.n() != form.gram.n())
    throw std::invalid_argument("form dimension mismatch");
  if (A * form.gram * A.conj_transpose(form.twist) != form.gram)
    return false;
  if (form.kind == FormKind::QuadraticPlus ||
      form.kind == FormKind::QuadraticMinus ||
      form.kind == FormKind::QuadraticOdd) {
    // with the polarisation preserved, Q is preserved iff it is on a basis
    for (unsigned i = 0; i < n; ++i) {
      Vec e = unit(n, i);
      if (form.Q(vec_times(e, A)) != form.Q(e))
        return false;
    }
  }
  (void)K;
  return true;
}

std::string family_name(Family f) {
  switch (f) {
  case Family::SL:
    return "SL";
  case Family::GL:
    return "GL";
  case Family::SU:
    return "SU";
  case Family::GU:
    return "GU";
  case Family::Sp:
    return "Sp";
  case Family::OmegaPlus:
    return "OmegaPlus";
  case Family::OmegaMinus:
    return "OmegaMinus";
  case Family::SOOdd:
    return "SO";
  }
  return "?";
}

MatGroupSpec MatGroupSpec::parse(const std::string &s) {
  auto d1 = s.find('-');
  auto d2 = s.find('-', d1 == std::string::npos ? d1 : d1 + 1);
  if (d1 == std::string::npos || d2 == std::string::npos)
    throw std::invalid_argument("group spec must look like family-n-q");
  std::string fam = s.substr(0, d1);
  MatGroupSpec spec;
  if (fam == "SL")
    spec.family = Family::SL;
  else if (fam == "GL")
    spec.family = Family::GL;
  else if (fam == "SU")
    spec.family = Family::SU;
  else if (fam == "GU")
    spec.family = Family::GU;
  else if (fam == "Sp")
    spec.family = Family::Sp;
  else if (fam == "OmegaPlus" || fam == "O+")
    spec.family = Family::OmegaPlus;
  else if (fam == "OmegaMinus" || fam == "O-")
    spec.family = Family::OmegaMinus;
  else if (fam == "SO")
    spec.family = Family::SOOdd;
  else
    throw std::invalid_argument("unknown group family " + fam);
  try {
    spec.n = static_cast<unsigned>(std::stoul(s.substr(d1 + 1, d2 - d1 - 1)));
    spec.q = static_cast<unsigned>(std::stoul(s.substr(d2 + 1)));
  } catch (const std::exception &) {
    throw std::invalid_argument("group spec must look like family-n-q");
  }
  return spec;
}

std::string MatGroupSpec::str() const {
  std::ostringstream os;
  os << family_name(family) << '-' << n << '-' << q;
  return os.str();
}

namespace {

void check_supported(const MatGroupSpec &s) {
  auto fail = [&] {
    throw std::invalid_argument("unsupported group spec " + s.str());
  };
  switch (s.family) {
  case Family::SL:
  case Family::GL:
    if (s.n < 2 || s.n > 6 || s.q > 13)
      fail();
    break;
  case Family::SU:
  case Family::GU:
    if (s.n < 2 || s.n > 5 || s.q > 4)
      fail();
    break;
  case Family::Sp:
    if (s.n != 4 && s.n != 2 && s.n != 6)
      fail();
    if (s.q > 8)
      fail();
    break;
  case Family::OmegaPlus:
  case Family::OmegaMinus:
    if (s.n < 4 || s.n > 8 || s.n % 2 || s.q > 3)
      fail();
    break;
  case Family::SOOdd:
    if (s.n < 3 || s.n > 7 || s.n % 2 == 0 || s.q > 3)
      fail();
    break;
  }
  Field::of_order(s.q); // validates prime power
}

Matrix eichler(const ClassicalForm &form, const Vec &u, const Vec &v) {
  const Field &K = form.gram.field();
  unsigned n = static_cast<unsigned>(u.size());
  FCode qv = form.Q(v);
  return matrix_of(K, n, [&](const Vec &x) {
    FCode bu = form.B(x, u), bv = form.B(x, v);
    Vec r = axpy(K, x, bu, v);
    r = axpy(K, r, K.neg(bv), u);
    return axpy(K, r, K.neg(K.mul(qv, bu)), u);
  });
}

Matrix reflection(const ClassicalForm &form, const Vec &a) {
  const Field &K = form.gram.field();
  unsigned n = static_cast<unsigned>(a.size());
  FCode inv = K.inv(form.Q(a));
  return matrix_of(K, n, [&](const Vec &x) {
    return axpy(K, x, K.neg(K.mul(form.B(x, a), inv)), a);
  });
}

// x -> x + a B(x,v) v
Matrix transvection(const ClassicalForm &form, const Vec &v, FCode a) {
  const Field &K = form.gram.field();
  unsigned n = static_cast<unsigned>(v.size());
  return matrix_of(K, n, [&](const Vec &x) {
    return axpy(K, x, K.mul(a, form.B(x, v)), v);
  });
}

} // namespace

ClassicalGroup classical_generators(const MatGroupSpec &spec) {
  check_supported(spec);
  ClassicalGroup g;
  g.spec = spec;
  const unsigned n = spec.n;
  const bool unitary = spec.family == Family::SU || spec.family == Family::GU;
  const Field &Fq = Field::of_order(spec.q);
  const Field &K = unitary ? Field::get(Fq.p(), 2 * Fq.f()) : Fq;
  g.field = &K;
  auto push = [&](const Matrix &m) {
    if (!m.is_identity())
      g.gens.push_back(m);
  };

  switch (spec.family) {
  case Family::SL:
  case Family::GL: {
    g.form = standard_form(FormKind::None, K, n);
    for (FCode a : additive_basis(K))
      for (unsigned i = 0; i + 1 < n; ++i) {
        Matrix up = Matrix::identity(K, n), down = Matrix::identity(K, n);
        up.at(i, i + 1) = a;
        down.at(i + 1, i) = a;
        push(up);
        push(down);
      }
    if (spec.family == Family::GL) {
      std::vector<FCode> d(n, 1);
      d[0] = K.primitive();
      push(Matrix::diag(K, d));
    }
    break;
  }
  case Family::Sp: {
    g.form = standard_form(FormKind::Symplectic, K, n);
    std::vector<Vec> vs;
    for (unsigned i = 0; i < n; ++i)
      vs.push_back(unit(n, i));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        Vec v = unit(n, i);
        v[j] = 1;
        vs.push_back(v);
      }
    for (const auto &v : vs)
      for (FCode a : additive_basis(K))
        push(transvection(g.form, v, a));
    break;
  }
  case Family::SU:
  case Family::GU: {
    g.form = standard_form(FormKind::Unitary, K, n);
    const unsigned t = g.form.twist;
    // trace-zero scalars: a^q = -a
    std::vector<FCode> tz;
    FCode eps = 1;
    if (K.p() != 2) {
      for (FCode c = 1; c < K.q(); ++c)
        if (K.frob(c, t) == K.neg(c)) {
          eps = c;
          break;
        }
    }
    for (unsigned k = 0; k < Fq.f(); ++k) {
      // mu0 = primitive element of the subfield GF(q)
      FCode mu0 = K.power_of_primitive(static_cast<long long>(Fq.q() + 1));
      tz.push_back(K.mul(eps, K.pow(mu0, k)));
    }
    std::vector<Vec> iso;
    for (unsigned i = 0; i < n; ++i)
      if (2 * i + 1 != n)
        iso.push_back(unit(n, i));
    const auto kb = additive_basis(K);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        if (i + j + 1 == n)
          continue;
        for (FCode b : kb) {
          Vec v = unit(n, i);
          v[j] = b;
          iso.push_back(v);
        }
      }
    // e_0 + b e_i + c e_{n-1} with c chosen to make the vector isotropic
    for (unsigned i = 1; i + 1 < n; ++i)
      for (FCode b : kb) {
        Vec v = unit(n, 0);
        v[i] = b;
        for (FCode c = 0; c < K.q(); ++c) {
          v[n - 1] = c;
          if (g.form.B(v, v) == 0) {
            iso.push_back(v);
            break;
          }
        }
      }
    for (const auto &v : iso) {
      if (g.form.B(v, v) != 0)
        continue;
      for (FCode a : tz)
        push(transvection(g.form, v, a));
    }
    // For odd n, unipotent elements of the Borel subgroup acting on
    // <e_0, w, e_{n-1}> (w the middle vector); SU_3(2) is not generated by
    // transvections alone.
    if (n % 2) {
      const unsigned mid = n / 2;
      for (FCode b : kb)
        for (int lower = 0; lower < 2; ++lower) {
          unsigned top = lower ? n - 1 : 0, bot = lower ? 0 : n - 1;
          for (FCode c = 0; c < K.q(); ++c) {
            Matrix m = Matrix::identity(K, n);
            m.at(top, mid) = b;
            m.at(top, bot) = c;
            m.at(mid, bot) = K.neg(K.frob(b, t));
            if (preserves_form(m, g.form)) {
              push(m);
              break;
            }
          }
        }
    }
    if (spec.family == Family::GU) {
      std::vector<FCode> d(n, 1);
      FCode lam = K.primitive();
      d[0] = lam;
      d[n - 1] = K.inv(K.frob(lam, t));
      if (n == 1)
        d[0] = K.mul(lam, d[0]);
      push(Matrix::diag(K, d));
    }
    break;
  }
  case Family::OmegaPlus:
  case Family::OmegaMinus:
  case Family::SOOdd: {
    FormKind kind = spec.family == Family::OmegaPlus    ? FormKind::QuadraticPlus
                    : spec.family == Family::OmegaMinus ? FormKind::QuadraticMinus
                                                        : FormKind::QuadraticOdd;
    g.form = standard_form(kind, K, n);
    unsigned pairs = kind == FormKind::QuadraticMinus ? n / 2 - 1 : n / 2;
    std::vector<unsigned> singular;
    for (unsigned i = 0; i < pairs; ++i) {
      singular.push_back(i);
      singular.push_back(n - 1 - i);
    }
    for (unsigned ui : singular)
      for (unsigned vi = 0; vi < n; ++vi) {
        if (vi == ui || vi == n - 1 - ui)
          continue;
        push(eichler(g.form, unit(n, ui), unit(n, vi)));
      }
    if (kind == FormKind::QuadraticOdd && K.p() != 2) {
      // two reflections with Q values in different square classes
      Vec a = unit(n, n / 2);
      FCode nonsq = K.primitive();
      Vec b = unit(n, 0);
      b[n - 1] = nonsq;
      push(reflection(g.form, a) * reflection(g.form, b));
    }
    break;
  }
  }
  for (const auto &m : g.gens)
    if (!preserves_form(m, g.form))
      throw std::logic_error("generator fails to preserve the form");
  return g;
}

BigInt classical_order(const MatGroupSpec &s) {
  const unsigned long q = s.q, n = s.n;
  BigInt r = 1;
  switch (s.family) {
  case Family::SL:
  case Family::GL:
    r = ipow(q, n * (n - 1) / 2);
    for (unsigned long i = 2; i <= n; ++i)
      r *= ipow(q, i) - 1;
    if (s.family == Family::GL)
      r *= q - 1;
    return r;
  case Family::SU:
  case Family::GU:
    r = ipow(q, n * (n - 1) / 2);
    for (unsigned long i = 2; i <= n; ++i)
      r *= BigInt(ipow(q, i) + (i % 2 ? 1 : -1));
    if (s.family == Family::GU)
      r *= q + 1;
    return r;
  case Family::Sp: {
    unsigned long m = n / 2;
    r = ipow(q, m * m);
    for (unsigned long i = 1; i <= m; ++i)
      r *= ipow(q, 2 * i) - 1;
    return r;
  }
  case Family::OmegaPlus:
  case Family::OmegaMinus: {
    unsigned long m = n / 2;
    r = ipow(q, m * (m - 1));
    r *= BigInt(ipow(q, m) + (s.family == Family::OmegaPlus ? -1 : 1));
    for (unsigned long i = 1; i < m; ++i)
      r *= ipow(q, 2 * i) - 1;
    return r / gcd(2, static_cast<unsigned>(q - 1));
  }
  case Family::SOOdd: {
    unsigned long m = n / 2;
    r = ipow(q, m * m);
    for (unsigned long i = 1; i <= m; ++i)
      r *= ipow(q, 2 * i) - 1;
    return r;
  }
  }
  return r;
}

} // namespace basecraft
