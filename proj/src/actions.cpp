#include "basecraft/actions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace basecraft {

Point LabelledDomain::intern(const std::vector<std::uint32_t> &label) {
  auto [it, fresh] = index.emplace(label, static_cast<Point>(labels.size()));
  if (fresh)
    labels.push_back(label);
  return it->second;
}

long LabelledDomain::find(const std::vector<std::uint32_t> &label) const {
  auto it = index.find(label);
  return it == index.end() ? -1 : static_cast<long>(it->second);
}

std::string LabelledDomain::dump() const {
  std::ostringstream os;
  for (const auto &l : labels) {
    for (std::size_t i = 0; i < l.size(); ++i)
      os << (i ? " " : "") << l[i];
    os << '\n';
  }
  return os.str();
}

std::vector<SemilinearMap> linear(const std::vector<Matrix> &ms) {
  std::vector<SemilinearMap> out;
  for (const auto &m : ms)
    out.emplace_back(m, 0);
  return out;
}

std::vector<std::uint32_t> subspace_label(std::vector<Vec> rows,
                                          const Field &F) {
  std::size_t m = rows.size();
  if (rref(rows, F) != m)
    throw std::invalid_argument("spanning rows are linearly dependent");
  std::vector<std::uint32_t> label;
  for (const auto &r : rows)
    label.insert(label.end(), r.begin(), r.end());
  return label;
}

std::vector<Vec> subspace_basis(const std::vector<std::uint32_t> &label,
                                unsigned n) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < label.size(); i += n)
    rows.emplace_back(label.begin() + i, label.begin() + i + n);
  return rows;
}

namespace {

Vec unit(unsigned n, unsigned i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

bool form_is_quadratic(const ClassicalForm &f) {
  return f.kind == FormKind::QuadraticPlus ||
         f.kind == FormKind::QuadraticMinus ||
         f.kind == FormKind::QuadraticOdd;
}

bool totally_isotropic(const std::vector<Vec> &rows, const ClassicalForm &f) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (form_is_quadratic(f) && f.Q(rows[i]) != 0)
      return false;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (f.B(rows[i], rows[j]) != 0)
        return false;
  }
  return true;
}

bool nondegenerate(const std::vector<Vec> &rows, const ClassicalForm &f) {
  const Field &F = f.gram.field();
  Matrix g(F, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      g.at(i, j) = f.B(rows[i], rows[j]);
  if (g.det() != 0)
    return true;
  // odd-dimensional quadratic spaces in characteristic 2: polar radical of
  // dimension one on which Q is nonzero
  return false;
}

std::vector<Vec> start_subspace(const Field &F, unsigned n, unsigned m,
                                SubspaceConstraint c, const ClassicalForm *f) {
  std::vector<Vec> rows;
  if (c == SubspaceConstraint::All || c == SubspaceConstraint::TotallyIsotropic) {
    for (unsigned i = 0; i < m; ++i)
      rows.push_back(unit(n, i));
    if (c == SubspaceConstraint::TotallyIsotropic && !totally_isotropic(rows, *f))
      throw std::invalid_argument("no totally isotropic subspace of that dimension");
    return rows;
  }
  // nondegenerate: hyperbolic pairs, then one anisotropic vector if m is odd
  for (unsigned i = 0; i < m / 2; ++i) {
    rows.push_back(unit(n, i));
    rows.push_back(unit(n, n - 1 - i));
  }
  if (m % 2) {
    bool found = false;
    unsigned k = m / 2;
    for (FCode a = 0; a < F.q() && !found; ++a)
      for (FCode b = 1; b < F.q() && !found; ++b) {
        Vec v(n, 0);
        v[k] = b;
        if (n - 1 - k != k)
          v[n - 1 - k] = a;
        else if (a)
          continue;
        auto trial = rows;
        trial.push_back(v);
        bool ok = form_is_quadratic(*f) ? f->Q(v) != 0 && nondegenerate(trial, *f)
                                        : nondegenerate(trial, *f);
        if (ok) {
          rows = trial;
          found = true;
        }
      }
    if (!found)
      throw std::invalid_argument("no nondegenerate subspace found");
  }
  if (!nondegenerate(rows, *f))
    throw std::invalid_argument("no nondegenerate subspace found");
  return rows;
}

} // namespace

Action subspace_action(const std::vector<SemilinearMap> &gens, const Field &F,
                       unsigned n, unsigned m, SubspaceConstraint constraint,
                       const ClassicalForm *form, const ActionBudget &budget) {
  if (m < 1 || m > n)
    throw std::invalid_argument("subspace dimension out of range");
  if (constraint != SubspaceConstraint::All && !form)
    throw std::invalid_argument("a form is required for this constraint");
  Action a;
  auto start = start_subspace(F, n, m, constraint, form);
  a.domain.intern(subspace_label(start, F));
  std::vector<std::vector<Point>> img(gens.size());
  for (std::size_t i = 0; i < a.domain.size(); ++i) {
    auto basis = subspace_basis(a.domain.labels[i], n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<Vec> im;
      for (const auto &r : basis)
        im.push_back(gens[g].apply(r));
      img[g].push_back(a.domain.intern(subspace_label(std::move(im), F)));
      if (a.domain.size() > budget.max_degree)
        throw BudgetExceeded("subspace orbit exceeds the degree budget");
    }
  }
  std::vector<Perm> perms;
  for (auto &v : img)
    perms.emplace_back(std::move(v));
  a.group = PermGroup(a.domain.size(), std::move(perms));
  return a;
}

Action vector_action(const std::vector<SemilinearMap> &gens, const Field &F,
                     unsigned n, const ActionBudget &budget) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i)
    total *= F.q();
  if (total - 1 > budget.max_degree)
    throw BudgetExceeded("vector space exceeds the degree budget");
  Action a;
  auto decode = [&](std::uint64_t c) {
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<FCode>(c % F.q());
      c /= F.q();
    }
    return v;
  };
  for (std::uint64_t c = 1; c < total; ++c)
    a.domain.intern(decode(c));
  std::vector<Perm> perms;
  for (const auto &g : gens) {
    std::vector<Point> img(a.domain.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = static_cast<Point>(a.domain.find(g.apply(a.domain.labels[i])));
    perms.emplace_back(std::move(img));
  }
  a.group = PermGroup(a.domain.size(), std::move(perms));
  return a;
}

Perm induced_on_subspaces(const SemilinearMap &g, const LabelledDomain &dom,
                          const Field &F, unsigned n) {
  std::vector<Point> img(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::vector<Vec> im;
    for (const auto &r : subspace_basis(dom.labels[i], n))
      im.push_back(g.apply(r));
    long j = dom.find(subspace_label(std::move(im), F));
    if (j < 0)
      throw std::invalid_argument("map does not preserve the domain");
    img[i] = static_cast<Point>(j);
  }
  return Perm(std::move(img));
}

CosetAction coset_action(const PermGroup &G, const PermGroup &H,
                         const ActionBudget &budget) {
  for (const auto &h : H.generators())
    if (!G.contains(h))
      throw std::invalid_argument("H is not a subgroup of G");
  const std::size_t n = G.degree();
  BigInt index = G.order() / H.order();
  if (index > big(budget.max_degree))
    throw BudgetExceeded("coset action exceeds the degree budget");

  std::vector<Point> gbase = G.chain().base();
  Rng rng(0xc05e7ULL);
  StabChain hc = H.chain().rebase(gbase, rng);
  const std::size_t L = gbase.size();
  // explicit transversals of H along G's base
  std::vector<std::vector<Point>> orbits(L);
  std::vector<std::vector<Perm>> trans(L);
  for (std::size_t i = 0; i < L; ++i) {
    orbits[i] = hc.level(i).orbit;
    for (Point d : orbits[i])
      trans[i].push_back(hc.transversal(i, d));
  }
  std::vector<Point> cur(n), tmp(n);
  auto label = [&](const Perm &g) {
    std::vector<std::uint32_t> lab(L);
    cur = g.images();
    for (std::size_t i = 0; i < L; ++i) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < orbits[i].size(); ++k)
        if (cur[orbits[i][k]] < cur[orbits[i][best]])
          best = k;
      lab[i] = cur[orbits[i][best]];
      if (best) {
        const Perm &u = trans[i][best];
        for (std::size_t x = 0; x < n; ++x)
          tmp[x] = cur[u[x]];
        cur.swap(tmp);
      }
    }
    return lab;
  };

  CosetAction out;
  auto &dom = out.action.domain;
  auto &reps = out.table.reps;
  reps.push_back(Perm(n));
  dom.intern(label(reps[0]));
  const auto &gens = G.generators();
  std::vector<std::vector<Point>> img(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm g = reps[i] * gens[s];
      std::size_t before = dom.size();
      Point j = dom.intern(label(g));
      if (dom.size() > before)
        reps.push_back(std::move(g));
      img[s].push_back(j);
    }
  }
  if (big(dom.size()) != index)
    throw std::logic_error("coset enumeration produced the wrong index");
  std::vector<Perm> perms;
  for (auto &v : img)
    perms.emplace_back(std::move(v));
  out.action.group = PermGroup(dom.size(), std::move(perms));
  out.action.group.set_order_bound(G.order());
  out.table.degree = dom.size();
  out.table.kernel_order = G.order() / out.action.group.order();
  return out;
}

Action subset_action(const PermGroup &G, unsigned k, std::vector<Point> start,
                     const ActionBudget &budget) {
  const std::size_t n = G.degree();
  if (k > n)
    throw std::invalid_argument("subset size exceeds the degree");
  Action a;
  if (start.empty()) {
    // all k-subsets in lexicographic order
    BigInt total = 1;
    for (unsigned i = 0; i < k; ++i)
      total = total * static_cast<unsigned long>(n - i) / (i + 1);
    if (total > big(budget.max_degree))
      throw BudgetExceeded("subset action exceeds the degree budget");
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 0u);
    while (true) {
      a.domain.intern(c);
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && c[i] == n - k + i)
        --i;
      if (i < 0)
        break;
      ++c[i];
      for (unsigned j = i + 1; j < k; ++j)
        c[j] = c[j - 1] + 1;
    }
  } else {
    if (start.size() != k)
      throw std::invalid_argument("starting subset has the wrong size");
    std::sort(start.begin(), start.end());
    a.domain.intern(start);
  }
  const auto &gens = G.generators();
  std::vector<std::vector<Point>> img(gens.size());
  std::vector<std::uint32_t> t(k);
  for (std::size_t i = 0; i < a.domain.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto &lab = a.domain.labels[i];
      for (unsigned j = 0; j < k; ++j)
        t[j] = gens[s][lab[j]];
      std::sort(t.begin(), t.end());
      img[s].push_back(a.domain.intern(t));
      if (a.domain.size() > budget.max_degree)
        throw BudgetExceeded("subset action exceeds the degree budget");
    }
  std::vector<Perm> perms;
  for (auto &v : img)
    perms.emplace_back(std::move(v));
  a.group = PermGroup(a.domain.size(), std::move(perms));
  return a;
}

Action pair_action(const PermGroup &G, const ActionBudget &budget) {
  return subset_action(G, 2, {}, budget);
}

Action orbit_action(const PermGroup &G, Point p) {
  Action a;
  a.domain.intern({p});
  const auto &gens = G.generators();
  std::vector<std::vector<Point>> img(gens.size());
  for (std::size_t i = 0; i < a.domain.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s)
      img[s].push_back(a.domain.intern({gens[s][a.domain.labels[i][0]]}));
  std::vector<Perm> perms;
  for (auto &v : img)
    perms.emplace_back(std::move(v));
  a.group = PermGroup(a.domain.size(), std::move(perms));
  a.group.set_order_bound(G.order());
  return a;
}

PermGroup product_action(const PermGroup &L, const PermGroup &P,
                         std::size_t max_degree) {
  const std::size_t g = L.degree(), m = P.degree();
  BigInt N = pow_big(BigInt(static_cast<unsigned long>(g)), m);
  if (N > big(max_degree))
    throw BudgetExceeded("product action exceeds the degree budget");
  const std::size_t total = to_u64(N);
  std::vector<std::size_t> pw(m + 1, 1);
  for (std::size_t i = 1; i <= m; ++i)
    pw[i] = pw[i - 1] * g;
  std::vector<Perm> gens;
  std::vector<Point> img(total);
  // one coordinate per orbit of the top group carries the base generators
  for (const auto &orb : P.orbits()) {
    std::size_t c = orb.front();
    for (const auto &s : L.generators()) {
      for (std::size_t x = 0; x < total; ++x) {
        std::size_t xc = (x / pw[c]) % g;
        img[x] = static_cast<Point>(x - xc * pw[c] + s[xc] * pw[c]);
      }
      Perm p(img);
      if (!p.is_identity())
        gens.push_back(std::move(p));
    }
  }
  for (const auto &pi : P.generators()) {
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t y = 0;
      for (std::size_t i = 0; i < m; ++i)
        y += ((x / pw[i]) % g) * pw[pi[i]];
      img[x] = static_cast<Point>(y);
    }
    Perm p(img);
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }
  PermGroup out(total, std::move(gens));
  out.set_order_bound(pow_big(L.order(), m) * P.order());
  return out;
}

PermGroup subgroup_filter(const PermGroup &G,
                          const std::function<bool(const Perm &)> &pred,
                          std::uint64_t cap) {
  if (G.order() > big(cap))
    throw BudgetExceeded("group too large for an element filter");
  ElementIndex idx(G.chain());
  std::vector<Perm> hits;
  idx.for_each([&](std::uint64_t, const Perm &x) {
    if (pred(x))
      hits.push_back(x);
  });
  Rng rng(0xf117e5ULL);
  // shuffle so that a few random members already generate
  std::shuffle(hits.begin(), hits.end(), rng);
  PermGroup H = generate_greedy(G.degree(), hits, rng);
  if (H.order() != big(hits.size()))
    throw std::logic_error("filter predicate does not define a subgroup");
  return H;
}

PermGroup set_stabiliser(const PermGroup &G, const std::vector<Point> &set,
                         std::uint64_t cap) {
  std::vector<char> in(G.degree(), 0);
  for (Point p : set)
    in[p] = 1;
  return subgroup_filter(
      G,
      [&](const Perm &x) {
        for (Point p : set)
          if (!in[x[p]])
            return false;
        return true;
      },
      cap);
}

PermGroup normaliser(const PermGroup &G, const PermGroup &S,
                     std::uint64_t cap) {
  std::vector<Perm> sg;
  for (const auto &s : S.generators())
    if (!s.is_identity())
      sg.push_back(s);
  const StabChain &sc = S.chain();
  return subgroup_filter(
      G,
      [&](const Perm &x) {
        Perm xi = x.inverse();
        for (const auto &s : sg)
          if (!sc.contains(xi * s * x))
            return false;
        return true;
      },
      cap);
}

// ---- L2(q) ----

namespace {

unsigned gcd(unsigned a, unsigned b) {
  while (b) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

bool L2Group::contains_pgl() const { return delta || q % 2 == 0; }

unsigned L2Group::index_over_socle() const {
  unsigned f = field().f();
  unsigned i = (delta && q % 2) ? 2 : 1;
  if (phi_power % f)
    i *= f / gcd(f, phi_power % f);
  return i;
}

BigInt L2Group::order() const {
  BigInt socle = BigInt(q) * (q * q - 1) / (q % 2 ? 2 : 1);
  return socle * index_over_socle();
}

std::string L2Group::name() const {
  std::string qs = std::to_string(q);
  unsigned f = field().f();
  bool phi = phi_power % f != 0;
  unsigned idx = index_over_socle();
  if (idx == 1)
    return "L2(" + qs + ")";
  if (!phi)
    return "PGL2(" + qs + ")";
  if (contains_pgl() && gcd(f, phi_power) == 1)
    return "PGammaL2(" + qs + ")";
  return "L2(" + qs + ")." + std::to_string(idx);
}

std::vector<SemilinearMap> L2Group::generators() const {
  const Field &F = field();
  std::vector<SemilinearMap> g;
  for (unsigned k = 0; k < F.f(); ++k) {
    FCode a = F.power_of_primitive(k);
    g.emplace_back(Matrix(F, 2, {1, a, 0, 1}));
    g.emplace_back(Matrix(F, 2, {1, 0, a, 1}));
  }
  if (delta)
    g.emplace_back(Matrix(F, 2, {F.primitive(), 0, 0, 1}));
  if (phi_power % F.f())
    g.emplace_back(Matrix::identity(F, 2), phi_power % F.f());
  return g;
}

std::string l2_subgroup_name(L2Subgroup t) {
  switch (t) {
  case L2Subgroup::P1:
    return "P1";
  case L2Subgroup::SplitNormaliser:
    return "split";
  case L2Subgroup::NonsplitNormaliser:
    return "nonsplit";
  case L2Subgroup::Octahedral:
    return "octahedral";
  case L2Subgroup::Subfield:
    return "subfield";
  }
  return "?";
}

L2Setting l2_on_projective_line(const L2Group &g) {
  const Field &F = g.field();
  L2Setting s;
  s.spec = g;
  s.line = subspace_action(g.generators(), F, 2, 1, SubspaceConstraint::All);
  s.line.group.set_order_bound(g.order());
  auto pt = [&](FCode a, FCode b) {
    return static_cast<Point>(
        s.line.domain.find(subspace_label({Vec{a, b}}, F)));
  };
  s.e1 = pt(1, 0);
  s.e2 = pt(0, 1);
  s.e1pe2 = pt(1, 1);
  s.e1pmue2 = pt(1, F.primitive());
  return s;
}

namespace {

// A 2x2 matrix of order q^2-1 (a Singer cycle): companion matrix of the
// minimal polynomial of a generator of GF(q^2)^x.
Matrix singer_cycle(const Field &F) {
  const unsigned long q = F.q(), N = q * q - 1;
  std::vector<unsigned long> primes;
  unsigned long r = N;
  for (unsigned long d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0)
        r /= d;
    }
  if (r > 1)
    primes.push_back(r);
  auto mpow = [&](Matrix a, unsigned long e) {
    Matrix out = Matrix::identity(F, 2);
    while (e) {
      if (e & 1)
        out = out * a;
      a = a * a;
      e >>= 1;
    }
    return out;
  };
  for (FCode t = 0; t < F.q(); ++t)
    for (FCode d = 1; d < F.q(); ++d) {
      Matrix C(F, 2, {0, 1, F.neg(d), t});
      if (!mpow(C, N).is_identity())
        continue;
      bool ok = true;
      for (auto pr : primes)
        ok = ok && !mpow(C, N / pr).is_identity();
      if (ok)
        return C;
    }
  throw std::logic_error("no Singer cycle found");
}

PermGroup socle_on_line(const L2Setting &s) {
  L2Group g0{s.spec.q, false, 0};
  std::vector<Perm> gens;
  for (const auto &m : g0.generators())
    gens.push_back(
        induced_on_subspaces(m, s.line.domain, s.spec.field(), 2));
  PermGroup G0(s.line.group.degree(), std::move(gens));
  G0.set_order_bound(g0.order());
  return G0;
}

} // namespace

PermGroup l2_subgroup(const L2Setting &s, L2Subgroup type) {
  const PermGroup &G = s.line.group;
  const Field &F = s.spec.field();
  switch (type) {
  case L2Subgroup::P1:
    return G.pointwise_stabiliser({s.e1});
  case L2Subgroup::SplitNormaliser:
    return set_stabiliser(G, {s.e1, s.e2});
  case L2Subgroup::NonsplitNormaliser: {
    Perm c = induced_on_subspaces(SemilinearMap(singer_cycle(F)),
                                  s.line.domain, F, 2);
    PermGroup T(G.degree(), {c});
    return normaliser(G, T);
  }
  case L2Subgroup::Octahedral: {
    if (s.spec.q % 2 == 0)
      throw std::invalid_argument("octahedral case needs odd q");
    PermGroup G0 = socle_on_line(s);
    auto elems = all_elements(G0);
    std::vector<Perm> invol;
    for (const auto &x : elems)
      if (x.prime_order() == 2)
        invol.push_back(x);
    for (std::size_t j = 1; j < invol.size(); ++j)
      if (invol[0] * invol[j] == invol[j] * invol[0]) {
        PermGroup V(G.degree(), {invol[0], invol[j]});
        return normaliser(G, V);
      }
    throw std::logic_error("no Klein four subgroup found");
  }
  case L2Subgroup::Subfield: {
    if (F.p() != 3 || F.f() < 3)
      throw std::invalid_argument("subfield case needs q = 3^k, k >= 3");
    std::vector<Perm> gens{
        induced_on_subspaces(SemilinearMap(Matrix(F, 2, {1, 1, 0, 1})),
                             s.line.domain, F, 2),
        induced_on_subspaces(SemilinearMap(Matrix(F, 2, {1, 0, 1, 1})),
                             s.line.domain, F, 2)};
    PermGroup S(G.degree(), std::move(gens));
    return normaliser(G, S);
  }
  }
  throw std::invalid_argument("unknown subgroup type");
}

PermGroup psl2_subgroup(unsigned q, L2Subgroup type, bool pgl) {
  if (q > 128)
    throw std::invalid_argument("q out of the supported range");
  L2Setting s = l2_on_projective_line(L2Group{q, pgl, 0});
  return l2_subgroup(s, type);
}

} // namespace basecraft
