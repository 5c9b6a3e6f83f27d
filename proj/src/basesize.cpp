#include "basecraft/basesize.hpp"
#include "basecraft/kernels.hpp"
#include "basecraft/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>

namespace basecraft {

std::string lower_kind_name(LowerKind k) {
  switch (k) {
  case LowerKind::LogBound:
    return "log-bound";
  case LowerKind::NoRegularOrbit:
    return "no-regular-orbit";
  case LowerKind::Exhaustive:
    return "exhaustive";
  }
  return "?";
}

bool is_base(const PermGroup &G, const std::vector<Point> &points) {
  for (Point p : points)
    if (p >= G.degree())
      throw std::out_of_range("base point outside the domain");
  Rng rng(0xba5e ^ points.size());
  return G.chain().pointwise_stabiliser(points, rng).trivial();
}

unsigned log_lower_bound(const PermGroup &G) {
  const BigInt order = G.order();
  const BigInt n = big(G.degree());
  if (order == 1)
    return 0;
  if (n < 2)
    throw std::domain_error("nontrivial group on fewer than two points");
  unsigned k = 0;
  BigInt pw = 1;
  while (pw < order) {
    pw *= n;
    ++k;
  }
  return k;
}

namespace {

// Prime-order elements fixing each point, as one bitset row per point. A
// tuple is a base exactly when no prime-order element fixes all of it.
class FixBitsets {
public:
  static std::optional<FixBitsets> build(const PermGroup &G) {
    constexpr std::uint64_t kMaxElems = 100'000;
    constexpr std::uint64_t kMaxBits = std::uint64_t{1} << 27;
    if (G.order() > big(kMaxElems) ||
        G.order() * G.degree() > big(50'000'000))
      return std::nullopt;
    std::vector<Perm> prime;
    for (auto &g : all_elements(G, kMaxElems))
      if (g.prime_order())
        prime.push_back(std::move(g));
    FixBitsets f;
    f.n_ = G.degree();
    f.words_ = std::max<std::size_t>(1, (prime.size() + 63) / 64);
    if (f.n_ * f.words_ * 64 > kMaxBits)
      return std::nullopt;
    f.rows_.assign(f.n_ * f.words_, 0);
    for (std::size_t e = 0; e < prime.size(); ++e)
      for (Point p = 0; p < f.n_; ++p)
        if (prime[e][p] == p)
          f.rows_[p * f.words_ + e / 64] |= std::uint64_t{1} << (e % 64);
    return f;
  }

  bool is_base(const Point *pts, std::size_t c,
               std::vector<std::uint64_t> &acc) const {
    const auto &K = kernels::active();
    acc.assign(words_, ~std::uint64_t{0});
    for (std::size_t i = 0; i < c; ++i) {
      K.and_into(acc.data(), &rows_[pts[i] * words_], words_);
      if (!K.any_set(acc.data(), words_))
        return true;
    }
    return !K.any_set(acc.data(), words_);
  }

private:
  std::size_t n_ = 0, words_ = 0;
  std::vector<std::uint64_t> rows_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(item),
                    static_cast<std::uint32_t>(item >> 32)};
  std::uint32_t w[2];
  seq.generate(w, w + 2);
  return (std::uint64_t{w[0]} << 32) | w[1];
}

// Orbit representatives with sizes; the representative is the chain's first
// base point when it lies in the orbit, so the stabiliser is a cheap tail.
struct OrbitRep {
  Point rep;
  std::size_t size;
};

std::vector<OrbitRep> orbit_reps(const StabChain &K, bool skip_fixed) {
  std::vector<OrbitRep> out;
  Point b0 = K.length() ? K.level(0).base : Point(-1);
  for (const auto &o : K.orbits()) {
    if (skip_fixed && o.size() == 1)
      continue;
    Point rep = o.front();
    if (std::find(o.begin(), o.end(), b0) != o.end())
      rep = b0;
    out.push_back({rep, o.size()});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const OrbitRep &a, const OrbitRep &b) {
                     return a.size < b.size;
                   });
  return out;
}

struct Searcher {
  std::uint64_t max_nodes;
  std::atomic<std::uint64_t> *nodes;

  void tick() {
    if (nodes->fetch_add(1) + 1 > max_nodes)
      throw BudgetExceeded("base search node budget exhausted");
  }

  static std::size_t max_orbit(const std::vector<OrbitRep> &reps) {
    std::size_t m = 1;
    for (const auto &o : reps)
      m = std::max(m, o.size);
    return m;
  }

  // Orders of subgroups can only shrink, and orbit lengths along a path
  // multiply to |K|, so |K| > maxorbit^r rules out an r-point base.
  static bool hopeless(const BigInt &order, std::size_t maxorb, unsigned r) {
    return order > pow_big(big(maxorb), r);
  }

  bool exists(const StabChain &K, unsigned r, std::vector<Point> &path,
              Rng &rng) {
    tick();
    if (K.trivial())
      return true;
    if (r == 0)
      return false;
    auto reps = orbit_reps(K, true);
    const BigInt order = K.order();
    if (hopeless(order, max_orbit(reps), r))
      return false;
    if (r == 1) {
      for (const auto &o : reps)
        if (big(o.size) == order) {
          path.push_back(o.rep);
          return true;
        }
      return false;
    }
    for (const auto &o : reps) {
      StabChain S = K.pointwise_stabiliser({o.rep}, rng);
      path.push_back(o.rep);
      if (exists(S, r - 1, path, rng))
        return true;
      path.pop_back();
    }
    return false;
  }

  BigInt count(const StabChain &K, unsigned r, Rng &rng) {
    tick();
    const std::size_t n = K.degree();
    if (K.trivial())
      return pow_big(big(n), r);
    if (r == 0)
      return 0;
    auto reps = orbit_reps(K, false);
    const BigInt order = K.order();
    if (hopeless(order, max_orbit(reps), r))
      return 0;
    BigInt total = 0;
    if (r == 1) {
      for (const auto &o : reps)
        if (big(o.size) == order)
          total += big(o.size);
      return total;
    }
    BigInt fixed_contrib;
    bool have_fixed = false;
    for (const auto &o : reps) {
      if (o.size == 1) {
        // Every fixed point leaves K unchanged.
        if (!have_fixed) {
          fixed_contrib = count(K, r - 1, rng);
          have_fixed = true;
        }
        total += fixed_contrib;
        continue;
      }
      StabChain S = K.pointwise_stabiliser({o.rep}, rng);
      total += big(o.size) * count(S, r - 1, rng);
    }
    return total;
  }
};

} // namespace

std::optional<BaseCertificate> random_base_search(const PermGroup &G,
                                                  unsigned c,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed) {
  const std::size_t n = G.degree();
  if (G.is_trivial())
    return BaseCertificate{{}, true};
  if (c == 0 || n == 0)
    return std::nullopt;
  Rng rng(seed);
  std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
  auto bits = FixBitsets::build(G);
  std::vector<std::uint64_t> acc;
  std::vector<Point> pts(c);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto &p : pts)
      p = pick(rng);
    bool ok = bits ? bits->is_base(pts.data(), c, acc) : is_base(G, pts);
    if (ok)
      return BaseCertificate{pts, is_base(G, pts)};
  }
  return std::nullopt;
}

bool exists_base_of_size(const PermGroup &G, unsigned r,
                         std::vector<Point> *witness,
                         const SearchBudget &budget, std::uint64_t seed,
                         std::uint64_t *nodes) {
  std::atomic<std::uint64_t> counter{0};
  Searcher s{budget.max_nodes, &counter};
  Rng rng(seed);
  std::vector<Point> path;
  bool found = false;
  try {
    found = s.exists(G.chain(), r, path, rng);
  } catch (...) {
    if (nodes)
      *nodes += counter.load();
    throw;
  }
  if (nodes)
    *nodes += counter.load();
  if (found && witness)
    *witness = path;
  return found;
}

BaseSizeResult exact_base_size(const PermGroup &G, const SearchBudget &budget,
                               std::uint64_t seed) {
  BaseSizeResult res;
  res.lo = log_lower_bound(G);
  res.lo_kind = LowerKind::LogBound;
  auto chain_base = G.chain().base();
  res.hi = static_cast<unsigned>(chain_base.size());
  res.hi_cert = {chain_base, true};

  // A short random probe usually lands on a minimal base at once.
  auto probe = [&](std::uint64_t trials) {
    for (unsigned c = res.lo; c < res.hi; ++c) {
      auto found = random_base_search(G, c, trials, seed + c);
      if (found && found->verified) {
        res.hi = c;
        res.hi_cert = *found;
        return;
      }
    }
  };
  probe(std::min<std::uint64_t>(budget.random_trials, 256));
  try {
    while (res.lo < res.hi) {
      std::vector<Point> w;
      if (exists_base_of_size(G, res.hi - 1, &w, budget, seed, &res.nodes)) {
        res.hi -= 1;
        res.hi_cert = {w, is_base(G, w)};
      } else {
        res.lo = res.hi;
        res.lo_kind = LowerKind::Exhaustive;
      }
    }
  } catch (const BudgetExceeded &) {
    res.budget_exceeded = true;
    probe(budget.random_trials);
  }
  res.exact = res.lo == res.hi;
  return res;
}

QReport q_bound(const ClassTable &classes, std::size_t degree, unsigned c) {
  QReport r;
  r.c = c;
  r.exact = classes.exact;
  r.degree = degree;
  r.total = 0;
  for (const auto &cl : classes.classes) {
    if (!cl.complete)
      continue;
    QRow row;
    row.rep = cl.rep;
    row.prime = cl.prime;
    row.class_size = cl.class_size;
    row.fixed_points = cl.fixed_points;
    row.fpr = Rational(big(cl.fixed_points), big(degree));
    row.fpr.canonicalize();
    Rational pw = 1;
    for (unsigned i = 0; i < c; ++i)
      pw *= row.fpr;
    row.contribution = Rational(cl.class_size) * pw;
    row.contribution.canonicalize();
    r.total += row.contribution;
    r.rows.push_back(std::move(row));
  }
  r.total.canonicalize();
  return r;
}

QReport q_bound(const PermGroup &G, unsigned c, std::uint64_t cap,
                std::uint64_t seed) {
  return q_bound(prime_order_classes(G, cap, seed), G.degree(), c);
}

Rational ratio_power_bound(const BigInt &A, const BigInt &B, unsigned c) {
  if (B == 0)
    throw std::domain_error("B must be nonzero");
  Rational ratio(A, B);
  ratio.canonicalize();
  Rational r = Rational(B);
  for (unsigned i = 0; i < c; ++i)
    r *= ratio;
  r.canonicalize();
  return r;
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t n,
                                          double z) {
  if (n == 0)
    return {0.0, 1.0};
  const double N = static_cast<double>(n);
  const double p = static_cast<double>(hits) / N;
  const double z2 = z * z;
  const double denom = 1 + z2 / N;
  const double centre = (p + z2 / (2 * N)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / N + z2 / (4 * N * N)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

McEstimate mc_base_probability(const PermGroup &G, unsigned c,
                               std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) {
  const std::size_t n = G.degree();
  if (n == 0)
    throw std::domain_error("empty domain");
  G.chain();
  auto bits = FixBitsets::build(G);
  constexpr std::uint64_t kBatch = 1024;
  const std::uint64_t batches = (samples + kBatch - 1) / kBatch;
  std::vector<std::uint64_t> hits(batches, 0);
  parallel_for(batches, threads, [&](std::size_t b) {
    Rng rng(mix_seed(seed, b));
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
    std::vector<Point> pts(c);
    std::vector<std::uint64_t> acc;
    const std::uint64_t todo = std::min(kBatch, samples - b * kBatch);
    std::uint64_t h = 0;
    for (std::uint64_t s = 0; s < todo; ++s) {
      for (auto &p : pts)
        p = pick(rng);
      if (G.is_trivial() ||
          (bits ? bits->is_base(pts.data(), c, acc) : is_base(G, pts)))
        ++h;
    }
    hits[b] = h;
  });
  McEstimate est;
  est.samples = samples;
  for (auto h : hits)
    est.hits += h;
  est.p_hat = samples ? static_cast<double>(est.hits) / samples : 0.0;
  std::tie(est.lo, est.hi) = wilson_interval(est.hits, samples);
  return est;
}

BigInt count_base_tuples(const PermGroup &G, unsigned c,
                         const SearchBudget &budget, std::uint64_t seed) {
  const StabChain &K = G.chain();
  const std::size_t n = G.degree();
  if (K.trivial())
    return pow_big(big(n), c);
  if (c <= 1) {
    std::atomic<std::uint64_t> counter{0};
    Searcher s{budget.max_nodes, &counter};
    Rng rng(seed);
    return s.count(K, c, rng);
  }
  // Split on the first point so the work items are independent.
  std::atomic<std::uint64_t> counter{0};
  auto reps = orbit_reps(K, false);
  std::vector<BigInt> part(reps.size());
  std::exception_ptr err;
  std::mutex err_m;
  parallel_for(reps.size(), budget.threads, [&](std::size_t i) {
    try {
      Searcher s{budget.max_nodes, &counter};
      Rng rng(mix_seed(seed, i));
      StabChain S = K.pointwise_stabiliser({reps[i].rep}, rng);
      part[i] = big(reps[i].size) * s.count(S, c - 1, rng);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_m);
      if (!err)
        err = std::current_exception();
    }
  });
  if (err)
    std::rethrow_exception(err);
  BigInt total = 0;
  for (const auto &p : part)
    total += p;
  return total;
}

Rational exact_base_probability(const PermGroup &G, unsigned c,
                                const SearchBudget &budget,
                                std::uint64_t seed) {
  Rational r(count_base_tuples(G, c, budget, seed),
             pow_big(big(G.degree()), c));
  r.canonicalize();
  return r;
}

namespace {

struct DoubleCosetTools {
  const PermGroup &H;
  std::vector<Perm> elems;
  BigInt h2;

  explicit DoubleCosetTools(const PermGroup &h, std::uint64_t cap)
      : H(h), elems(all_elements(h, cap)) {
    h2 = H.order() * H.order();
  }

  BigInt size_of(const Perm &x) const {
    BigInt inter = 0;
    const Perm xi = x.inverse();
    for (const auto &h : elems)
      if (H.contains(x * h * xi))
        inter += 1;
    return h2 / inter;
  }

  // y in HxH iff x^-1 h y in H for some h in H.
  bool same(const Perm &x, const Perm &y) const {
    const Perm xi = x.inverse();
    for (const auto &h : elems)
      if (H.contains(xi * h * y))
        return true;
    return false;
  }
};

} // namespace

DoubleCosetOutcome no_regular_orbit_certificate(const PermGroup &G,
                                                const PermGroup &H,
                                                std::uint64_t cap,
                                                std::uint64_t seed) {
  DoubleCosetOutcome out;
  DoubleCosetTools tools(H, cap);
  const BigInt gorder = G.order();
  const BigInt threshold = gorder - tools.h2;
  BigInt covered = 0;

  auto finish = [&]() {
    NoRegularOrbitCertificate cert;
    cert.reps = out.reps;
    cert.sizes = out.sizes;
    cert.slack = covered - threshold;
    out.certificate = std::move(cert);
  };

  if (tools.h2 > gorder) {
    // No double coset can have |H|^2 elements; the identity coset suffices.
    out.reps.push_back(Perm(G.degree()));
    out.sizes.push_back(H.order());
    covered = H.order();
    finish();
    return out;
  }

  Rng rng(seed);
  std::uint64_t misses = 0;
  const std::uint64_t max_misses = 64;
  while (misses < max_misses) {
    Perm x = G.random_element(rng);
    bool dup = false;
    for (const auto &r : out.reps)
      if (tools.same(r, x)) {
        dup = true;
        break;
      }
    if (dup) {
      ++misses;
      continue;
    }
    misses = 0;
    BigInt sz = tools.size_of(x);
    if (sz == tools.h2) {
      out.regular_rep = x;
      return out;
    }
    out.reps.push_back(x);
    out.sizes.push_back(sz);
    covered += sz;
    if (covered > threshold) {
      finish();
      return out;
    }
  }

  // Deterministic phase: walk every element of G.
  if (gorder > big(cap))
    return out;
  ElementIndex gidx(G.chain());
  std::vector<std::uint64_t> seen((gidx.size() + 63) / 64, 0);
  auto mark = [&](const Perm &x) {
    for (const auto &a : tools.elems) {
      Perm ax = a * x;
      for (const auto &b : tools.elems) {
        auto r = gidx.rank(ax * b);
        seen[r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
  };
  for (const auto &r : out.reps)
    mark(r);
  std::optional<Perm> regular;
  gidx.for_each([&](std::uint64_t r, const Perm &x) {
    if (regular || (seen[r / 64] >> (r % 64)) & 1)
      return;
    BigInt sz = tools.size_of(x);
    if (sz == tools.h2) {
      regular = x;
      return;
    }
    out.reps.push_back(x);
    out.sizes.push_back(sz);
    covered += sz;
    mark(x);
  });
  if (regular) {
    out.regular_rep = regular;
    return out;
  }
  out.complete_decomposition = true;
  if (covered != gorder)
    throw std::logic_error("double coset sizes do not sum to |G|");
  finish();
  return out;
}

bool verify_no_regular_orbit(const PermGroup &G, const PermGroup &H,
                             const NoRegularOrbitCertificate &cert) {
  if (cert.reps.size() != cert.sizes.size())
    return false;
  DoubleCosetTools tools(H, kDefaultElementCap);
  BigInt covered = 0;
  for (std::size_t i = 0; i < cert.reps.size(); ++i) {
    if (!G.contains(cert.reps[i]))
      return false;
    BigInt sz = tools.size_of(cert.reps[i]);
    if (sz != cert.sizes[i] || sz >= tools.h2)
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (tools.same(cert.reps[j], cert.reps[i]))
        return false;
    covered += sz;
  }
  return covered > G.order() - tools.h2;
}

} // namespace basecraft
