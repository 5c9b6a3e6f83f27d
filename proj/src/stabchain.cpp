#include "basecraft/stabchain.hpp"
#include "basecraft/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace basecraft {

namespace {

// Explicit transversals are cached during verification only when they fit.
constexpr std::size_t kTransversalCacheWords = std::size_t{1} << 24;

} // namespace

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto &l : levels_)
    b.push_back(l.base);
  return b;
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto &l : levels_)
    r *= static_cast<unsigned long>(l.orbit.size());
  return r;
}

bool StabChain::trivial() const {
  for (const auto &l : levels_)
    if (l.orbit.size() > 1)
      return false;
  return true;
}

std::vector<Perm> StabChain::generators_at(std::size_t k) const {
  std::vector<Perm> out;
  if (k >= levels_.size())
    return out;
  for (auto s : levels_[k].gens)
    out.push_back(gens_[s]);
  return out;
}

void StabChain::add_level(Point b) {
  Level l;
  l.base = b;
  l.tree.assign(n_, -2);
  l.tree[b] = -1;
  l.orbit.push_back(b);
  levels_.push_back(std::move(l));
}

void StabChain::rebuild_orbit(std::size_t i) {
  Level &l = levels_[i];
  std::fill(l.tree.begin(), l.tree.end(), -2);
  l.orbit.clear();
  l.orbit.push_back(l.base);
  l.tree[l.base] = -1;
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    Point p = l.orbit[k];
    for (auto s : l.gens) {
      Point q = gens_[s][p];
      if (l.tree[q] == -2) {
        l.tree[q] = static_cast<std::int32_t>(s);
        l.orbit.push_back(q);
      }
    }
  }
}

void StabChain::add_generator(const Perm &g, std::size_t upto) {
  auto idx = static_cast<std::uint32_t>(gens_.size());
  gens_.push_back(g);
  inv_.push_back(g.inverse());
  for (std::size_t i = 0; i <= upto && i < levels_.size(); ++i) {
    levels_[i].gens.push_back(idx);
    rebuild_orbit(i);
  }
}

Point StabChain::fresh_base_point(const Perm &g) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (g[i] != i)
      return static_cast<Point>(i);
  return 0;
}

namespace {

// g <- g * u_pt^-1, walking the Schreier tree of level l.
inline void strip(const StabChain::Level &l, const std::vector<Perm> &inv,
                  Point pt, std::vector<Point> &g, std::vector<Point> &tmp) {
  const auto &k = kernels::active();
  while (l.tree[pt] != -1) {
    const Perm &s = inv[l.tree[pt]];
    k.compose(g.data(), s.data(), tmp.data(), g.size());
    g.swap(tmp);
    pt = s[pt];
  }
}

} // namespace

std::pair<Perm, std::size_t> StabChain::sift(const Perm &g) const {
  std::vector<Point> cur = g.images(), tmp(n_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level &l = levels_[i];
    Point pt = cur[l.base];
    if (l.tree[pt] == -2)
      return {Perm::unchecked(std::move(cur)), i};
    strip(l, inv_, pt, cur, tmp);
  }
  return {Perm::unchecked(std::move(cur)), levels_.size()};
}

bool StabChain::contains(const Perm &g) const {
  if (g.degree() != n_)
    throw std::invalid_argument("degree mismatch");
  auto [res, lvl] = sift(g);
  return lvl == levels_.size() && res.is_identity();
}

Perm StabChain::transversal(std::size_t i, Point pt) const {
  const Level &l = levels_[i];
  if (l.tree[pt] == -2)
    throw std::invalid_argument("point not in fundamental orbit");
  std::vector<Point> u(n_), tmp(n_);
  std::iota(u.begin(), u.end(), Point{0});
  const auto &k = kernels::active();
  // u = s_1 ... s_r, recovered from the leaf: prepend each generator.
  while (l.tree[pt] != -1) {
    auto s = l.tree[pt];
    k.compose(gens_[s].data(), u.data(), tmp.data(), n_);
    u.swap(tmp);
    pt = inv_[s][pt];
  }
  return Perm::unchecked(std::move(u));
}

Point StabChain::apply_inverse_transversal(std::size_t i, Point pt,
                                           Point x) const {
  const Level &l = levels_[i];
  while (l.tree[pt] != -1) {
    const Perm &s = inv_[l.tree[pt]];
    x = s[x];
    pt = s[pt];
  }
  return x;
}

Perm StabChain::random_element(Rng &rng) const {
  Perm g(n_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto &orb = levels_[i].orbit;
    if (orb.size() == 1)
      continue;
    std::uniform_int_distribution<std::size_t> d(0, orb.size() - 1);
    g = g * transversal(i, orb[d(rng)]);
  }
  return g;
}

void StabChain::sift_in(const Perm &g, bool &changed) {
  auto [res, j] = sift(g);
  changed = false;
  if (res.is_identity())
    return;
  if (j == levels_.size())
    add_level(fresh_base_point(res));
  add_generator(res, j);
  changed = true;
}

bool StabChain::verify(Rng &, const std::optional<BigInt> &bound) {
  const auto &k = kernels::active();
  std::vector<Point> h(n_), tmp(n_);
  std::size_t i = levels_.size();
  while (i-- > 0) {
  restart:
    if (bound && order() == *bound)
      return true;
    const Level &l = levels_[i];
    bool cache = l.orbit.size() * n_ <= kTransversalCacheWords;
    std::vector<Perm> u;
    std::vector<std::int32_t> at;
    if (cache) {
      at.assign(n_, -1);
      u.reserve(l.orbit.size());
      for (std::size_t t = 0; t < l.orbit.size(); ++t) {
        at[l.orbit[t]] = static_cast<std::int32_t>(t);
        u.push_back(transversal(i, l.orbit[t]));
      }
    }
    for (std::size_t t = 0; t < l.orbit.size(); ++t) {
      Point p = l.orbit[t];
      Perm up = cache ? u[t] : transversal(i, p);
      for (auto s : std::vector<std::uint32_t>(l.gens)) {
        Point q = gens_[s][p];
        // h = u_p s u_q^-1
        k.compose(up.data(), gens_[s].data(), h.data(), n_);
        if (cache) {
          const Perm &uq = u[at[q]];
          if (k.equal(h.data(), uq.data(), n_))
            continue;
          Perm uqi = uq.inverse();
          k.compose(h.data(), uqi.data(), tmp.data(), n_);
          h.swap(tmp);
        } else {
          strip(l, inv_, q, h, tmp);
        }
        // sift below level i
        std::size_t j = i + 1;
        for (; j < levels_.size(); ++j) {
          const Level &lj = levels_[j];
          Point pt = h[lj.base];
          if (lj.tree[pt] == -2)
            break;
          strip(lj, inv_, pt, h, tmp);
        }
        if (k.is_identity(h.data(), n_))
          continue;
        Perm res = Perm::unchecked(h);
        if (j == levels_.size())
          add_level(fresh_base_point(res));
        add_generator(res, j);
        if (bound && order() > *bound)
          throw std::logic_error("group order exceeds the supplied bound");
        i = j;
        goto restart;
      }
    }
  }
  return true;
}

StabChain StabChain::build(const std::vector<Perm> &gens, std::size_t degree,
                           Rng &rng, const ChainOptions &opt) {
  StabChain c(degree);
  for (Point b : opt.base_prefix) {
    if (b >= degree)
      throw std::invalid_argument("base point outside degree");
    c.add_level(b);
  }
  std::vector<Perm> nontrivial;
  for (const auto &g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity())
      nontrivial.push_back(g);
  }
  if (nontrivial.empty())
    return c;
  const auto &bound = opt.known_order;
  auto done = [&] { return bound && c.order() == *bound; };
  bool changed = false;
  for (const auto &g : nontrivial) {
    c.sift_in(g, changed);
    if (done())
      return c;
  }
  ProductReplacement pr(nontrivial, degree, rng);
  int quiet = 0;
  while (quiet < opt.patience) {
    c.sift_in(pr.next(), changed);
    if (done())
      return c;
    if (bound && c.order() > *bound)
      throw std::logic_error("group order exceeds the supplied bound");
    quiet = changed ? 0 : quiet + 1;
  }
  c.verify(rng, bound);
  return c;
}

StabChain StabChain::tail(std::size_t k) const {
  StabChain c(n_);
  if (k >= levels_.size())
    return c;
  std::vector<std::int32_t> remap(gens_.size(), -1);
  for (auto s : levels_[k].gens) {
    remap[s] = static_cast<std::int32_t>(c.gens_.size());
    c.gens_.push_back(gens_[s]);
    c.inv_.push_back(inv_[s]);
  }
  for (std::size_t i = k; i < levels_.size(); ++i) {
    Level l = levels_[i];
    for (auto &s : l.gens)
      s = static_cast<std::uint32_t>(remap[s]);
    for (auto &t : l.tree)
      if (t >= 0)
        t = remap[t];
    c.levels_.push_back(std::move(l));
  }
  return c;
}

StabChain StabChain::rebase(const std::vector<Point> &prefix, Rng &rng) const {
  StabChain c(n_);
  for (Point b : prefix)
    c.add_level(b);
  BigInt target = order();
  bool changed = false;
  while (c.order() != target)
    c.sift_in(random_element(rng), changed);
  return c;
}

StabChain StabChain::pointwise_stabiliser(const std::vector<Point> &pts,
                                          Rng &rng) const {
  if (pts.empty())
    return *this;
  bool prefix = pts.size() <= levels_.size();
  for (std::size_t i = 0; prefix && i < pts.size(); ++i)
    prefix = levels_[i].base == pts[i];
  if (prefix)
    return tail(pts.size());
  return rebase(pts, rng).tail(pts.size());
}

std::vector<std::vector<Point>> StabChain::orbits() const {
  std::vector<Point> parent(n_);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &g : gens_)
    for (std::size_t i = 0; i < n_; ++i) {
      Point a = find(static_cast<Point>(i)), b = find(g[i]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Point>> out;
  std::vector<std::int32_t> slot(n_, -1);
  for (std::size_t i = 0; i < n_; ++i) {
    Point r = find(static_cast<Point>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int32_t>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(static_cast<Point>(i));
  }
  return out;
}

ProductReplacement::ProductReplacement(const std::vector<Perm> &gens,
                                       std::size_t degree, Rng &rng)
    : acc_(degree), rng_(rng) {
  if (gens.empty()) {
    state_.assign(2, Perm(degree));
  } else {
    while (state_.size() < std::max<std::size_t>(10, gens.size()))
      for (const auto &g : gens)
        state_.push_back(g);
  }
  for (int i = 0; i < 60; ++i)
    next();
}

Perm ProductReplacement::next() {
  std::uniform_int_distribution<std::size_t> d(0, state_.size() - 1);
  std::size_t s = d(rng_), t = d(rng_);
  while (t == s && state_.size() > 1)
    t = d(rng_);
  if (rng_() & 1)
    state_[s] = state_[s] * state_[t];
  else
    state_[s] = state_[t] * state_[s];
  acc_ = acc_ * state_[s];
  return acc_;
}

ElementIndex::ElementIndex(const StabChain &chain) : n_(chain.degree()) {
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const auto &l = chain.level(i);
    if (l.orbit.size() == 1)
      continue;
    base_.push_back(l.base);
    radix_.push_back(size_);
    std::vector<Perm> t, ti;
    std::vector<std::int32_t> pos(n_, -1);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      pos[l.orbit[k]] = static_cast<std::int32_t>(k);
      t.push_back(chain.transversal(i, l.orbit[k]));
      ti.push_back(t.back().inverse());
    }
    if (size_ > UINT64_MAX / l.orbit.size())
      throw std::overflow_error("group too large to index");
    size_ *= l.orbit.size();
    trans_.push_back(std::move(t));
    inv_.push_back(std::move(ti));
    pos_.push_back(std::move(pos));
  }
}

std::uint64_t ElementIndex::rank_of_images(const Point *images) const {
  const std::size_t L = base_.size();
  Point g[64];
  std::vector<Point> big;
  Point *cur = g;
  if (L > 64) {
    big.assign(images, images + L);
    cur = big.data();
  } else {
    std::copy(images, images + L, g);
  }
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < L; ++i) {
    auto k = pos_[i][cur[i]];
    if (k < 0)
      throw std::invalid_argument("images do not belong to the group");
    r += static_cast<std::uint64_t>(k) * radix_[i];
    const Perm &ui = inv_[i][k];
    for (std::size_t j = i + 1; j < L; ++j)
      cur[j] = ui[cur[j]];
  }
  return r;
}

std::uint64_t ElementIndex::rank(const Perm &g) const {
  std::vector<Point> im(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i)
    im[i] = g[base_[i]];
  return rank_of_images(im.data());
}

Perm ElementIndex::unrank(std::uint64_t r) const {
  Perm g(n_);
  std::vector<std::size_t> digit(base_.size());
  for (std::size_t i = base_.size(); i-- > 0;) {
    digit[i] = r / radix_[i];
    r %= radix_[i];
  }
  for (std::size_t i = base_.size(); i-- > 0;)
    g = g * trans_[i][digit[i]];
  return g;
}

} // namespace basecraft
