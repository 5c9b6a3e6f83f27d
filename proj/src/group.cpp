#include "basecraft/group.hpp"

#include <numeric>
#include <stdexcept>

namespace basecraft {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (const auto &g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
  if (gens_.empty())
    gens_.push_back(Perm(degree_));
}

PermGroup PermGroup::from_chain(StabChain chain, std::vector<Perm> gens) {
  PermGroup g;
  g.degree_ = chain.degree();
  g.gens_ = gens.empty() ? chain.strong_generators() : std::move(gens);
  if (g.gens_.empty())
    g.gens_.push_back(Perm(g.degree_));
  g.lazy_->chain = std::make_shared<const StabChain>(std::move(chain));
  return g;
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n < 2)
    return trivial(n);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles({{0, 1}}, n),
                       Perm::from_cycles({cyc}, n)});
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n < 3)
    return trivial(n);
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles({{0, 1, i}}, n));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n < 2)
    return trivial(n);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles({cyc}, n)});
}

PermGroup PermGroup::trivial(std::size_t n) { return PermGroup(n, {}); }

void PermGroup::set_order_bound(BigInt b) { bound_ = std::move(b); }

const StabChain &PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(lazy_->m);
  if (!lazy_->chain) {
    Rng rng(seed_);
    ChainOptions opt;
    opt.known_order = bound_;
    lazy_->chain = std::make_shared<const StabChain>(
        StabChain::build(gens_, degree_, rng, opt));
  }
  return *lazy_->chain;
}

bool PermGroup::is_transitive() const {
  if (degree_ <= 1)
    return true;
  return chain().orbits().size() == 1;
}

PermGroup PermGroup::pointwise_stabiliser(const std::vector<Point> &pts) const {
  Rng rng(seed_ ^ 0x9e3779b97f4a7c15ULL);
  return from_chain(chain().pointwise_stabiliser(pts, rng));
}

PermGroup PermGroup::with_base(const std::vector<Point> &prefix) const {
  Rng rng(seed_ ^ 0x51ed27ULL);
  return from_chain(chain().rebase(prefix, rng), gens_);
}

PermGroup generate_greedy(std::size_t degree, const std::vector<Perm> &elems,
                          Rng &rng) {
  std::vector<Perm> gens;
  StabChain c(degree);
  for (const auto &e : elems) {
    if (e.is_identity() || c.contains(e))
      continue;
    gens.push_back(e);
    c = StabChain::build(gens, degree, rng);
  }
  return PermGroup::from_chain(std::move(c), std::move(gens));
}

} // namespace basecraft
