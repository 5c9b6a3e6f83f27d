#pragma once

#include "basecraft/stabchain.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace basecraft {

// Generators plus a lazily built, verified stabiliser chain.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> gens);
  // gens defaults to the chain's strong generators.
  static PermGroup from_chain(StabChain chain, std::vector<Perm> gens = {});

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);
  static PermGroup trivial(std::size_t n);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }

  // An upper bound on the order, e.g. the order of a group this one is a
  // homomorphic image of. Reaching it during construction certifies the chain.
  void set_order_bound(BigInt b);
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  const StabChain &chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Perm &g) const { return chain().contains(g); }
  bool is_trivial() const { return chain().trivial(); }
  bool is_transitive() const;
  std::vector<std::vector<Point>> orbits() const { return chain().orbits(); }

  PermGroup pointwise_stabiliser(const std::vector<Point> &pts) const;
  // Rebuild the chain so that its base starts with prefix.
  PermGroup with_base(const std::vector<Point> &prefix) const;
  // Uniform random element drawn through the chain.
  Perm random_element(Rng &rng) const { return chain().random_element(rng); }

private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::optional<BigInt> bound_;
  std::uint64_t seed_ = 0x5eedULL;
  struct Lazy {
    std::mutex m;
    std::shared_ptr<const StabChain> chain;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

// Smallest subgroup containing gens, grown greedily: a candidate is added as a
// generator only when it is not already a member.
PermGroup generate_greedy(std::size_t degree, const std::vector<Perm> &elems,
                          Rng &rng);

} // namespace basecraft
