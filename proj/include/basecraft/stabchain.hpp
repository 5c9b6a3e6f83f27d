#pragma once

#include "basecraft/numeric.hpp"
#include "basecraft/perm.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace basecraft {

using Rng = std::mt19937_64;

struct ChainOptions {
  // Points forced to the front of the base, in order (may give trivial levels).
  std::vector<Point> base_prefix;
  // A value known to equal the group order. Reaching it certifies the chain,
  // so the deterministic Schreier-generator pass is skipped.
  std::optional<BigInt> known_order;
  // Consecutive trivial sifts that end the randomized phase.
  int patience = 24;
};

// Base and strong generating set with Schreier-vector transversals.
class StabChain {
public:
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gens; // indices into strong generators
    std::vector<Point> orbit;
    // tree[pt]: -2 not in orbit, -1 the base point, else index s of the
    // strong generator with parent^s = pt.
    std::vector<std::int32_t> tree;
  };

  StabChain() = default;
  explicit StabChain(std::size_t degree) : n_(degree) {}

  static StabChain build(const std::vector<Perm> &gens, std::size_t degree,
                         Rng &rng, const ChainOptions &opt = {});

  std::size_t degree() const { return n_; }
  std::size_t length() const { return levels_.size(); }
  const Level &level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  BigInt order() const;
  bool trivial() const;

  const std::vector<Perm> &strong_generators() const { return gens_; }
  // Strong generators fixing base[0..k).
  std::vector<Perm> generators_at(std::size_t k) const;

  // Residue after stripping, plus the level where sifting stopped
  // (length() when every level was passed).
  std::pair<Perm, std::size_t> sift(const Perm &g) const;
  bool contains(const Perm &g) const;

  // u with base_i^u = pt; pt must lie in the level's orbit.
  Perm transversal(std::size_t i, Point pt) const;
  // pt^(u^-1) for the transversal element u of level i reaching... applied
  // to the point x: returns x^(u_pt^-1) without building u.
  Point apply_inverse_transversal(std::size_t i, Point pt, Point x) const;

  // Uniformly distributed element.
  Perm random_element(Rng &rng) const;

  // Chain of the pointwise stabiliser of base[0..k).
  StabChain tail(std::size_t k) const;

  // Same group, base beginning with prefix (random sifting with known order).
  StabChain rebase(const std::vector<Point> &prefix, Rng &rng) const;

  // Chain of the pointwise stabiliser of the given points.
  StabChain pointwise_stabiliser(const std::vector<Point> &pts, Rng &rng) const;

  // Orbits of the group on {0..n-1}; each orbit sorted, orbits ordered by
  // their least point.
  std::vector<std::vector<Point>> orbits() const;

private:
  std::size_t n_ = 0;
  std::vector<Perm> gens_, inv_;
  std::vector<Level> levels_;

  void add_level(Point b);
  void add_generator(const Perm &g, std::size_t upto);
  void rebuild_orbit(std::size_t i);
  void sift_in(const Perm &g, bool &changed);
  bool verify(Rng &rng, const std::optional<BigInt> &known);
  Point fresh_base_point(const Perm &g) const;
};

// Product-replacement random elements ("rattle" variant with accumulator).
class ProductReplacement {
public:
  ProductReplacement(const std::vector<Perm> &gens, std::size_t degree,
                     Rng &rng);
  Perm next();

private:
  std::vector<Perm> state_;
  Perm acc_;
  Rng &rng_;
};

// Explicit transversals for enumeration and ranking of group elements.
// Ranks are mixed radix over orbit positions: rank = sum idx_i * M_i with
// M_i the product of the orbit lengths below level i.
class ElementIndex {
public:
  explicit ElementIndex(const StabChain &chain);

  std::uint64_t size() const { return size_; }
  std::size_t length() const { return base_.size(); }
  const std::vector<Point> &base() const { return base_; }

  // Rank of the unique element with the given base images.
  std::uint64_t rank_of_images(const Point *images) const;
  std::uint64_t rank(const Perm &g) const;
  Perm unrank(std::uint64_t r) const;

  // Visit every element once, in rank order: f(rank, element).
  template <class F> void for_each(F &&f) const {
    if (base_.empty()) {
      f(std::uint64_t{0}, Perm(n_));
      return;
    }
    std::vector<Perm> prefix(base_.size() + 1, Perm(n_));
    visit(base_.size(), 0, prefix, f);
  }

private:
  std::size_t n_;
  std::vector<Point> base_;
  std::vector<std::vector<Perm>> trans_, inv_;
  std::vector<std::vector<std::int32_t>> pos_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t size_ = 1;

  template <class F>
  void visit(std::size_t lvl, std::uint64_t rank, std::vector<Perm> &prefix,
             F &f) const {
    std::size_t i = lvl - 1;
    for (std::size_t k = 0; k < trans_[i].size(); ++k) {
      prefix[i] = prefix[i + 1] * trans_[i][k];
      std::uint64_t r = rank + k * radix_[i];
      if (i == 0)
        f(r, prefix[0]);
      else
        visit(i, r, prefix, f);
    }
  }
};

} // namespace basecraft
