#pragma once

#include "basecraft/basesize.hpp"

namespace basecraft {

// Least k admitting a colouring of the points with k colours whose
// colour-preserving subgroup of P is trivial. Exact search, m <= 16.
unsigned distinguishing_number(const PermGroup &P,
                               std::uint64_t max_nodes = 50'000'000);

// Number of orbits of L on Gamma^d with trivial stabiliser.
BigInt regular_orbit_count(const PermGroup &L, unsigned d,
                           const SearchBudget &budget = {},
                           std::uint64_t seed = 1);

// ceil(ceil(log2 dP) / floor(log2 |Gamma|)) + b(L,K)
unsigned wreath_base_bound(unsigned b_LK, unsigned dP, std::size_t gamma);

// d-tuples (gamma, l_1, ..., l_{d-1}) with trivial pointwise stabiliser.
BigInt anchored_tuple_count(const PermGroup &L, Point gamma, unsigned d,
                            const SearchBudget &budget = {},
                            std::uint64_t seed = 1);

// Monte Carlo estimate of t / |Gamma|^(d-1), the probability that a uniform
// (d-1)-tuple is a base for L_gamma; strata are the first free coordinate.
McEstimate anchored_tuple_probability(const PermGroup &L, Point gamma,
                                      unsigned d, std::uint64_t samples,
                                      std::uint64_t seed, unsigned threads = 1);

struct ProductVerdict {
  unsigned dP = 0;
  BigInt reg;
  unsigned c = 0;
  // b(L wr P) <= c exactly when reg(L,c) >= d(P)
  bool at_most_c = false;
  unsigned bound = 0; // wreath bound, when b(L,K) is supplied
};

ProductVerdict product_verdict(const PermGroup &L, const PermGroup &P,
                               unsigned c, unsigned b_LK,
                               const SearchBudget &budget = {},
                               std::uint64_t seed = 1);

} // namespace basecraft
