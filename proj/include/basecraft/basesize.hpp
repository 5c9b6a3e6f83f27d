#pragma once

#include "basecraft/classes.hpp"
#include "basecraft/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace basecraft {

struct BaseCertificate {
  std::vector<Point> points;
  bool verified = false;
};

enum class LowerKind { LogBound, NoRegularOrbit, Exhaustive };
std::string lower_kind_name(LowerKind k);

struct BaseSizeResult {
  unsigned lo = 0, hi = 0;
  LowerKind lo_kind = LowerKind::LogBound;
  BaseCertificate hi_cert;
  bool exact = false;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
  std::uint64_t random_trials = 10'000;
  unsigned threads = 1;
};

bool is_base(const PermGroup &G, const std::vector<Point> &points);

// Least k with |Omega|^k >= |G| (exact integer comparison).
unsigned log_lower_bound(const PermGroup &G);

std::optional<BaseCertificate> random_base_search(const PermGroup &G,
                                                  unsigned c,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed);

// Exact base size by exhausting orbit representatives of point stabilisers.
BaseSizeResult exact_base_size(const PermGroup &G, const SearchBudget &budget = {},
                               std::uint64_t seed = 1);

// Does some r-tuple have trivial pointwise stabiliser? Fills witness if so.
// Throws BudgetExceeded when the node budget runs out.
bool exists_base_of_size(const PermGroup &G, unsigned r,
                         std::vector<Point> *witness,
                         const SearchBudget &budget = {},
                         std::uint64_t seed = 1,
                         std::uint64_t *nodes = nullptr);

struct QRow {
  Perm rep;
  unsigned prime = 0;
  BigInt class_size;
  std::size_t fixed_points = 0;
  Rational fpr;
  Rational contribution;
};

struct QReport {
  unsigned c = 0;
  std::vector<QRow> rows;
  Rational total;
  bool exact = false;
  std::size_t degree = 0;
  // Q < 1 certifies b <= c, but only from an exact report.
  bool certifies() const { return exact && total < 1; }
};

QReport q_bound(const PermGroup &G, unsigned c,
                std::uint64_t cap = kDefaultElementCap, std::uint64_t seed = 1);
QReport q_bound(const ClassTable &classes, std::size_t degree, unsigned c);

// B (A/B)^c
Rational ratio_power_bound(const BigInt &A, const BigInt &B, unsigned c);

struct McEstimate {
  std::uint64_t samples = 0, hits = 0;
  double p_hat = 0, lo = 0, hi = 0; // Wilson 95% interval
};

McEstimate mc_base_probability(const PermGroup &G, unsigned c,
                               std::uint64_t samples, std::uint64_t seed,
                               unsigned threads = 1);

std::pair<double, double> wilson_interval(std::uint64_t hits,
                                          std::uint64_t n, double z = 1.96);

// Number of c-tuples of points forming a base, via orbit decomposition.
BigInt count_base_tuples(const PermGroup &G, unsigned c,
                         const SearchBudget &budget = {},
                         std::uint64_t seed = 1);
Rational exact_base_probability(const PermGroup &G, unsigned c,
                                const SearchBudget &budget = {},
                                std::uint64_t seed = 1);

struct NoRegularOrbitCertificate {
  std::vector<Perm> reps;
  std::vector<BigInt> sizes;
  BigInt slack; // sum |HxH| - (|G| - |H|^2)
};

struct DoubleCosetOutcome {
  std::optional<NoRegularOrbitCertificate> certificate;
  // set when a double coset of size |H|^2 (a regular suborbit) was found
  std::optional<Perm> regular_rep;
  bool complete_decomposition = false;
  std::vector<Perm> reps;
  std::vector<BigInt> sizes;
};

DoubleCosetOutcome no_regular_orbit_certificate(
    const PermGroup &G, const PermGroup &H,
    std::uint64_t cap = kDefaultElementCap, std::uint64_t seed = 1);

// Re-verifies a certificate from its data alone.
bool verify_no_regular_orbit(const PermGroup &G, const PermGroup &H,
                             const NoRegularOrbitCertificate &cert);

} // namespace basecraft
