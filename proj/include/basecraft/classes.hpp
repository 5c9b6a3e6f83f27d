#pragma once

#include "basecraft/group.hpp"

#include <memory>

namespace basecraft {

struct ClassData {
  Perm rep;
  unsigned prime = 0;
  BigInt class_size;
  std::size_t fixed_points = 0;
  // Members of the class fixing point 0, i.e. |x^G cap G_0|. Exact mode only.
  BigInt fixing_zero;
  bool complete = true;
};

struct ClassTable {
  std::vector<ClassData> classes;
  bool exact = false;
  std::shared_ptr<const ElementIndex> index;
  // Exact mode: class id per element rank, -1 when not of prime order.
  std::vector<std::int32_t> class_of_rank;

  // Class id of g (exact mode), -1 when g does not have prime order.
  int class_of(const Perm &g) const;
};

constexpr std::uint64_t kDefaultElementCap = 10'000'000;

// Exact when |G| <= cap: every element is enumerated and prime-order elements
// are merged into classes by conjugation under the generators. Otherwise
// classes are found from random elements; a class is complete only when its
// conjugation orbit could be enumerated within the cap.
ClassTable prime_order_classes(const PermGroup &g,
                               std::uint64_t cap = kDefaultElementCap,
                               std::uint64_t seed = 1);

// |H cap H^x| by filtering the elements of H.
BigInt intersection_with_conjugate(const PermGroup &h, const Perm &x,
                                   std::uint64_t cap = kDefaultElementCap);

// Enumerate all elements of g (|g| <= cap) into a vector.
std::vector<Perm> all_elements(const PermGroup &g,
                               std::uint64_t cap = kDefaultElementCap);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace basecraft
