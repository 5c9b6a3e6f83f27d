#pragma once

#include "basecraft/classes.hpp"
#include "basecraft/classical.hpp"
#include "basecraft/group.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace basecraft {

// Points of an action together with canonical labels.
struct LabelledDomain {
  std::vector<std::vector<std::uint32_t>> labels;
  std::unordered_map<std::vector<std::uint32_t>, Point, PointVecHash> index;

  std::size_t size() const { return labels.size(); }
  // Adds the label if new; returns its point.
  Point intern(const std::vector<std::uint32_t> &label);
  // -1 when absent
  long find(const std::vector<std::uint32_t> &label) const;
  // one label per line, entries separated by spaces
  std::string dump() const;
};

struct Action {
  PermGroup group;
  LabelledDomain domain;
};

enum class SubspaceConstraint { All, TotallyIsotropic, Nondegenerate };

struct ActionBudget {
  std::size_t max_degree = 1'000'000;
};

// Induced action of semilinear maps on the orbit of a starting m-subspace of
// GF(q)^n. For the classical groups used here the orbit is the full set of
// qualifying subspaces; degree audits in the tests confirm it. Labels are the
// flattened reduced row echelon bases.
Action subspace_action(const std::vector<SemilinearMap> &gens, const Field &F,
                       unsigned n, unsigned m, SubspaceConstraint constraint,
                       const ClassicalForm *form = nullptr,
                       const ActionBudget &budget = {});

// Action on all nonzero vectors (always faithful), mainly for order checks.
Action vector_action(const std::vector<SemilinearMap> &gens, const Field &F,
                     unsigned n, const ActionBudget &budget = {});

std::vector<SemilinearMap> linear(const std::vector<Matrix> &ms);

// Canonical label of a subspace spanned by rows (must be nonempty).
std::vector<std::uint32_t> subspace_label(std::vector<Vec> rows,
                                          const Field &F);
std::vector<Vec> subspace_basis(const std::vector<std::uint32_t> &label,
                                unsigned n);

struct CosetTable {
  std::vector<Perm> reps; // reps[i] lies in the i-th coset H g
  std::size_t degree = 0;
  BigInt kernel_order;
};

struct CosetAction {
  Action action;
  CosetTable table;
};

// Action of G on the right cosets of H by right multiplication. The coset
// containing g is labelled by the least base-image tuple among its elements.
CosetAction coset_action(const PermGroup &G, const PermGroup &H,
                         const ActionBudget &budget = {});

// Induced action on k-subsets of the orbit of the given starting subset
// (or of all k-subsets when start is empty and the action is k-homogeneous).
Action subset_action(const PermGroup &G, unsigned k,
                     std::vector<Point> start = {},
                     const ActionBudget &budget = {});
// Unordered pairs of points.
Action pair_action(const PermGroup &G, const ActionBudget &budget = {});

// The restriction of G to an orbit containing the given point.
Action orbit_action(const PermGroup &G, Point p);

// Product action of L wr P on Gamma^m, point sum x_i |Gamma|^i.
PermGroup product_action(const PermGroup &L, const PermGroup &P,
                         std::size_t max_degree = 10'000'000);

// Elements of G satisfying pred, as a subgroup (pred must define one).
PermGroup subgroup_filter(const PermGroup &G,
                          const std::function<bool(const Perm &)> &pred,
                          std::uint64_t cap = kDefaultElementCap);

// Setwise stabiliser by element filter.
PermGroup set_stabiliser(const PermGroup &G, const std::vector<Point> &set,
                         std::uint64_t cap = kDefaultElementCap);

// N_G(S) by element filter (S given by generators, membership via its chain).
PermGroup normaliser(const PermGroup &G, const PermGroup &S,
                     std::uint64_t cap = kDefaultElementCap);

// Image of an element of the ambient degree under an action built from the
// same generators: maps a word's image. Used to move subgroups along.
Perm induced_on_subspaces(const SemilinearMap &g, const LabelledDomain &dom,
                          const Field &F, unsigned n);

// ---- groups with socle L2(q) on the projective line ----

struct L2Group {
  unsigned q = 7;
  bool delta = false;     // adjoin the diagonal automorphism diag(mu,1)
  unsigned phi_power = 0; // adjoin phi^k (0: none)

  const Field &field() const { return Field::of_order(q); }
  // PGL2(q) <= G
  bool contains_pgl() const;
  // [G : L2(q)]
  unsigned index_over_socle() const;
  std::string name() const;
  BigInt order() const;
  std::vector<SemilinearMap> generators() const;
};

enum class L2Subgroup { P1, SplitNormaliser, NonsplitNormaliser, Octahedral, Subfield };

struct L2Setting {
  Action line; // G on the q+1 points of the projective line
  L2Group spec;
  // point of <e1>, <e2>, <e1+e2>, <e1+mu e2>
  Point e1, e2, e1pe2, e1pmue2;
};

L2Setting l2_on_projective_line(const L2Group &g);

// The subgroup H of G (as permutations of the projective line). Octahedral is
// the normaliser of a Klein four subgroup of L2(q) (q odd); Subfield is the
// normaliser of L2(3) inside L2(3^k).
PermGroup l2_subgroup(const L2Setting &s, L2Subgroup type);

// psl2_subgroup in the projective-line action, ambient PSL or PGL.
PermGroup psl2_subgroup(unsigned q, L2Subgroup type, bool pgl);

std::string l2_subgroup_name(L2Subgroup t);

} // namespace basecraft
