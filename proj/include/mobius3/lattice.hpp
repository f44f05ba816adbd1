#pragma once

// Subgroup lattice of a small group up to conjugacy, with containment
// counts, Möbius values and Hall's generation counts.

#include "mobius3/bigint.hpp"
#include "mobius3/indexed_group.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace mobius3 {

struct LatticeBudget {
  std::uint64_t max_group_order = 65000;
  std::uint64_t max_subgroups = 20'000'000;
};

struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  bool abelian = false;
  std::vector<std::uint64_t> abelian_invariants;  // empty unless abelian
  int derived_length = -1;                         // -1 when not solvable
  std::uint64_t center_order = 0;
  std::map<std::uint32_t, std::uint64_t> order_histogram;
};

struct ConjClass {
  std::vector<std::uint32_t> rep;  // sorted element indices
  std::vector<std::uint32_t> rep_gens;
  std::size_t rep_id = 0;  // index of rep among all subgroups
  std::uint64_t order = 0;
  std::uint64_t size = 0;
  std::uint64_t normalizer_order = 0;
  BigInt mu = 0;
  Fingerprint fingerprint;
};

struct LatticeModel {
  const IndexedGroup* group = nullptr;
  std::vector<ConjClass> classes;  // ascending (order, least conjugate); last is G
  /// containment[h][k]: conjugates of class k containing the rep of class h.
  std::vector<std::vector<std::uint64_t>> containment;
  std::uint64_t total_subgroups = 0;

  // Every subgroup, flattened: subgroup i occupies data[offset[i], offset[i+1]).
  std::vector<std::uint32_t> sub_data;
  std::vector<std::size_t> sub_offset;
  std::vector<std::uint32_t> sub_class;

  std::span<const std::uint32_t> subgroup(std::size_t i) const {
    return {sub_data.data() + sub_offset[i], sub_offset[i + 1] - sub_offset[i]};
  }
  std::size_t top() const { return classes.size() - 1; }
};

/// All subgroups of g up to conjugacy; mu is left at zero.
LatticeModel enumerate(const IndexedGroup& g, const LatticeBudget& budget = {});

/// Fills mu by the downward recursion over containment counts.
void moebius(LatticeModel& l);

/// mu(H) + sum over strictly larger classes n(H,K) mu(K), per class.
std::vector<BigInt> recursion_residuals(const LatticeModel& l);

/// Möbius values from alternating counts of chains H = H0 < ... < Hk = G
/// over the full subgroup set. Needs |G| <= 1000.
std::vector<BigInt> chain_mu(const LatticeModel& l);

/// Classes with mu != 0 whose representative is not the intersection of
/// the maximal subgroups containing it. Empty when the criterion holds.
std::vector<std::size_t> intersection_of_maximals_failures(const LatticeModel& l);

std::vector<std::size_t> maximal_classes(const LatticeModel& l);

BigInt eulerian_phi(const LatticeModel& l, unsigned n);
Rational gen_probability(const LatticeModel& l, unsigned n);
/// index -> sum of mu over subgroups of that index.
std::map<std::uint64_t, BigInt> a_coeffs(const LatticeModel& l);
Rational d_k(const LatticeModel& l, unsigned k, const BigInt& aut_order);

/// A lattice together with the group objects it points into.
struct OwnedLattice {
  std::unique_ptr<Pgl3> ctx;
  SubgroupRec group;
  std::unique_ptr<IndexedGroup> indexed;
  LatticeModel model;
};

/// Materializes PGL(3,q) or PSL(3,q), enumerates and fills mu.
/// Throws BudgetExceeded when the group order exceeds the budget.
OwnedLattice build_lattice(int q, GroupKind kind, const LatticeBudget& budget = {});

Fingerprint fingerprint(const IndexedGroup& g, const std::vector<std::uint32_t>& elems,
                        const std::vector<std::uint32_t>& gens);

}  // namespace mobius3
