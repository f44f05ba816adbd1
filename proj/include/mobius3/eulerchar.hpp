#pragma once

// Euler characteristic of the order complex of the poset L_r of nontrivial
// r-subgroups of PGL(3,q). Values follow the convention
// chi = -sum_{x in L_r} mu(0, x) = sum_k (-1)^k f_k, so the empty poset
// gives 0.

#include "mobius3/bigint.hpp"
#include "mobius3/indexed_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mobius3 {

enum class RCase {
  NotDividing,
  DividesQ,
  DividesQ2Q1_not3,
  DividesQplus1_not2,
  DividesQminus1_not23,
  Two_Qodd,
  Three_divQminus1,
};

std::string to_string(RCase c);

/// Throws InvalidInput unless q is a prime power <= 128 and r is prime.
RCase r_case(int q, int r);
BigInt chi_closed(int q, int r);

struct ElemAbelianRecord {
  int rank = 0;
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint32_t>> subgroups;  // sorted element indices, sorted
};

inline constexpr std::uint64_t kElemAbelianBudget = 2'000'000;

/// Every elementary abelian r-subgroup of g, by rank (rank >= 1).
std::vector<ElemAbelianRecord> elem_abelian(const IndexedGroup& g, int r,
                                            std::uint64_t budget = kElemAbelianBudget);

/// -sum over elementary abelian subgroups of (-1)^s r^(s choose 2).
BigInt chi_bruteforce(const IndexedGroup& g, int r);

/// All nontrivial r-subgroups of g, each as sorted element indices,
/// ascending by order. Throws BudgetExceeded past max_count.
std::vector<std::vector<std::uint32_t>> r_subgroups(const IndexedGroup& g, int r, std::size_t max_count);

/// Alternating count of chains in the full poset of nontrivial r-subgroups.
BigInt chi_chaincount(const IndexedGroup& g, int r, std::size_t max_poset = 10'000);

/// Number of k-dimensional subspaces of GF(r)^n.
BigInt gaussian_binomial(int n, int k, int r);

struct ElationCensus {
  int q = 0;
  int r = 0;
  int d = 0;
  // Indexed by rank i (entry 0 unused).
  std::vector<BigInt> n_ac, n_a, n_c;
  std::vector<BigInt> n_ac_formula, n_a_formula;
  BigInt chi;  // from the counted subgroups
  bool ok = false;
};

/// Elementary abelian subgroups of elation groups, counted directly from
/// matrices and compared against the Gaussian-coefficient formulas. q <= 8.
ElationCensus elation_census(int q);

/// Materialized PGL(3,q) for the brute-force oracles.
SubgroupRec pgl_full(const Pgl3& ctx);

}  // namespace mobius3
