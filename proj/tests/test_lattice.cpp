#include "mobius3/error.hpp"
#include "mobius3/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mobius3;

namespace {

struct Small {
  Pgl3 ctx;
  SubgroupRec rec;
  IndexedGroup group;
  LatticeModel model;

  Small(int q, const std::vector<Mat3>& gens)
      : ctx(q), rec(closure(ctx, gens, 100000)), group(ctx, rec), model(enumerate(group)) {
    moebius(model);
  }
  // Closure needs ctx constructed first, so gens are given as entry lists.
  static std::vector<Mat3> lift(int q, const std::vector<std::vector<int>>& entries) {
    Pgl3 c(q);
    std::vector<Mat3> out;
    for (const auto& e : entries) out.push_back(c.from_entries(e));
    return out;
  }
};

std::vector<Mat3> v4_gens() { return Small::lift(2, {{1, 0, 1, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 0, 1}}); }

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("cyclic group of order two") {
    Small s(2, Small::lift(2, {{1, 0, 1, 0, 1, 0, 0, 0, 1}}));
    const LatticeModel& l = s.model;
    REQUIRE(l.classes.size() == 2);
    CHECK(l.classes[0].order == 1);
    CHECK(l.classes[0].mu == -1);
    CHECK(l.classes[1].mu == 1);
    CHECK(gen_probability(l, 1) == Rational(1, 2));
    CHECK(eulerian_phi(l, 1) == 1);
    CHECK(d_k(l, 1, 1) == 1);
  }

  TEST_CASE("Klein four group") {
    Small s(2, v4_gens());
    const LatticeModel& l = s.model;
    REQUIRE(s.group.size() == 4);
    CHECK(l.total_subgroups == 5);
    CHECK(l.classes.front().mu == 2);
    // phi_2(V4) = 4^2 - 3*2^2 + 2 = 6, |Aut| = 6.
    CHECK(eulerian_phi(l, 2) == 6);
    CHECK(d_k(l, 2, 6) == 1);
    CHECK(d_k(l, 3, 6) == 7);
    CHECK(l.classes.front().fingerprint.abelian);
    CHECK(l.classes.back().fingerprint.exponent == 2);
    CHECK(l.classes.back().fingerprint.abelian_invariants == std::vector<std::uint64_t>{2, 2});
  }

  TEST_CASE("PSL(3,2)") {
    const OwnedLattice own = build_lattice(2, GroupKind::PSL);
    const LatticeModel& l = own.model;
    CHECK(own.indexed->size() == 168);
    CHECK(l.classes.size() == 15);
    CHECK(l.total_subgroups == 179);
    std::uint64_t total = 0;
    for (const ConjClass& c : l.classes) {
      CHECK(c.size * c.normalizer_order == 168);
      total += c.size;
    }
    CHECK(total == l.total_subgroups);

    std::vector<std::uint64_t> max_sizes;
    for (std::size_t k : maximal_classes(l)) max_sizes.push_back(l.classes[k].size);
    std::sort(max_sizes.begin(), max_sizes.end());
    CHECK(max_sizes == std::vector<std::uint64_t>{7, 7, 8});

    // Sylow counts: 21, 28, 8.
    std::map<std::uint64_t, std::uint64_t> sylow;
    for (const ConjClass& c : l.classes)
      if (c.order == 8 || c.order == 3 || c.order == 7) sylow[c.order] += c.size;
    CHECK(sylow[8] == 21);
    CHECK(sylow[3] == 28);
    CHECK(sylow[7] == 8);
    for (auto [p, n] : std::map<std::uint64_t, std::uint64_t>{{2, 21}, {3, 28}, {7, 8}}) CHECK(n % p == 1);

    const auto a = a_coeffs(l);
    CHECK(a.at(1) == 1);
    CHECK(a.at(7) == -14);
    CHECK(a.at(8) == -8);
    CHECK(l.classes.front().mu == 0);

    CHECK(eulerian_phi(l, 2) == 19152);
    CHECK(gen_probability(l, 2) == Rational(19, 28));
    CHECK(d_k(l, 2, 336) == 57);
    for (unsigned k = 1; k <= 4; ++k) CHECK(BigInt(336) % boost::multiprecision::denominator(d_k(l, k, 336)) == 0);

    for (const BigInt& r : recursion_residuals(l)) CHECK(r == 0);
    const auto chain = chain_mu(l);
    for (std::size_t i = 0; i < l.classes.size(); ++i) CHECK(chain[i] == l.classes[i].mu);
    CHECK(intersection_of_maximals_failures(l).empty());
  }

  TEST_CASE("enumeration is deterministic") {
    const OwnedLattice a = build_lattice(2, GroupKind::PGL);
    const OwnedLattice b = build_lattice(2, GroupKind::PGL);
    REQUIRE(a.model.classes.size() == b.model.classes.size());
    for (std::size_t i = 0; i < a.model.classes.size(); ++i) {
      CHECK(a.model.classes[i].rep == b.model.classes[i].rep);
      CHECK(a.model.classes[i].mu == b.model.classes[i].mu);
    }
    CHECK(a.model.containment == b.model.containment);
  }

  TEST_CASE("PSL(3,3) recursion and Sylow congruences") {
    const OwnedLattice own = build_lattice(3, GroupKind::PSL);
    const LatticeModel& l = own.model;
    CHECK(own.indexed->size() == 5616);
    for (const BigInt& r : recursion_residuals(l)) CHECK(r == 0);
    std::map<std::uint64_t, std::uint64_t> count_by_order;
    for (const ConjClass& c : l.classes) count_by_order[c.order] += c.size;
    CHECK(count_by_order[27] % 3 == 1);
    CHECK(count_by_order[16] % 2 == 1);
    CHECK(count_by_order[13] % 13 == 1);
    CHECK(count_by_order[13] == 144);
    CHECK(intersection_of_maximals_failures(l).empty());
    CHECK(l.classes.back().mu == 1);
  }

  TEST_CASE("budget") {
    LatticeBudget tiny;
    tiny.max_group_order = 100;
    try {
      build_lattice(2, GroupKind::PSL, tiny);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
  }
}
