#include "mobius3/error.hpp"
#include "mobius3/eulerchar.hpp"

#include <doctest.h>

#include <set>

using namespace mobius3;

namespace {

// Subspaces of GF(r)^n of dimension k, counted by brute force over bitmask
// vectors for r = 2 and by spanning sets otherwise.
long long count_subspaces(int n, int k, int r) {
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= r;
  std::set<std::set<long long>> seen;
  auto add = [&](long long a, long long b) {
    long long s = 0, m = 1;
    for (int i = 0; i < n; ++i, a /= r, b /= r, m *= r) s += ((a % r + b % r) % r) * m;
    return s;
  };
  auto scale = [&](long long a, int c) {
    long long s = 0, m = 1;
    for (int i = 0; i < n; ++i, a /= r, m *= r) s += ((a % r) * c % r) * m;
    return s;
  };
  std::function<void(std::set<long long>, int, long long)> grow = [&](std::set<long long> span, int dim,
                                                                       long long from) {
    if (dim == k) {
      seen.insert(span);
      return;
    }
    for (long long v = from; v < total; ++v) {
      if (span.count(v)) continue;
      std::set<long long> next = span;
      for (long long s : span)
        for (int c = 1; c < r; ++c) next.insert(add(s, scale(v, c)));
      grow(next, dim + 1, v + 1);
    }
  };
  grow({0}, 0, 1);
  return static_cast<long long>(seen.size());
}

}  // namespace

TEST_SUITE("eulerchar") {
  TEST_CASE("case dispatch") {
    CHECK(r_case(2, 7) == RCase::DividesQ2Q1_not3);
    CHECK(r_case(2, 2) == RCase::DividesQ);
    CHECK(r_case(2, 3) == RCase::DividesQplus1_not2);
    CHECK(r_case(3, 2) == RCase::Two_Qodd);
    CHECK(r_case(4, 3) == RCase::Three_divQminus1);
    CHECK(r_case(11, 5) == RCase::DividesQminus1_not23);
    CHECK(r_case(7, 11) == RCase::NotDividing);
    CHECK_THROWS_AS(r_case(6, 2), Error);
    CHECK_THROWS_AS(r_case(4, 9), Error);
  }

  TEST_CASE("closed form spot values") {
    CHECK(chi_closed(2, 7) == 8);     // eight Sylow 7-subgroups
    CHECK(chi_closed(2, 3) == 28);    // twenty-eight Sylow 3-subgroups
    CHECK(chi_closed(3, 13) == 144);  // 5616 / 39
    CHECK(chi_closed(4, 7) == 960);   // 60480 / 63
    CHECK(chi_closed(2, 2) == -7);
    CHECK(chi_closed(7, 11) == 0);
  }

  TEST_CASE("Gaussian binomials") {
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 0, 5) == 1);
    CHECK(gaussian_binomial(2, 3, 2) == 0);
    for (int r : {2, 3})
      for (int n = 1; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
          BigInt rk = 1;
          for (int i = 0; i < k; ++i) rk *= r;
          CHECK(gaussian_binomial(n, k, r) == gaussian_binomial(n - 1, k - 1, r) + rk * gaussian_binomial(n - 1, k, r));
          if (r == 2 || n <= 3) CHECK(gaussian_binomial(n, k, r) == count_subspaces(n, k, r));
        }
  }

  TEST_CASE("elementary abelian subgroups") {
    Pgl3 ctx2(2);
    const SubgroupRec g2 = pgl_full(ctx2);
    const IndexedGroup ig2(ctx2, g2);
    const auto e2 = elem_abelian(ig2, 2);
    REQUIRE(!e2.empty());
    CHECK(e2[0].count == 21);
    CHECK(e2[1].count == 14);
    CHECK(e2.size() == 2);
    CHECK(elem_abelian(ig2, 5).empty());

    Pgl3 ctx3(3);
    const SubgroupRec g3 = pgl_full(ctx3);
    const IndexedGroup ig3(ctx3, g3);
    const auto e3 = elem_abelian(ig3, 2);
    CHECK(e3.size() == 2);  // no rank 3 in characteristic 3
  }

  TEST_CASE("brute force and chain count agree with the closed form") {
    for (int q : {2, 3}) {
      Pgl3 ctx(q);
      const SubgroupRec g = pgl_full(ctx);
      const IndexedGroup ig(ctx, g);
      for (int r : {2, 3, 7, 13}) {
        const BigInt brute = chi_bruteforce(ig, r);
        CHECK_MESSAGE(brute == chi_closed(q, r), "q=", q, " r=", r);
        CHECK_MESSAGE(chi_chaincount(ig, r) == brute, "q=", q, " r=", r);
      }
    }
    Pgl3 ctx4(4);
    const IndexedGroup ig4(ctx4, pgl_full(ctx4));
    for (int r : {3, 5, 7}) CHECK_MESSAGE(chi_bruteforce(ig4, r) == chi_closed(4, r), "r=", r);
  }

  TEST_CASE("elation census") {
    const ElationCensus c2 = elation_census(2);
    CHECK(c2.ok);
    CHECK(c2.n_ac[1] == 21);
    CHECK(c2.n_a[1] == 0);
    CHECK(c2.chi == chi_closed(2, 2));
    const ElationCensus c4 = elation_census(4);
    CHECK(c4.ok);
    CHECK(c4.n_ac[1] == 315);
    CHECK(c4.chi == chi_closed(4, 2));
    const ElationCensus c8 = elation_census(8);
    CHECK(c8.ok);
    CHECK(c8.chi == chi_closed(8, 2));
    CHECK_THROWS_AS(elation_census(9), Error);
  }
}
