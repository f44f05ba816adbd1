#include "mobius3/error.hpp"
#include "mobius3/psl3.hpp"
#include "mobius3/verify.hpp"

#include <doctest.h>

#include <set>

using namespace mobius3;

namespace {

const LineValues& line(const std::vector<LineValues>& v, int id) { return v.at(id - 1); }

}  // namespace

TEST_SUITE("psl3") {
  TEST_CASE("polynomial arithmetic") {
    const QPoly q = QPoly::q();
    const QPoly a = (q - 1) * (q + 1);
    CHECK(a == q.pow(2) - 1);
    CHECK(a.degree() == 2);
    CHECK(a.str() == "-1 + 1*q^2");
    CHECK(QPoly(0).str() == "0");
    CHECK(a.exact_div(q - 1) == q + 1);
    CHECK_THROWS_AS(a.exact_div(q + 2), Error);
    CHECK(a.eval(8) == Rational(63));
    CHECK((q * QPoly(Rational(1, 2))).eval_int(8) == 4);
    CHECK_THROWS_AS((q * QPoly(Rational(1, 2))).eval_int(3), Error);
    const auto [quot, rem] = (q.pow(3) + 1).divmod(q.pow(2));
    CHECK(quot == q);
    CHECK(rem == 1);
  }

  TEST_CASE("group order") {
    CHECK(group_order_poly().eval_int(2) == 168 * 1);  // 8*7*3
    CHECK(group_order_poly().eval_int(8) == 16482816);
  }

  TEST_CASE("global sum vanishes") {
    CHECK(global_sum_symbolic(table4_symbolic()).is_zero());
    for (int p : {3, 5, 7, 11, 13}) {
      CHECK(global_sum_at(table4(p), p) == 0);
      CHECK(global_sum_direct(p) == 0);
    }
  }

  TEST_CASE("invalid p") {
    for (int p : {0, 1, 2, 4, 9}) {
      try {
        table4(p);
        FAIL("expected InvalidP");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidP);
        CHECK(e.exit_code() == kExitInvalidInput);
      }
    }
  }

  TEST_CASE("values at q = 8") {
    const auto v = evaluate(table4(3), 3);
    REQUIRE(v.size() == 31);
    CHECK(line(v, 23).order == 8);
    CHECK(line(v, 23).normalizer_order == 32);
    CHECK(line(v, 23).class_size == 515088);
    CHECK(line(v, 23).mu == -4);
    // GL(2,8): 63 * 56.
    CHECK(line(v, 7).order == 3528);
    CHECK(line(v, 7).class_size == 16482816 / 3528);
    CHECK(line(v, 7).mu == 1);
    CHECK(line(v, 24).normalizer_order == 147);
    CHECK(line(v, 31).class_size == 1);
    CHECK(line(v, 31).mu == 0);
    CHECK(line(v, 1).class_size == 73);
    const auto v5 = evaluate(table4(5), 5);
    CHECK(line(v5, 24).normalizer_order == 3 * (32 * 32 + 32 + 1));
  }

  TEST_CASE("index coefficients") {
    const auto a = a_n_closed(3);
    CHECK(a.at(1) == 1);
    CHECK(a.at(73) == -146);
    BigInt sum = 0;
    for (const auto& [n, c] : a) sum += c;
    CHECK(sum == 0);
  }

  TEST_CASE("Mann bound") {
    for (int p : {3, 5, 7}) {
      const MannReport m = mann_check(p);
      CHECK(m.ok);
      CHECK(m.max_ratio <= 1);
    }
    CHECK(mann_check(3).max_ratio == Rational(1, 73));
  }

  TEST_CASE("fixtures") {
    const auto& t2 = table2_fixture();
    CHECK(t2.size() == 20);
    int classes = 0;
    for (const auto& r : t2) classes += r.classes;
    CHECK(classes == 47);
    CHECK(t2.front().order == 20160);
    CHECK(t2.back().mu == -120960);
    CHECK(table1_fixture().size() == 14);
    const ConsistencyReport c = consistency_table1_vs_table4();
    CHECK(c.ok);
    CHECK(c.table1_rows == 14);
    CHECK(c.table4_nonzero == 14);
  }

  TEST_CASE("corrupted entry is detected") {
    const CheckResult clean = check_table4();
    CHECK(clean.pass);
    const CheckResult bad = check_table4([](std::vector<ClosedFormLine>& lines) { lines[22].mu = lines[22].mu + 1; });
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("global-sum") != std::string::npos);
  }

  TEST_CASE("census inside PSL(3,8)") {
    Pgl3 ctx(8);
    Census census(ctx);
    CHECK(census.p() == 3);

    const CensusReport trivial = census.run(31, CensusAgainst::Nonzero, false);
    for (const CensusEntry& e : trivial.entries)
      if (e.k_line == 1) CHECK(e.count == 73);
    CHECK(trivial.residual == 0);

    const CensusReport c3 = census.run(29, CensusAgainst::Nonzero, true);
    CHECK(c3.residual == 0);
    CHECK(BigInt(c3.normalizer_empirical) == c3.normalizer_table);
    BigInt maximals = 0;
    for (const CensusEntry& e : c3.entries)
      if (e.k_line <= 5) maximals += e.count;
    CHECK(maximals == 86);

    const CensusReport d8 = census.run(23, CensusAgainst::Nonzero, true);
    CHECK(d8.residual == 0);
    CHECK(d8.mu == -4);
    REQUIRE(d8.stated_mu);
    CHECK(*d8.stated_mu == -4);
    for (const StatedComparison& s : d8.stated) CHECK(s.matches);

    const CensusReport s3 = census.run(25, CensusAgainst::Nonzero, false);
    CHECK(s3.residual == 0);
    bool flagged = false;
    for (const StatedComparison& s : s3.stated) flagged |= !s.matches;
    CHECK(flagged);
  }
}
