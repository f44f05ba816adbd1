#include "mobius3/error.hpp"
#include "mobius3/pgl.hpp"
#include "mobius3/scan.hpp"

#include <doctest.h>

using namespace mobius3;

namespace {

const ScanOptions kSerial{ScanMode::Serial, 1};
const ScanOptions kParallel{ScanMode::Parallel, 0};

}  // namespace

TEST_SUITE("scan") {
  TEST_CASE("element counts match group orders") {
    for (int q : {2, 3, 4, 5}) {
      Pgl3 ctx(q);
      for (GroupKind kind : {GroupKind::PGL, GroupKind::PSL}) {
        CHECK(BigInt(count_elements(ctx, kind, kSerial)) == ctx.group_order(kind));
        CHECK(BigInt(count_elements(ctx, kind, kParallel)) == ctx.group_order(kind));
      }
    }
  }

  TEST_CASE("normalizer scan agrees with the materialized oracle") {
    for (int q : {2, 3, 4}) {
      Pgl3 ctx(q);
      for (GroupKind kind : {GroupKind::PGL, GroupKind::PSL}) {
        const SubgroupRec g = closure(ctx, ctx.full_generators(kind), 200000);
        for (MaximalKind mk : {MaximalKind::PointStab, MaximalKind::TriangleStab, MaximalKind::SingerNorm}) {
          SubgroupRec m = maximal_subgroup(ctx, mk);
          // Restrict to the ambient group.
          std::vector<ElemKey> in;
          for (ElemKey k : m.elements)
            if (g.contains(k)) in.push_back(k);
          m.elements = in;
          m.generators.clear();
          for (ElemKey k : in) m.generators.push_back(Pgl3::unkey(k));
          const std::uint64_t oracle = normalizer_in(ctx, g, m).order();
          CHECK(normalizer_order(ctx, kind, m, kSerial) == oracle);
          CHECK(normalizer_order(ctx, kind, m, kParallel) == oracle);
        }
      }
    }
  }

  TEST_CASE("normalizer_full returns the subgroup") {
    Pgl3 ctx(4);
    const SubgroupRec s = maximal_subgroup(ctx, MaximalKind::SingerNorm);
    const SubgroupRec n = normalizer_full(ctx, GroupKind::PGL, s, 1000, kParallel);
    CHECK(n.order() == s.order());
    CHECK(n.elements == normalizer_full(ctx, GroupKind::PGL, s, 1000, kSerial).elements);
    const SubgroupRec tiny = closure(ctx, {ctx.identity()}, 1);
    CHECK_THROWS_AS(normalizer_full(ctx, GroupKind::PGL, tiny, 10, kSerial), Error);
  }

  TEST_CASE("transporter counts, serial and parallel") {
    Pgl3 ctx(8);
    const SubgroupRec stab = line_rep(ctx, 1);
    const SubgroupRec sub = line_rep(ctx, 5);
    const SubgroupRec trivial = line_rep(ctx, 31);
    const std::vector<const SubgroupRec*> ks{&stab, &sub};
    const auto serial = transporter_counts(ctx, GroupKind::PSL, trivial, ks, kSerial);
    const auto parallel = transporter_counts(ctx, GroupKind::PSL, trivial, ks, kParallel);
    CHECK(serial == parallel);
    CHECK(serial[0] == 16482816);
    CHECK(serial[1] == 16482816);
  }

  TEST_CASE("conjugates containing a subgroup") {
    Pgl3 ctx(2);
    const SubgroupRec g = closure(ctx, ctx.full_generators(GroupKind::PSL), 1000);
    CHECK(count_conjugates_containing(ctx, GroupKind::PSL, g, g, 168, kSerial) == 1);
    const SubgroupRec trivial = closure(ctx, {ctx.identity()}, 1);
    const SubgroupRec s = maximal_subgroup(ctx, MaximalKind::SingerNorm);
    CHECK(count_conjugates_containing(ctx, GroupKind::PSL, trivial, s, 21, kParallel) == 8);
    try {
      count_conjugates_containing(ctx, GroupKind::PSL, trivial, s, 5, kSerial);
      FAIL("expected NonIntegralCount");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonIntegralCount);
    }
  }

  TEST_CASE("dihedral group of order 8 lies in four subplane conjugates") {
    Pgl3 ctx(8);
    const SubgroupRec d8 = line_rep(ctx, 23);
    const SubgroupRec sub = line_rep(ctx, 5);
    CHECK(d8.order() == 8);
    CHECK(count_conjugates_containing(ctx, GroupKind::PSL, d8, sub, 168, kParallel) == 4);
    const SubgroupRec stab = line_rep(ctx, 1);
    CHECK(count_conjugates_containing(ctx, GroupKind::PSL, line_rep(ctx, 31), stab, 225792, kSerial) == 73);
  }

  TEST_CASE("thread resolution") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
  }
}
