#include "mobius3/error.hpp"
#include "mobius3/pgl.hpp"
#include "mobius3/psl3.hpp"
#include "mobius3/scan.hpp"

#include <doctest.h>

#include <random>

using namespace mobius3;

TEST_SUITE("pgl") {
  TEST_CASE("plane sizes and incidence") {
    for (int q : {2, 3, 4, 5, 8}) {
      Pgl3 ctx(q);
      const Plane& pl = ctx.plane();
      REQUIRE(pl.size() == q * q + q + 1);
      for (int i = 0; i < pl.size(); ++i) {
        CHECK(static_cast<int>(pl.points_on(i).size()) == q + 1);
        CHECK(static_cast<int>(pl.lines_through(i).size()) == q + 1);
      }
      int incidences = 0;
      for (int pt = 0; pt < pl.size(); ++pt)
        for (int ln = 0; ln < pl.size(); ++ln) incidences += pl.incident(pt, ln);
      CHECK(incidences == pl.size() * (q + 1));
    }
    CHECK_THROWS_AS(Pgl3(6), Error);
  }

  TEST_CASE("canonical elements") {
    Pgl3 ctx(5);
    const Mat3 m = ctx.from_entries({1, 2, 0, 0, 3, 1, 4, 0, 1});
    Mat3 scaled;
    for (int i = 0; i < 9; ++i) scaled[i] = ctx.field().mul(3, m[i]);
    CHECK(ctx.elem(m).key == ctx.elem(scaled).key);
    const GElem id = ctx.elem(ctx.identity());
    for (int i = 0; i < ctx.plane().size(); ++i) CHECK(id.perm[i] == i);
    CHECK(ctx.canonical(ctx.canonical(scaled)) == ctx.canonical(scaled));
    try {
      ctx.elem(ctx.from_entries({1, 2, 3, 2, 4, 1, 0, 0, 0}));
      FAIL("expected Singular");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Singular);
    }
  }

  TEST_CASE("elation of the first construction") {
    Pgl3 ctx(8);
    const Mat3 a = ctx.from_entries({1, 0, 1, 0, 1, 0, 0, 0, 1});
    CHECK(ctx.mul(a, a) == ctx.identity());
    const ElementClass c = ctx.classify(a);
    CHECK(c.tag == ElementTag::Elation);
    CHECK(c.order == 2);
    REQUIRE(c.center);
    REQUIRE(c.axis);
    CHECK(ctx.plane().coords(*c.center) == Vec3{1, 0, 0});
    CHECK(ctx.plane().coords(*c.axis) == Vec3{0, 0, 1});
  }

  TEST_CASE("order four unipotent") {
    Pgl3 ctx(8);
    const Mat3 a = ctx.from_entries({1, 1, 1, 0, 1, 1, 0, 0, 1});
    const ElementClass c = ctx.classify(a);
    CHECK(c.tag == ElementTag::OrderFourUnipotent);
    CHECK(c.order == 4);
    CHECK(c.fixed_points == 1);
    CHECK(c.fixed_lines == 1);
  }

  TEST_CASE("homology fixes a line pointwise") {
    Pgl3 ctx(4);
    const Fq w = ctx.field().primitive();
    const Mat3 h = diagonal(w, 1, 1);
    CHECK(ctx.classify(h).tag == ElementTag::Homology);
    int fixed = 0;
    for (int pt = 0; pt < ctx.plane().size(); ++pt) {
      const bool on_axis = ctx.plane().coords(pt)[0] == 0;
      const bool is_fixed = ctx.apply_point(h, pt) == pt;
      fixed += is_fixed;
      if (on_axis) CHECK(is_fixed);
    }
    CHECK(fixed == 4 + 2);
  }

  TEST_CASE("elation count by exhaustive classification") {
    for (int q : {2, 3, 4}) {
      Pgl3 ctx(q);
      long long elations = 0, total = 0;
      for_each_element(ctx, GroupKind::PGL, [&](const Mat3& m) {
        ++total;
        elations += ctx.classify(m).tag == ElementTag::Elation;
      });
      CHECK(BigInt(total) == ctx.pgl_order());
      CHECK(elations == (q * q + q + 1) * (q * q - 1));
    }
  }

  TEST_CASE("classification is conjugation invariant") {
    for (int q : {2, 3, 4, 5}) {
      Pgl3 ctx(q);
      std::mt19937 rng(q);
      auto random_elem = [&] {
        for (;;) {
          Mat3 m;
          for (Fq& x : m) x = rng() % q;
          if (ctx.det(m) != 0) return ctx.canonical(m);
        }
      };
      for (int t = 0; t < 10000; ++t) {
        const Mat3 g = random_elem(), x = random_elem();
        const ElementClass a = ctx.classify(g), b = ctx.classify(ctx.conjugate(g, x));
        REQUIRE(a.tag == b.tag);
        REQUIRE(a.order == b.order);
        REQUIRE(a.fixed_points == b.fixed_points);
        REQUIRE(a.fixed_lines == b.fixed_lines);
      }
    }
  }

  TEST_CASE("closure orders") {
    Pgl3 ctx2(2);
    CHECK(closure(ctx2, ctx2.full_generators(GroupKind::PSL), 1000).order() == 168);
    Pgl3 ctx4(4);
    CHECK(closure(ctx4, ctx4.full_generators(GroupKind::PGL), 100000).order() == 60480);
    CHECK(closure(ctx4, ctx4.full_generators(GroupKind::PSL), 100000).order() == 20160);
    Pgl3 ctx8(8);
    const SubgroupRec sub = maximal_subgroup(ctx8, MaximalKind::SubplaneStab);
    CHECK(sub.order() == 168);
    for (const Mat3& g : sub.generators)
      for (Fq x : g) CHECK(x <= 1);
    CHECK_THROWS_AS(closure(ctx4, ctx4.full_generators(GroupKind::PGL), 1000), Error);
  }

  TEST_CASE("maximal subgroups") {
    Pgl3 ctx2(2);
    CHECK(maximal_subgroup(ctx2, MaximalKind::SingerNorm).order() == 21);
    Pgl3 ctx8(8);
    CHECK(maximal_subgroup(ctx8, MaximalKind::PointStab).order() == 225792);
    CHECK(maximal_subgroup(ctx8, MaximalKind::LineStab).order() == 225792);
    CHECK(maximal_subgroup(ctx8, MaximalKind::TriangleStab).order() == 294);
    CHECK(maximal_subgroup(ctx8, MaximalKind::SingerNorm).order() == 219);
    Pgl3 ctx3(3);
    CHECK_THROWS_AS(maximal_subgroup(ctx3, MaximalKind::SubplaneStab), Error);
    CHECK_THROWS_AS(parse_maximal_kind("nonsense"), Error);
  }

  TEST_CASE("line representatives at q = 8") {
    Pgl3 ctx(8);
    const auto vals = evaluate(table4(3), 3);
    for (int line = 1; line <= 31; ++line) {
      const SubgroupRec h = line_rep(ctx, line);
      CHECK_MESSAGE(BigInt(h.order()) == vals[line - 1].order, "line ", line);
      CHECK(h.tag == line);
    }
    // Line 19: homologies with center (1:0:0) and axis X = 0.
    const SubgroupRec h19 = line_rep(ctx, 19);
    for (ElemKey k : h19.elements) {
      const ElementClass c = ctx.classify(Pgl3::unkey(k));
      if (c.tag == ElementTag::Identity) continue;
      CHECK(c.tag == ElementTag::Homology);
      CHECK(ctx.plane().coords(*c.center) == Vec3{1, 0, 0});
      CHECK(ctx.plane().coords(*c.axis) == Vec3{1, 0, 0});
    }
    CHECK_THROWS_AS(line_rep(ctx, 0), Error);
    Pgl3 ctx4(4);
    CHECK_THROWS_AS(line_rep(ctx4, 1), Error);
  }

  TEST_CASE("transitivity on points, pairs, flags, antiflags and triangles") {
    for (int q : {2, 3, 4}) {
      Pgl3 ctx(q);
      const Plane& pl = ctx.plane();
      const auto gens = ctx.full_generators(GroupKind::PSL);
      const std::size_t n = pl.size(), cap = 100000;
      const BigInt order = ctx.psl_order();
      auto check = [&](std::vector<PlaneItem> seed, std::size_t want) {
        const OrbitStabilizer os = orbit_stabilizer(ctx, gens, seed, cap);
        CHECK(os.orbit.size() == want);
        CHECK(BigInt(os.orbit.size()) * os.stabilizer.order() == order);
      };
      const int p0 = pl.id_of({1, 0, 0}), p1 = pl.id_of({0, 1, 0}), p2 = pl.id_of({0, 0, 1});
      check({{false, p0}}, n);
      check({{false, p0}, {false, p1}}, n * (n - 1));
      const int l01 = pl.join(p0, p1);
      check({{false, p0}, {true, l01}}, n * (q + 1));
      check({{false, p2}, {true, l01}}, n * q * q);
      check({{false, p0}, {false, p1}, {false, p2}}, n * (n - 1) * (n - q - 1));
    }
    Pgl3 ctx2(2);
    const OrbitStabilizer os = orbit_stabilizer(ctx2, ctx2.full_generators(GroupKind::PGL), {{false, 0}}, 1000);
    CHECK(os.orbit.size() == 7);
    CHECK(os.stabilizer.order() == 24);
  }

  TEST_CASE("point orbit in PSL(3,8)") {
    Pgl3 ctx(8);
    const OrbitStabilizer os = orbit_stabilizer(ctx, ctx.full_generators(GroupKind::PSL), {{false, 0}}, 1'000'000);
    CHECK(os.orbit.size() == 73);
    CHECK(os.stabilizer.order() == 225792);
  }

  TEST_CASE("normalizer inside a materialized ambient") {
    Pgl3 ctx(2);
    const SubgroupRec g = closure(ctx, ctx.full_generators(GroupKind::PSL), 1000);
    CHECK(normalizer_in(ctx, g, g).order() == 168);
    const SubgroupRec s = maximal_subgroup(ctx, MaximalKind::SingerNorm);
    CHECK(normalizer_in(ctx, g, s).order() == 21);
  }
}
