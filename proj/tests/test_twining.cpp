#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "satake_fold/lattice.hpp"
#include "satake_fold/twining.hpp"

using namespace test_support;

TEST_CASE("hand-built adjoint traces") {
  const auto traces = sl3_adjoint_traces();
  CHECK(traces.at({1, 1}) == 1);
  CHECK(traces.at({0, 0}) == 0);
  CHECK(traces.at({-1, -1}) == 1);
  for (const char* g : {"A2", "pgl3"}) {
    const RootDatum datum = builtin_datum(g);
    const TwiningContext ctx(datum, builtin_sigma("A2-swap", datum));
    const Coweight theta = datum.coroot(0) + datum.coroot(1);
    CAPTURE(g);
    CHECK(ctx.twining_trace(theta, theta) == traces.at({1, 1}));
    CHECK(ctx.twining_trace(theta, 0 * theta) == traces.at({0, 0}));
    CHECK(ctx.twining_trace(theta, -theta) == traces.at({-1, -1}));
  }
}

TEST_CASE("A2 swap twining traces and folded multiplicities") {
  const RootDatum a2 = builtin_datum("A2");
  const PinnedAut swap = builtin_sigma("A2-swap", a2);
  const Coweight theta = vec({1, 1});
  CHECK(twining_trace(a2, swap, theta, vec({0, 0})) == 0);
  CHECK(twining_trace(a2, swap, theta, theta) == 1);
  CHECK(twining_trace(a2, swap, theta, -theta) == 1);
  CHECK(folded_multiplicity(a2, swap, theta, vec({0, 0})) == 0);
  CHECK(folded_multiplicity(a2, swap, theta, theta) == 1);
  CHECK(folded_multiplicity(a2, swap, theta, -theta) == 1);
  const CharPoly tc = twining_character(a2, swap, theta);
  CHECK(tc.terms.size() == 2);
  CHECK(tc[theta] == 1);
  CHECK(tc[-theta] == 1);
  CHECK(twining_character(a2, swap, vec({0, 0})).terms.size() == 1);
  CHECK_THROWS_AS(twining_trace(a2, swap, vec({1, 1}), vec({1, 0})), PreconditionError);
  CHECK_THROWS_AS(twining_trace(a2, swap, vec({3, 0}), vec({0, 0})), PreconditionError);
}

TEST_CASE("A2 swap report") {
  const RootDatum a2 = builtin_datum("A2");
  const TwiningReport r = verify_jantzen(a2, builtin_sigma("A2-swap", a2), vec({1, 1}));
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].lambda == vec({1, 1}));
  CHECK(r.rows[1].lambda == vec({0, 0}));
  CHECK(r.rows[2].lambda == vec({-1, -1}));
  CHECK(r.rows[0].lhs_trace == 1);
  CHECK(r.rows[0].rhs_mult == 1);
  CHECK(r.rows[1].lhs_trace == 0);
  CHECK(r.rows[1].rhs_mult == 0);
  CHECK(r.rows[2].lhs_trace == 1);
  CHECK(r.rows[2].rhs_mult == 1);
  CHECK(r.overall);
  CHECK(r.dimension == 8);
  CHECK(r.non_invariant.size() == 2);
  for (const auto& o : r.non_invariant) CHECK(o.orbit.size() == 2);
}

TEST_CASE("identity sigma collapses both sides to the character") {
  for (const char* g : {"A2", "A3", "pgl3"}) {
    const RootDatum datum = builtin_datum(g);
    const TwiningContext ctx(datum, identity_aut(datum));
    for (int t = 0; t < 4; ++t) {
      IntVector seed = IntVector::Zero(datum.dim());
      seed(t % datum.dim()) = 1 + t / 2;
      const Coweight mu = ctx.system().dominant_representative(seed);
      if (ctx.system().height(mu) > 8) continue;
      CHECK(ctx.twining_character(mu) == character(ctx.system(), mu));
      const TwiningReport r = ctx.verify(mu);
      CHECK(r.overall);
      CHECK(r.non_invariant.empty());
    }
  }
}

TEST_CASE("Jantzen rows pass for small weights of the built-in pairs") {
  for (const auto& [g, s] : builtin_pairs()) {
    const RootDatum datum = builtin_datum(g);
    const TwiningContext ctx(datum, builtin_sigma(s, datum));
    const auto mus = ctx.invariant_dominant_weights(g == std::string("D4") ? 5 : 4);
    CAPTURE(g);
    CHECK(!mus.empty());
    for (const auto& mu : mus) {
      const TwiningReport r = ctx.verify(mu);
      CHECK(r.overall);
      const CharPoly tc = ctx.twining_character(mu);
      const FreudenthalTable amb(ctx.system(), mu);
      for (const auto& row : r.rows) {
        CHECK(row.lhs_trace >= 0);
        CHECK(row.lhs_trace <= amb.multiplicity(row.lambda));
        for (int gen : ctx.folded_weyl().generators) CHECK(tc[ctx.group().apply(gen, row.lambda)] == row.lhs_trace);
      }
      for (const auto& datum_l : ctx.invariant_mv_data(mu)) CHECK(ctx.ggms_is_sigma_equivariant(datum_l));
    }
  }
}

TEST_CASE("invariant dominant weights") {
  const RootDatum a4 = builtin_datum("A4");
  const TwiningContext ctx(a4, builtin_sigma("A4-flip", a4));
  const auto mus = ctx.invariant_dominant_weights(4);
  REQUIRE(mus.size() == 2);
  CHECK(mus[0] == vec({0, 0, 0, 0}));
  CHECK(mus[1] == vec({1, 1, 1, 1}));
  const RootDatum d4 = builtin_datum("D4");
  const TwiningContext tri(d4, builtin_sigma("D4-rot3", d4));
  CHECK(tri.invariant_dominant_weights(3).size() == 1);
  const auto d4mus = tri.invariant_dominant_weights(5);
  REQUIRE(d4mus.size() == 2);
  CHECK(d4mus[1] == vec({1, 2, 1, 1}));
  const RootDatum p = builtin_datum("pgl3");
  const TwiningContext pc(p, builtin_sigma("A2-swap", p));
  for (const auto& mu : pc.invariant_dominant_weights(3)) {
    CHECK(pc.system().is_dominant(mu));
    CHECK(is_sigma_invariant(pc.sigma(), mu));
    CHECK(pc.system().height(mu) <= 6);
  }
}

TEST_CASE("double fold") {
  const RootDatum a3 = builtin_datum("A3");
  const DoubleFold f3 = double_fold_roots(a3, builtin_sigma("A3-flip", a3));
  CHECK(f3.datum.cartan() == mat({{2, -2}, {-1, 2}}));
  CHECK(f3.roots.size() == 4);

  const RootDatum a2 = builtin_datum("A2");
  const DoubleFold f2 = double_fold_roots(a2, builtin_sigma("A2-swap", a2));
  REQUIRE(f2.roots.size() == 1);
  CHECK(f2.roots[0] == 2 * (a2.coroot(0) + a2.coroot(1)));

  const DoubleFold fi = double_fold_roots(a3, identity_aut(a3));
  const RootSystem dual_rs{dual(a3)};
  CHECK(fi.roots == dual_rs.positive().roots);
  CHECK(fi.datum.cartan() == a3.cartan().transpose());

  // Flips of type A: the double fold is the transpose of the fold.
  for (const char* g : {"A3", "A4"}) {
    const RootDatum datum = builtin_datum(g);
    const PinnedAut flip = builtin_sigma(g == std::string("A3") ? "A3-flip" : "A4-flip", datum);
    CHECK(double_fold_roots(datum, flip).datum.cartan() == fold(datum, flip).datum.cartan().transpose());
  }
}
