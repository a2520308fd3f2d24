#include <doctest.h>

#include "helpers.hpp"
#include "satake_fold/characters.hpp"

using namespace test_support;

namespace {

// Kostant's multiplicity formula: m(lambda) = sum_w sign(w) P(w(mu + rho) - (lambda + rho)),
// evaluated with 2 rho^v to stay integral. Independent of the Freudenthal code.
Integer kostant_multiplicity(const WeylGroup& g, const MvCalculator& mv, const Coweight& mu, const Coweight& lambda) {
  Coweight two_rho = Coweight::Zero(g.system().dim());
  for (const auto& c : g.system().positive().coroots) two_rho += c;
  Integer m = 0;
  for (int w = 0; w < static_cast<int>(g.size()); ++w) {
    const Coweight shift = g.apply(w, two_rho) - two_rho;  // even combination of coroots
    const Coweight x = g.apply(w, mu) + shift / 2 - lambda;
    const Integer sign = g.length(w) % 2 ? -1 : 1;
    m += sign * mv.kostant(-x);
  }
  return m;
}

}  // namespace

TEST_CASE("Freudenthal multiplicities on A2") {
  const RootSystem a2{builtin_datum("A2")};
  CHECK(freudenthal_multiplicity(a2, vec({1, 1}), vec({0, 0})) == 2);
  CHECK(freudenthal_multiplicity(a2, vec({1, 1}), vec({1, 1})) == 1);
  CHECK(freudenthal_multiplicity(a2, vec({1, 1}), vec({1, 0})) == 1);
  CHECK(freudenthal_multiplicity(a2, vec({1, 1}), vec({2, 2})) == 0);
  CHECK_THROWS_AS(freudenthal_multiplicity(a2, vec({1, 0}), vec({0, 0})), PreconditionError);
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dimension(RootSystem{builtin_datum("A2")}, vec({1, 1})) == 8);
  CHECK(weyl_dimension(RootSystem{builtin_datum("A2")}, vec({0, 0})) == 1);
  CHECK(weyl_dimension(RootSystem{builtin_datum("A1")}, vec({1})) == 3);
  CHECK(weyl_dimension(RootSystem{builtin_datum("A4")}, vec({1, 1, 1, 1})) == 24);
  CHECK(weyl_dimension(RootSystem{builtin_datum("D4")}, vec({1, 2, 1, 1})) == 28);
  CHECK(weyl_dimension(RootSystem{builtin_datum("pgl3")}, vec({1, 0})) == 3);
}

TEST_CASE("characters: small cases") {
  const RootSystem a1{builtin_datum("A1")};
  const CharPoly c1 = character(a1, vec({1}));
  CHECK(c1.terms.size() == 3);
  CHECK(c1[vec({-1})] == 1);
  CHECK(c1[vec({0})] == 1);
  CHECK(c1[vec({1})] == 1);
  const CharPoly c0 = character(a1, vec({0}));
  CHECK(c0.terms.size() == 1);
  const CharPoly c2 = character(RootSystem{builtin_datum("A2")}, vec({1, 1}));
  CHECK(c2.terms.size() == 7);
  CHECK(c2.total() == 8);
}

TEST_CASE("Freudenthal agrees with Kostant's multiplicity formula, including non-simply-laced") {
  const std::vector<RootDatum> data{builtin_datum("A2"), builtin_datum("A3"), builtin_datum("pgl3"),
                                    builtin_datum("D4"), simply_connected(mat({{2, -1}, {-2, 2}})),
                                    adjoint(mat({{2, -1}, {-2, 2}})), simply_connected(mat({{2, -1}, {-3, 2}}))};
  for (const auto& datum : data) {
    const WeylGroup g{RootSystem(datum)};
    const MvCalculator mv(g);
    const RootSystem& rs = g.system();
    const Eigen::Index d = rs.dim();
    IntVector c = IntVector::Zero(d);
    int tested = 0;
    while (tested < 8) {
      const Coweight mu = rs.dominant_representative(c);
      const CharPoly ch = character(rs, mu);
      CHECK(ch.total() == weyl_dimension(rs, mu));
      for (const auto& [lambda, m] : ch.terms) {
        if (rs.is_dominant(lambda)) CHECK(m == kostant_multiplicity(g, mv, mu, lambda));
      }
      c(tested % d) += 1;
      ++tested;
    }
  }
}

TEST_CASE("character support is W-stable with constant values; dominant weights are saturated") {
  for (const char* name : {"A3", "D4", "pgl3"}) {
    const WeylGroup g{RootSystem(builtin_datum(name))};
    const RootSystem& rs = g.system();
    for (int t = 0; t < 6; ++t) {
      IntVector seed = IntVector::Zero(rs.dim());
      seed(t % rs.dim()) = 1 + t / rs.dim();
      const Coweight mu = rs.dominant_representative(seed);
      const CharPoly ch = character(rs, mu);
      for (const auto& [lambda, m] : ch.terms) {
        for (Eigen::Index i = 0; i < rs.rank(); ++i) CHECK(ch[rs.reflect(i, lambda)] == m);
      }
      for (const auto& nu : rs.dominant_weights_below(mu)) CHECK(ch[nu] >= 1);
    }
  }
}

TEST_CASE("MV character equals the Freudenthal character") {
  for (const auto& [name, mu] : std::vector<std::pair<std::string, IntVector>>{
           {"A2", vec({1, 1})}, {"A2", vec({0, 0})}, {"A3", vec({1, 1, 1})}, {"pgl3", vec({1, 0})}}) {
    const WeylGroup g{RootSystem(builtin_datum(name))};
    const MvCalculator mv(g);
    CAPTURE(name);
    const CharPoly expect = character(g.system(), mu);
    CHECK(mv_character(mv, mu) == expect);
    const auto words = g.reduced_words(g.longest());
    CHECK(mv_character(mv, mu, words.back()) == expect);
  }
}
