#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "symsing/charts.hpp"
#include "symsing/corpus.hpp"
#include "symsing/groebner.hpp"

using namespace symsing;
using fixtures::dataset;

namespace {

Polynomial parse_in(const Ring& r, const std::string& text) {
  return parse_fracpoly(ParseEnv{r, {}, {}}, text).num();
}

}  // namespace

TEST_CASE("blow-up chart of the plane at the origin") {
  Ring plane = Ring::make(VarTable({"x", "y"}, {1, 1}));
  RingPresentation amb{plane, {}};
  std::vector<Polynomial> gens = {parse_in(plane, "x"), parse_in(plane, "y")};

  ChartPresentation chart = chart_presentation(amb, gens, 0);
  CHECK(chart.ring.nvars() == 3);
  CHECK(chart.relations.size() == 1);
  GroebnerBasis gb = GroebnerBasis::compute(chart.ring, chart.relations);
  CHECK(gb.contains(parse_in(chart.ring, "y - u1*x")));
  CHECK(krull_dimension(gb) == 2);
}

TEST_CASE("blow-up chart of three-space at the origin") {
  Ring space = Ring::make(VarTable({"x", "y", "w"}, {1, 1, 1}));
  RingPresentation amb{space, {}};
  std::vector<Polynomial> gens = {parse_in(space, "x"), parse_in(space, "y"),
                                  parse_in(space, "w")};

  ChartPresentation chart = chart_presentation(amb, gens, 2);
  CHECK(chart.ring.nvars() == 5);
  GroebnerBasis gb = GroebnerBasis::compute(chart.ring, chart.relations);
  CHECK(gb.contains(parse_in(chart.ring, "x - u0*w")));
  CHECK(gb.contains(parse_in(chart.ring, "y - u1*w")));
  CHECK(krull_dimension(gb) == 3);
}

TEST_CASE("saturation is what resolves the quadric cone") {
  // Blowing up the cone xw = y^2 at the line <x, y>: the strict transform
  // needs the saturation step, which divides x out of x*(w - u1^2*x).
  Ring amb3 = Ring::make(VarTable({"x", "y", "w"}, {1, 1, 1}));
  RingPresentation cone{amb3, {parse_in(amb3, "x*w - y^2")}};
  std::vector<Polynomial> gens = {parse_in(amb3, "x"), parse_in(amb3, "y")};

  ChartPresentation chart = chart_presentation(cone, gens, 0);
  GroebnerBasis gb = GroebnerBasis::compute(chart.ring, chart.relations);
  Polynomial resolved = parse_in(chart.ring, "w - u1^2*x");
  CHECK(gb.contains(resolved));
  CHECK(krull_dimension(gb) == 2);

  // Without saturation the same polynomial is not in the ideal.
  std::vector<Polynomial> raw = {
      parse_in(chart.ring, "x*w - y^2"),
      parse_in(chart.ring, "y - u1*x"),
  };
  GroebnerBasis unsat = GroebnerBasis::compute(chart.ring, raw);
  CHECK(!unsat.contains(resolved));
}

TEST_CASE("first chart syzygies eliminate the redundant coordinates") {
  Report rep = verify_x24_syzygies(dataset());
  for (const auto& l : rep.lines) INFO(l);
  CHECK(rep.ok());

  // Negative control: perturbing one coefficient breaks the identity.
  NamedExprs ids =
      dataset().load("chart_identities.txt", dataset().upstairs_env());
  FracPoly bad = ids.frac("syz1_rhs") + ids.frac("syz1_lhs");
  CHECK(!(ids.frac("syz1_lhs") == bad));
}

TEST_CASE("second chart presents the minimal nilpotent orbit") {
  Report rep = verify_a2_isomorphism(dataset());
  for (const auto& l : rep.lines) INFO(l);
  CHECK(rep.ok());
  CHECK(rep.lines.size() == 11);  // trace + nine minors + factorization
}

TEST_CASE("third chart is a smooth hypersurface") {
  Report rep = verify_x93(dataset());
  for (const auto& l : rep.lines) INFO(l);
  CHECK(rep.ok());

  // The displayed relation is inhomogeneous: it mixes degrees 3, 5 and 1.
  Ring ring = Ring::make(VarTable({"a", "b", "c", "d", "e"}, {1, 1, 1, 1, 1}),
                         MonomialOrder::grevlex(5));
  NamedExprs chart = dataset().load("chart_x93.txt", ParseEnv{ring, {}, {}});
  CHECK(!chart.poly("rel").is_homogeneous({1, 1, 1, 1, 1}));
}

TEST_CASE("isolatedness: ambient generators die on the chart boundary") {
  Report rep = verify_isolatedness_yogh(dataset());
  for (const auto& l : rep.lines) INFO(l);
  CHECK(rep.ok());
  // Twelve ambient generators plus the proper-ideal line.
  CHECK(rep.lines.size() == 13);

  // The combined ideal stays proper: 1 is not a member.
  const Ring& ring = dataset().chart_ring();
  std::vector<Polynomial> gens = dataset().chart_relations().polys();
  const NamedExprs& expr = dataset().chart_expressions();
  for (const std::string& n : expr.names())
    if (n[0] == 'k') gens.push_back(expr.poly(n));
  GroebnerBasis gb = GroebnerBasis::compute(ring, gens);
  CHECK(!gb.contains(parse_in(ring, "1")));
}

TEST_CASE("preimage of the origin is at most two-dimensional in each chart") {
  Report rep = verify_preimage_dimensions(dataset());
  for (const auto& l : rep.lines) INFO(l);
  CHECK(rep.ok());
  CHECK(rep.lines.size() == 4);

  // Order independence: the bound on the singular chart survives shuffling.
  const Ring& ring = dataset().chart_ring();
  std::vector<Polynomial> gens = dataset().chart_relations().polys();
  gens.push_back(parse_in(ring, "h"));
  gens.push_back(parse_in(ring, "z0"));
  std::reverse(gens.begin(), gens.end());
  GroebnerBasis gb = GroebnerBasis::compute(ring, gens);
  CHECK(krull_dimension(gb) == 2);
}

TEST_CASE("divisor ideal orbit closes and cuts out three-folds") {
  Report rep = verify_ideal_j_and_chart(dataset());
  for (const auto& l : rep.lines) INFO(l);
  CHECK(rep.ok());

  // The divisors are not contained in the locus h = z0 = 0 that bounds the
  // preimage of the origin: they dominate the singular locus instead.
  const Ring& ring = dataset().chart_ring();
  NamedExprs file = dataset().load("chart_ideal_J.txt", ParseEnv{ring, {}, {}});
  std::vector<Polynomial> gens = dataset().chart_relations().polys();
  for (const auto& g : file.polys()) gens.push_back(g);
  CHECK(!in_radical(ring, gens, parse_in(ring, "h")));
  CHECK(in_radical(ring, gens, file.poly("w0")));
}
