#include "symsing/charts.hpp"

#include <array>
#include <memory>
#include <stdexcept>

namespace symsing {

ChartPresentation chart_presentation(const RingPresentation& ambient,
                                     const std::vector<Polynomial>& ideal_gens,
                                     size_t k, const GroebnerOptions& opt) {
  if (k >= ideal_gens.size())
    throw std::out_of_range("chart index past the ideal generators");
  const size_t na = ambient.ring.nvars();
  std::vector<std::string> names;
  std::vector<long> weights;
  for (size_t i = 0; i < na; ++i) {
    names.push_back(ambient.ring.vars->name(i));
    weights.push_back(1);
  }
  std::vector<size_t> tag_of(ideal_gens.size(), 0);
  for (size_t i = 0; i < ideal_gens.size(); ++i) {
    if (i == k) continue;
    tag_of[i] = names.size();
    names.push_back("u" + std::to_string(i));
    weights.push_back(1);
  }
  Ring ring = Ring::make(VarTable(names, weights),
                         MonomialOrder::grevlex(names.size()));
  tag_of[k] = ring.nvars();

  std::vector<Polynomial> rels;
  for (const Polynomial& r : ambient.relations)
    rels.push_back(inject(r, ring, 0));
  Polynomial gk = inject(ideal_gens[k], ring, 0);
  for (size_t i = 0; i < ideal_gens.size(); ++i) {
    if (i == k) continue;
    Monomial um(ring.nvars());
    um.set_exp(tag_of[i], 1);
    Polynomial u =
        Polynomial::from_terms(ring.vars, ring.ord, {{um, Cyclo(1)}});
    rels.push_back(inject(ideal_gens[i], ring, 0) - u * gk);
  }
  rels = saturate(ring, rels, gk, opt);
  return ChartPresentation{ring, std::move(rels), k, std::move(tag_of)};
}

namespace {

Polynomial scaled_var(const Ring& r, const std::string& name, const Cyclo& c) {
  auto i = r.vars->index_of(name);
  if (!i) throw std::logic_error("no chart variable named " + name);
  Monomial m(r.nvars());
  m.set_exp(*i, 1);
  return Polynomial::from_terms(r.vars, r.ord, {{m, c}});
}

std::vector<Polynomial> images_from(
    const Ring& r,
    const std::vector<std::pair<std::string, std::pair<std::string, int>>>&
        spec) {
  std::vector<Polynomial> out;
  for (size_t i = 0; i < r.nvars(); ++i) {
    const std::string& from = r.vars->name(i);
    bool found = false;
    for (const auto& [src, dst] : spec) {
      if (src != from) continue;
      out.push_back(scaled_var(r, dst.first, Cyclo(dst.second)));
      found = true;
      break;
    }
    if (!found) throw std::logic_error("symmetry image missing for " + from);
  }
  return out;
}

}  // namespace

std::vector<Polynomial> chart_symmetry_phi(const Ring& chart) {
  return images_from(chart, {{"h", {"h", 1}},
                             {"c1", {"cm1", -1}},
                             {"c0", {"c0", 1}},
                             {"cm1", {"c1", -1}},
                             {"d1", {"dm1", -1}},
                             {"d0", {"d0", 1}},
                             {"dm1", {"d1", -1}},
                             {"z2", {"zm2", -1}},
                             {"z1", {"zm1", 1}},
                             {"z0", {"z0", -1}},
                             {"zm1", {"z1", 1}},
                             {"zm2", {"z2", -1}}});
}

std::vector<Polynomial> chart_symmetry_tau(const Ring& chart) {
  // On a charge-s generator the swap carries the sign (-1)^s, and the z's
  // pick up the extra central -1.
  return images_from(chart, {{"h", {"h", 1}},
                             {"c1", {"d1", -1}},
                             {"c0", {"d0", 1}},
                             {"cm1", {"dm1", -1}},
                             {"d1", {"c1", -1}},
                             {"d0", {"c0", 1}},
                             {"dm1", {"cm1", -1}},
                             {"z2", {"z2", -1}},
                             {"z1", {"z1", 1}},
                             {"z0", {"z0", -1}},
                             {"zm1", {"zm1", 1}},
                             {"zm2", {"zm2", -1}}});
}

std::vector<Polynomial> chart_symmetry_chi(const Ring& chart) {
  std::vector<Polynomial> out;
  Cyclo sg = Cyclo::sigma();
  for (size_t i = 0; i < chart.nvars(); ++i) {
    std::string n = chart.vars->name(i);
    Cyclo c(1);
    if (n[0] == 'c') c = sg;
    if (n[0] == 'd') c = sg * sg;
    out.push_back(scaled_var(chart, n, c));
  }
  return out;
}

Report verify_x24_syzygies(const Dataset& data) {
  Report rep;
  NamedExprs ids = data.load("chart_identities.txt", data.upstairs_env());
  const std::vector<long> ones(data.upstairs_ring().nvars(), 1);
  for (const std::string& tag : {std::string("syz1"), std::string("syz2")}) {
    FracPoly lhs = ids.frac(tag + "_lhs");
    FracPoly rhs = ids.frac(tag + "_rhs");
    if (lhs == rhs) {
      rep.note(tag + ": identity holds");
    } else {
      Polynomial diff = (lhs - rhs).num();
      rep.fail(tag + ": difference has lowest form " +
               diff.lowest_form(ones).to_string());
    }
  }
  return rep;
}

// The ratio ring of the (13,1) chart and its matrix, shared between the
// isomorphism and preimage checks.
namespace {

Ring x131_ring() {
  std::vector<std::string> names = {"h",    "A1",   "f44",  "f93",
                                    "f93p", "f142", "f191", "f240"};
  return Ring::make(VarTable(names, std::vector<long>(names.size(), 1)),
                    MonomialOrder::grevlex(names.size()));
}

std::array<std::array<Polynomial, 3>, 3> x131_matrix(const Dataset& data,
                                                     const Ring& ring) {
  NamedExprs m = data.load("chart_x131_matrix.txt", ParseEnv{ring, {}, {}});
  auto at = [&](int i, int j) {
    return m.poly("m" + std::to_string(i + 1) + std::to_string(j + 1));
  };
  return {{{at(0, 0), at(0, 1), at(0, 2)},
           {at(1, 0), at(1, 1), at(1, 2)},
           {at(2, 0), at(2, 1), at(2, 2)}}};
}

std::vector<Polynomial> x131_minors(
    const std::array<std::array<Polynomial, 3>, 3>& m) {
  std::vector<Polynomial> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r1 = (i + 1) % 3, r2 = (i + 2) % 3;
      int c1 = (j + 1) % 3, c2 = (j + 2) % 3;
      if (r1 > r2) std::swap(r1, r2);
      if (c1 > c2) std::swap(c1, c2);
      out.push_back(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
    }
  return out;
}

// The eight ratio coordinates (and h, A1) as upstairs fractions over R131.
std::vector<FracPoly> x131_images(const Dataset& data, const Ring& ring) {
  auto base = std::make_shared<Polynomial>(data.locus_generators().poly("R131"));
  std::vector<FracPoly> images;
  for (size_t i = 0; i < ring.nvars(); ++i) {
    std::string n = ring.vars->name(i);
    if (n == "h" || n == "A1") {
      images.emplace_back(data.ambient_generators().poly(n), 0, base);
    } else {
      std::string loc = "R" + n.substr(1);  // f142 -> R142, f93p -> R93p
      images.emplace_back(data.locus_generators().poly(loc), 1, base);
    }
  }
  return images;
}

}  // namespace

Report verify_a2_isomorphism(const Dataset& data) {
  Report rep;
  Ring ring = x131_ring();
  auto m = x131_matrix(data, ring);

  Polynomial trace = m[0][0] + m[1][1] + m[2][2];
  if (trace.is_zero())
    rep.note("trace: zero");
  else
    rep.fail("trace: " + trace.to_string());

  std::vector<FracPoly> images = x131_images(data, ring);
  auto minors = x131_minors(m);
  for (size_t t = 0; t < minors.size(); ++t) {
    FracPoly v = substitute_frac(minors[t], images);
    if (v.is_zero())
      rep.note("minor " + std::to_string(t + 1) + ": vanishes on the chart");
    else
      rep.fail("minor " + std::to_string(t + 1) + ": nonzero");
  }

  auto base = std::make_shared<Polynomial>(data.locus_generators().poly("R131"));
  NamedExprs f = data.load("chart_x131_factors.txt", data.upstairs_env());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FracPoly lhs = substitute_frac(m[i][j], images);
      FracPoly rhs(f.poly("col" + std::to_string(i + 1)) *
                       f.poly("row" + std::to_string(j + 1)),
                   1, base);
      if (lhs == rhs) continue;
      rep.fail("rank-one identity fails at entry (" + std::to_string(i + 1) +
               "," + std::to_string(j + 1) + ")");
    }
  if (rep.ok()) rep.note("rank-one factorization: all nine entries match");
  return rep;
}

namespace {

Ring x93_ring() {
  std::vector<std::string> names = {"a", "b", "c", "d", "e"};
  return Ring::make(VarTable(names, std::vector<long>(names.size(), 1)),
                    MonomialOrder::grevlex(names.size()));
}

}  // namespace

Report verify_x93(const Dataset& data, const GroebnerOptions& opt) {
  Report rep;
  Ring ring = x93_ring();
  NamedExprs chart = data.load("chart_x93.txt", ParseEnv{ring, {}, {}});
  NamedExprs dict = data.load("chart_x93_upstairs.txt", data.upstairs_env("R93"));
  Polynomial rel = chart.poly("rel");

  std::vector<FracPoly> images;
  for (const char* n : {"a", "b", "c", "d", "e"}) images.push_back(dict.frac(n));

  if (substitute_frac(rel, images).is_zero())
    rep.note("relation: holds upstairs after clearing the denominator");
  else
    rep.fail("relation: nonzero upstairs");

  auto base = std::make_shared<Polynomial>(data.locus_generators().poly("R93"));
  FracPoly h_up(data.ambient_generators().poly("h"), 0, base);
  FracPoly a1_up(data.ambient_generators().poly("A1"), 0, base);
  if (substitute_frac(chart.poly("hexpr"), images) == h_up)
    rep.note("hexpr: matches h upstairs");
  else
    rep.fail("hexpr: does not match h upstairs");
  if (substitute_frac(chart.poly("a1expr"), images) == a1_up)
    rep.note("a1expr: matches the first degree-6 generator upstairs");
  else
    rep.fail("a1expr: mismatch upstairs");

  bool through_origin = true;
  for (const Term& t : rel.terms())
    if (t.mono.is_one()) through_origin = false;
  if (through_origin)
    rep.note("origin: lies on the hypersurface");
  else
    rep.fail("origin: relation has a constant term");

  try {
    if (jacobian_smoothness(ring, {rel}, 1, opt))
      rep.note("jacobian criterion: unit ideal, chart is smooth");
    else
      rep.fail("jacobian criterion: singular locus is nonempty");
  } catch (const BudgetExceeded& e) {
    rep.inconclusive(std::string("jacobian criterion: ") + e.what());
  }
  return rep;
}

Report verify_isolatedness_yogh(const Dataset& data,
                                const GroebnerOptions& opt) {
  Report rep;
  const Ring& ring = data.chart_ring();
  std::vector<Polynomial> gens = data.chart_relations().polys();
  const NamedExprs& expr = data.chart_expressions();
  std::vector<std::string> boundary, ambient;
  for (const std::string& n : expr.names())
    (n[0] == 'k' ? boundary : ambient).push_back(n);
  for (const std::string& n : boundary) gens.push_back(expr.poly(n));

  try {
    GroebnerBasis gb = GroebnerBasis::compute(ring, gens, opt);
    if (gb.is_unit_ideal()) {
      rep.fail("combined ideal is the unit ideal; the locus is empty");
      return rep;
    }
    rep.note("combined ideal proper with " + std::to_string(boundary.size()) +
             " boundary ratios adjoined");
  } catch (const BudgetExceeded& e) {
    rep.inconclusive(std::string("combined ideal: ") + e.what());
    return rep;
  }

  for (const std::string& n : ambient) {
    try {
      if (in_radical(ring, gens, expr.poly(n), opt))
        rep.note(n + ": in the radical");
      else
        rep.fail(n + ": not in the radical");
    } catch (const BudgetExceeded& e) {
      rep.inconclusive(n + ": " + e.what());
    }
  }
  return rep;
}

Report verify_preimage_dimensions(const Dataset& data,
                                  const GroebnerOptions& opt) {
  Report rep;
  auto dim_check = [&](const std::string& label, const Ring& ring,
                       std::vector<Polynomial> gens) {
    try {
      GroebnerBasis gb = GroebnerBasis::compute(ring, std::move(gens), opt);
      long d = krull_dimension(gb);
      if (d <= 2)
        rep.note(label + ": dimension " + std::to_string(d));
      else
        rep.fail(label + ": dimension " + std::to_string(d) + " exceeds 2");
    } catch (const BudgetExceeded& e) {
      rep.inconclusive(label + ": " + e.what());
    }
  };

  {
    // Free chart: two coordinates of a rank-4 polynomial ring.
    Ring free4 = Ring::make(VarTable({"A1", "C2", "u131", "u191"},
                                     {1, 1, 1, 1}),
                            MonomialOrder::grevlex(4));
    ParseEnv env{free4, {}, {}};
    dim_check("free chart", free4,
              {parse_fracpoly(env, "A1").num(), parse_fracpoly(env, "C2").num()});
  }
  {
    Ring ring = x131_ring();
    auto m = x131_matrix(data, ring);
    std::vector<Polynomial> gens = x131_minors(m);
    ParseEnv env{ring, {}, {}};
    gens.push_back(parse_fracpoly(env, "h").num());
    gens.push_back(parse_fracpoly(env, "A1").num());
    dim_check("matrix chart", ring, std::move(gens));
  }
  {
    Ring ring = x93_ring();
    NamedExprs chart = data.load("chart_x93.txt", ParseEnv{ring, {}, {}});
    dim_check("hypersurface chart", ring,
              {chart.poly("rel"), chart.poly("hexpr"), chart.poly("a1expr")});
  }
  {
    std::vector<Polynomial> gens = data.chart_relations().polys();
    ParseEnv env{data.chart_ring(), {}, {}};
    gens.push_back(parse_fracpoly(env, "h").num());
    gens.push_back(parse_fracpoly(env, "z0").num());
    dim_check("singular chart", data.chart_ring(), std::move(gens));
  }
  return rep;
}

namespace {

std::vector<Polynomial> apply_images(const std::vector<Polynomial>& gens,
                                     const Ring& ring,
                                     const std::vector<Polynomial>& images) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) out.push_back(g.substitute(ring, images));
  return out;
}

bool same_ideal(const Ring& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b, const GroebnerOptions& opt) {
  GroebnerBasis ga = GroebnerBasis::compute(ring, a, opt);
  GroebnerBasis gb = GroebnerBasis::compute(ring, b, opt);
  return ga.gens() == gb.gens();
}

}  // namespace

Report verify_ideal_j_and_chart(const Dataset& data,
                                const GroebnerOptions& opt) {
  Report rep;
  const Ring& ring = data.chart_ring();
  NamedExprs file = data.load("chart_ideal_J.txt", ParseEnv{ring, {}, {}});
  std::vector<Polynomial> J1 = file.polys();

  const std::vector<long>& w = ring.vars->weights();
  std::vector<long> expected = {4, 6, 6, 6, 8, 8};
  for (size_t i = 0; i < J1.size(); ++i) {
    if (!J1[i].is_homogeneous(w)) {
      rep.fail(file.names()[i] + ": not homogeneous for the chart weights");
      continue;
    }
    long d = J1[i].weighted_degree(w);
    if (d == expected[i])
      rep.note(file.names()[i] + ": weighted degree " + std::to_string(d));
    else
      rep.fail(file.names()[i] + ": weighted degree " + std::to_string(d));
  }

  auto phi = chart_symmetry_phi(ring);
  auto chi = chart_symmetry_chi(ring);
  auto tau = chart_symmetry_tau(ring);
  std::vector<std::vector<Polynomial>> orbit;
  orbit.push_back(J1);                                // J1
  orbit.push_back(apply_images(J1, ring, phi));       // J2
  orbit.push_back(apply_images(J1, ring, chi));       // J3
  orbit.push_back(apply_images(orbit[2], ring, phi)); // J4
  orbit.push_back(apply_images(orbit[2], ring, chi)); // J5
  orbit.push_back(apply_images(orbit[4], ring, phi)); // J6

  try {
    std::vector<GroebnerBasis> bases;
    for (const auto& gens : orbit)
      bases.push_back(GroebnerBasis::compute(ring, gens, opt));
    size_t distinct = 0;
    for (size_t i = 0; i < bases.size(); ++i) {
      bool fresh = true;
      for (size_t j = 0; j < i; ++j)
        if (bases[i].gens() == bases[j].gens()) fresh = false;
      if (fresh) ++distinct;
    }
    if (distinct == 6)
      rep.note("orbit: six pairwise distinct ideals");
    else
      rep.fail("orbit: only " + std::to_string(distinct) +
               " distinct ideals");

    // Closure of the orbit under all three symmetries.
    bool closed = true;
    auto member = [&](const std::vector<Polynomial>& gens) {
      GroebnerBasis g = GroebnerBasis::compute(ring, gens, opt);
      for (const auto& b : bases)
        if (g.gens() == b.gens()) return true;
      return false;
    };
    for (const auto& gens : orbit) {
      if (!member(apply_images(gens, ring, phi)) ||
          !member(apply_images(gens, ring, chi)) ||
          !member(apply_images(gens, ring, tau)))
        closed = false;
    }
    if (closed)
      rep.note("orbit: closed under the order-12 symmetry group");
    else
      rep.fail("orbit: not closed under the symmetries");

    if (!same_ideal(ring, apply_images(orbit[1], ring, phi), J1, opt))
      rep.fail("involution does not return the second ideal to the first");
  } catch (const BudgetExceeded& e) {
    rep.inconclusive(std::string("orbit bookkeeping: ") + e.what());
  }

  std::vector<Polynomial> rels = data.chart_relations().polys();
  for (size_t i = 0; i < orbit.size(); ++i) {
    std::vector<Polynomial> gens = rels;
    for (const Polynomial& g : orbit[i]) gens.push_back(g);
    try {
      GroebnerBasis gb = GroebnerBasis::compute(ring, gens, opt);
      long d = krull_dimension(gb);
      if (d == 3)
        rep.note("divisor " + std::to_string(i + 1) + ": dimension 3");
      else
        rep.fail("divisor " + std::to_string(i + 1) + ": dimension " +
                 std::to_string(d));
    } catch (const BudgetExceeded& e) {
      rep.inconclusive("divisor " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace symsing
