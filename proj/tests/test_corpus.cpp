#include <array>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "symsing/corpus.hpp"
#include "symsing/linalg.hpp"
#include "symsing/reflgroup.hpp"

using namespace symsing;
using namespace fixtures;

namespace {

Matrix lift(const Matrix& m2) { return cotangent_lift(m2); }

Cyclo sigma_pow(long k) { return Cyclo::zeta_power(8).pow(((k % 3) + 3) % 3); }

}  // namespace

TEST_CASE("eigenvector polynomials: bidegrees and base subgroup invariance") {
  const NamedExprs& semi = semi_invariants();
  REQUIRE(semi.names().size() == 13);
  const std::vector<std::pair<std::string, std::array<long, 2>>> want = {
      {"F11", {1, 1}}, {"F40", {4, 0}}, {"F31", {3, 1}}, {"G22", {2, 2}},
      {"F13", {1, 3}}, {"F04", {0, 4}}, {"F60", {6, 0}}, {"G51", {5, 1}},
      {"G42", {4, 2}}, {"F33", {3, 3}}, {"G24", {2, 4}}, {"G15", {1, 5}},
      {"F06", {0, 6}}};
  GroupTable q8 = GroupTable::generate({{"a", gen_a()}, {"b", gen_b()}});
  REQUIRE(q8.order() == 8);
  std::vector<Matrix> q8lift = cotangent_lifts(q8.elements());
  for (const auto& [name, bd] : want) {
    Polynomial p = semi.poly(name);
    CHECK(p.is_bihomogeneous());
    CHECK(p.bidegree() == bd);
    for (const Matrix& m : q8lift) CHECK(dual_action(p, m) == p);
  }
}

TEST_CASE("eigenvalue table under the two order-3 generators") {
  const NamedExprs& semi = semi_invariants();
  Matrix lc = lift(gen_c());
  Matrix lcbar = lift(mat_conj(gen_c()));
  Matrix ld = lift(gen_d());

  // (name, conjugate coefficients?, c exponent, cbar exponent). Eigenvalues
  // are stated for dual_action; swapping to the opposite composition
  // convention would conjugate both columns at once. The pair partition
  // into nine joint eigenspace cells is convention independent.
  struct Row {
    const char* name;
    bool conj;
    long c, cbar;
  };
  const std::vector<Row> table = {
      {"F11", false, 0, 0}, {"F60", false, 0, 0}, {"F33", false, 0, 0},
      {"F06", false, 0, 0}, {"F40", true, 2, 0},  {"F13", true, 2, 0},
      {"F31", true, 1, 0},  {"F04", true, 1, 0},  {"F40", false, 0, 1},
      {"F13", false, 0, 1}, {"G42", false, 2, 1}, {"G15", false, 2, 1},
      {"G22", true, 1, 1},  {"F31", false, 0, 2}, {"F04", false, 0, 2},
      {"G22", false, 2, 2}, {"G51", false, 1, 2}, {"G24", false, 1, 2}};
  CHECK(table.size() == 18);
  for (const Row& row : table) {
    Polynomial p = semi.poly(row.name);
    if (row.conj) p = p.conj_coeffs();
    CHECK(dual_action(p, lc) == p * sigma_pow(row.c));
    CHECK(dual_action(p, lcbar) == p * sigma_pow(row.cbar));
    // The scalar generator sees only the bidegree.
    auto bd = p.bidegree();
    CHECK(dual_action(p, ld) == p * sigma_pow(bd[1] - bd[0]));
  }
  // Intrinsic consistency: conjugating coefficients intertwines the actions
  // of the two order-3 elements, so the columns determine each other.
  for (const Row& row : table) {
    if (row.conj) continue;
    Polynomial p = semi.poly(row.name);
    CHECK(dual_action(p.conj_coeffs(), lc) ==
          dual_action(p, lcbar).conj_coeffs());
    CHECK(dual_action(p.conj_coeffs(), lcbar) ==
          dual_action(p, lc).conj_coeffs());
  }
}

TEST_CASE("invariant generators: real, invariant, graded as advertised") {
  const NamedExprs& gens = ambient_generators();
  REQUIRE(gens.names().size() == 12);
  const std::vector<std::pair<std::string, std::array<long, 2>>> grading = {
      {"h", {1, 1}},   {"A1", {6, 0}},  {"A0", {3, 3}},   {"Am1", {0, 6}},
      {"B1", {7, 1}},  {"B0", {4, 4}},  {"Bm1", {1, 7}},  {"C2", {12, 0}},
      {"C1", {9, 3}},  {"C0", {6, 6}},  {"Cm1", {3, 9}},  {"Cm2", {0, 12}}};
  std::vector<Matrix> gen_lifts = {lift(gen_a()), lift(gen_b()),
                                   lift(gen_c()), lift(gen_d())};
  for (const auto& [name, bd] : grading) {
    Polynomial p = gens.poly(name);
    CHECK_FALSE(p.is_zero());
    for (const Term& t : p.terms()) CHECK(t.coef.is_real());
    CHECK(p.is_bihomogeneous());
    CHECK(p.bidegree() == bd);
    // Total degree upstairs matches the weight of the abstract variable.
    long wt = ambient_ring().vars->weight(*ambient_ring().vars->index_of(name));
    CHECK(bd[0] + bd[1] == wt);
    for (const Matrix& m : gen_lifts) CHECK(dual_action(p, m) == p);
  }
  // Full-orbit invariance spot check on the quadratic generator.
  GroupTable g = group72();
  Polynomial h = gens.poly("h");
  for (const Matrix& m : cotangent_lifts(g.elements()))
    CHECK(dual_action(h, m) == h);
}

TEST_CASE("ambient relations are graded and vanish under substitution") {
  const NamedExprs& rels = ambient_relations();
  REQUIRE(rels.names().size() == 35);
  std::vector<Polynomial> images;
  for (const auto& name : {"h", "A1", "A0", "Am1", "B1", "B0", "Bm1", "C2",
                           "C1", "C0", "Cm1", "Cm2"})
    images.push_back(ambient_generators().poly(name));
  for (const auto& name : rels.names()) {
    Polynomial rel = rels.poly(name);
    CHECK(rel.is_homogeneous(ambient_ring().vars->weights()));
    Polynomial value = rel.substitute(upstairs_ring(), images);
    CHECK(value.is_zero());
  }
  // Detectability control: a graded perturbation does not vanish.
  Polynomial bad = rels.poly("rel01") + ambient_ring().parse("h^6");
  CHECK_FALSE(bad.substitute(upstairs_ring(), images).is_zero());
}

TEST_CASE("locus generators: bidegrees, invariance, plane vanishing") {
  const NamedExprs& locus = locus_generators();
  REQUIRE(locus.names().size() == 15);
  const std::vector<std::pair<std::string, std::array<long, 2>>> grading = {
      {"R44", {4, 4}},   {"R93", {9, 3}},   {"R93p", {9, 3}},
      {"R66", {6, 6}},   {"R66p", {6, 6}},  {"R39", {3, 9}},
      {"R39p", {3, 9}},  {"R131", {13, 1}}, {"R113", {1, 13}},
      {"R142", {14, 2}}, {"R214", {2, 14}}, {"R191", {19, 1}},
      {"R119", {1, 19}}, {"R240", {24, 0}}, {"R024", {0, 24}}};
  std::vector<Matrix> gen_lifts = {lift(gen_a()), lift(gen_b()),
                                   lift(gen_c()), lift(gen_d())};
  for (const auto& [name, bd] : grading) {
    Polynomial p = locus.poly(name);
    CHECK_FALSE(p.is_zero());
    CHECK(p.is_bihomogeneous());
    CHECK(p.bidegree() == bd);
    for (const Matrix& m : gen_lifts) CHECK(dual_action(p, m) == p);
  }

  // Restriction to each reflection's fixed plane is identically zero; that is
  // exactly "the locus contains the image of every fixed plane".
  GroupTable g = group72();
  std::vector<Matrix> lifted = cotangent_lifts(g.elements());
  std::vector<size_t> refl = rank_two_motion_indices(lifted);
  REQUIRE(refl.size() == 16);
  Ring st = Ring::make(VarTable({"s", "t"}));
  Polynomial h = ambient_generators().poly("h");
  size_t planes_where_h_lives = 0;
  for (size_t k : refl) {
    auto basis = kernel_basis(mat_sub(lifted[k], identity_matrix(4)));
    REQUIRE(basis.size() == 2);
    std::vector<Polynomial> par;
    for (size_t xi = 0; xi < 4; ++xi)
      par.push_back(st.var(0) * basis[0][xi] + st.var(1) * basis[1][xi]);
    for (const auto& name : locus.names())
      CHECK(locus.poly(name).substitute(st, par).is_zero());
    if (!h.substitute(st, par).is_zero()) ++planes_where_h_lives;
    // Control: a same-bidegree perturbation of R44 fails the vanishing.
    Polynomial bad = locus.poly("R44") + h * h * h * h;
    if (k == refl.front()) CHECK_FALSE(bad.substitute(st, par).is_zero());
  }
  // The quadratic invariant does not vanish on the planes, so the locus is
  // not simply the zero set of h.
  CHECK(planes_where_h_lives == 16);
}
