#include <doctest.h>

#include <deque>
#include <filesystem>
#include <fstream>
#include <random>

#include "symsing/groebner.hpp"

using namespace symsing;

namespace {

// Independent fixture: plain Buchberger with no pair criteria and a separate
// reduction code path, for cross-checking the production engine on small
// inputs. Reduced bases are unique, so results must match exactly.
Polynomial oracle_nf(Polynomial p, const std::vector<Polynomial>& basis, size_t skip = SIZE_MAX) {
  Polynomial out = Polynomial::from_terms(p.vars(), p.ord(), {});
  while (!p.is_zero()) {
    bool hit = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].is_zero()) continue;
      auto m = Monomial::div(p.lead_mono(), basis[k].lead_mono());
      if (!m) continue;
      Polynomial shift = Polynomial::from_terms(p.vars(), p.ord(), {{*m, p.lead_coef()}});
      p = p - shift * basis[k];
      hit = true;
      break;
    }
    if (!hit) {
      Polynomial lead = Polynomial::from_terms(p.vars(), p.ord(), {p.lead()});
      out = out + lead;
      p = p - lead;
    }
  }
  return out;
}

std::vector<Polynomial> oracle_groebner(const Ring& r, std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial h = g.with_order(r.ord);
    h.make_monic();
    basis.push_back(h);
  }
  std::deque<std::pair<size_t, size_t>> todo;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) todo.emplace_back(i, j);
  while (!todo.empty()) {
    auto [i, j] = todo.front();
    todo.pop_front();
    Monomial m = Monomial::lcm(basis[i].lead_mono(), basis[j].lead_mono());
    Polynomial si = Polynomial::from_terms(r.vars, r.ord,
                                           {{*Monomial::div(m, basis[i].lead_mono()), Cyclo(1)}});
    Polynomial sj = Polynomial::from_terms(r.vars, r.ord,
                                           {{*Monomial::div(m, basis[j].lead_mono()), Cyclo(1)}});
    Polynomial s = si * basis[i] - sj * basis[j];
    Polynomial h = oracle_nf(s, basis);
    if (h.is_zero()) continue;
    h.make_monic();
    for (size_t k = 0; k < basis.size(); ++k) todo.emplace_back(k, basis.size());
    basis.push_back(h);
  }
  // minimalize and tail reduce
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lead_mono().divides(basis[i].lead_mono())) {
        if (basis[j].lead_mono() == basis[i].lead_mono() && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (size_t i = 0; i < minimal.size(); ++i) {
    Polynomial h = oracle_nf(minimal[i], minimal, i);
    h.make_monic();
    minimal[i] = h;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return r.ord->less(a.lead_mono(), b.lead_mono());
  });
  return minimal;
}

bool same_basis(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Post-hoc certificate that gb really is a basis of <gens>: every generator
// reduces to zero, and every S-polynomial of basis pairs reduces to zero.
bool certify(const GroebnerBasis& gb, const std::vector<Polynomial>& gens) {
  for (const Polynomial& g : gens)
    if (!gb.contains(g)) return false;
  const auto& B = gb.gens();
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = i + 1; j < B.size(); ++j) {
      Monomial m = Monomial::lcm(B[i].lead_mono(), B[j].lead_mono());
      Polynomial s = gb.ring().zero();
      s.add_scaled(Cyclo(1), *Monomial::div(m, B[i].lead_mono()), B[i]);
      s.add_scaled(Cyclo(-1), *Monomial::div(m, B[j].lead_mono()), B[j]);
      if (!gb.normal_form(s).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("groebner matches naive oracle on classic ideals") {
  SUBCASE("cyclic-3") {
    Ring r = Ring::make(VarTable({"x", "y", "zz"}));
    std::vector<Polynomial> gens{r.parse("x + y + zz"), r.parse("x*y + y*zz + zz*x"),
                                 r.parse("x*y*zz - 1")};
    auto gb = GroebnerBasis::compute(r, gens);
    CHECK(certify(gb, gens));
    CHECK(same_basis(gb.gens(), oracle_groebner(r, gens)));
    // the reduced grevlex basis is known in closed form
    REQUIRE(gb.gens().size() == 3);
    CHECK(gb.gens()[0] == r.parse("x + y + zz"));
    CHECK(gb.gens()[1] == r.parse("y^2 + y*zz + zz^2"));
    CHECK(gb.gens()[2] == r.parse("zz^3 - 1"));
  }
  SUBCASE("twisted cubic under lex") {
    Ring r = Ring::make(VarTable({"x", "y", "zz"}), MonomialOrder::lex(3));
    std::vector<Polynomial> gens{r.parse("x^2 - y"), r.parse("x^3 - zz")};
    auto gb = GroebnerBasis::compute(r, gens);
    CHECK(certify(gb, gens));
    CHECK(same_basis(gb.gens(), oracle_groebner(r, gens)));
    bool found = false;
    for (const Polynomial& g : gb.gens())
      if (g == r.parse("y^3 - zz^2")) found = true;
    CHECK(found);
  }
  SUBCASE("random small ideals") {
    Ring r = Ring::make(VarTable({"x", "y", "zz"}));
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> ex(0, 2);
    std::uniform_int_distribution<long> co(-3, 3);
    std::uniform_int_distribution<int> nt(1, 3);
    auto rand_poly = [&] {
      std::vector<Term> terms;
      int n = nt(rng);
      for (int k = 0; k < n; ++k) {
        Monomial m(3);
        for (size_t v = 0; v < 3; ++v) m.set_exp(v, ex(rng));
        terms.push_back({m, Cyclo(co(rng))});
      }
      return Polynomial::from_terms(r.vars, r.ord, std::move(terms));
    };
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Polynomial> gens{rand_poly(), rand_poly()};
      auto gb = GroebnerBasis::compute(r, gens);
      CHECK(certify(gb, gens));
      CHECK(same_basis(gb.gens(), oracle_groebner(r, gens)));
    }
  }
}

TEST_CASE("unit ideal detection") {
  Ring r = Ring::make(VarTable({"x", "y"}));
  auto gb = GroebnerBasis::compute(r, {r.parse("x"), r.parse("x + 1")});
  CHECK(gb.is_unit_ideal());
  CHECK(krull_dimension(gb) == -1);
  CHECK(gb.contains(r.parse("y^5 - 3")));

  auto zero = GroebnerBasis::compute(r, {r.zero()});
  CHECK(zero.gens().empty());
  CHECK(!zero.is_unit_ideal());
  CHECK(krull_dimension(zero) == 2);
}

TEST_CASE("membership and normal form") {
  Ring r = Ring::make(VarTable({"x", "y"}));
  std::vector<Polynomial> gens{r.parse("x^2 - y")};
  auto gb = GroebnerBasis::compute(r, gens);
  CHECK(gb.contains(r.parse("x^4 - y^2")));
  CHECK(gb.contains(r.parse("x^3 - x*y")));
  CHECK(!gb.contains(r.parse("x")));
  CHECK(!gb.contains(r.parse("x^2")));
  CHECK(gb.normal_form(r.parse("x^2")) == r.parse("y"));
  CHECK(gb.normal_form(r.parse("x^2 + x + 1")) == r.parse("y + x + 1"));

  // normal form is linear
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> co(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p = r.parse("x^3") * Cyclo(co(rng)) + r.parse("y^2 - x") * Cyclo(co(rng));
    Polynomial q = r.parse("x*y") * Cyclo(co(rng)) + r.one() * Cyclo(co(rng));
    CHECK(gb.normal_form(p + q) == gb.normal_form(p) + gb.normal_form(q));
  }
}

TEST_CASE("elimination") {
  Ring r = Ring::make(VarTable({"tt", "x", "y"}));
  // parametric curve x = tt^2, y = tt^3; implicit equation x^3 = y^2
  auto [small, polys] =
      eliminate(r, {r.parse("x - tt^2"), r.parse("y - tt^3")}, 1);
  CHECK(small.nvars() == 2);
  REQUIRE(polys.size() == 1);
  CHECK(polys[0] == small.parse("x^3 - y^2"));
}

TEST_CASE("saturation and radical membership") {
  Ring r = Ring::make(VarTable({"x", "y"}));
  // <x^2 y - x> : x^inf = <x y - 1>
  auto sat = saturate(r, {r.parse("x^2*y - x")}, r.parse("x"));
  auto gb = GroebnerBasis::compute(r, sat);
  REQUIRE(gb.gens().size() == 1);
  CHECK(gb.gens()[0] == r.parse("x*y - 1"));

  CHECK(in_radical(r, {r.parse("x^2")}, r.parse("x")));
  CHECK(!in_radical(r, {r.parse("x^2")}, r.parse("y")));
  CHECK(in_radical(r, {r.parse("x^2 + 2*x*y + y^2")}, r.parse("x + y")));
  CHECK(!in_radical(r, {r.parse("x*y")}, r.parse("x + y")));
}

TEST_CASE("ideal quotient") {
  Ring r = Ring::make(VarTable({"x", "y"}));
  // <xy, y^2> : y = <x, y>
  auto q = ideal_quotient(r, {r.parse("x*y"), r.parse("y^2")}, r.parse("y"));
  auto gb = GroebnerBasis::compute(r, q);
  REQUIRE(gb.gens().size() == 2);
  CHECK(gb.gens()[0] == r.parse("y"));
  CHECK(gb.gens()[1] == r.parse("x"));

  // a nonzerodivisor leaves the ideal unchanged
  std::vector<Polynomial> gens{r.parse("x^2 - y")};
  auto q2 = ideal_quotient(r, gens, r.parse("y"));
  auto gb_i = GroebnerBasis::compute(r, gens);
  auto gb_q = GroebnerBasis::compute(r, q2);
  CHECK(same_basis(gb_i.gens(), gb_q.gens()));
}

TEST_CASE("krull dimension") {
  Ring r3 = Ring::make(VarTable({"x", "y", "zz"}));
  CHECK(krull_dimension(GroebnerBasis::compute(r3, {})) == 3);
  CHECK(krull_dimension(GroebnerBasis::compute(r3, {r3.parse("x*y")})) == 2);
  CHECK(krull_dimension(GroebnerBasis::compute(
            r3, {r3.parse("y - x^2"), r3.parse("zz - x^3")})) == 1);
  CHECK(krull_dimension(GroebnerBasis::compute(
            r3, {r3.parse("x"), r3.parse("y"), r3.parse("zz")})) == 0);
  Ring r2 = Ring::make(VarTable({"x", "y"}));
  CHECK(krull_dimension(GroebnerBasis::compute(r2, {r2.parse("x")})) == 1);
  CHECK(krull_dimension(GroebnerBasis::compute(r2, {r2.parse("x^2 + y^2")})) == 1);
}

TEST_CASE("hilbert series against direct monomial counting") {
  auto expand = [](const HilbertSeries& hs, long D) {
    // power series coefficients of num / prod (1 - t^w) up to degree D
    UniPoly acc = hs.num;
    for (long w : hs.den) {
      UniPoly geo;
      std::vector<Cyclo> cs(static_cast<size_t>(D) + 1);
      for (long k = 0; k * w <= D; ++k) cs[static_cast<size_t>(k * w)] = Cyclo(1);
      geo = UniPoly::from_coeffs(std::move(cs));
      acc = acc * geo;
    }
    std::vector<long> out;
    for (long d = 0; d <= D; ++d) {
      auto c = acc.coeff(d).as_rational();
      REQUIRE(c.has_value());
      out.push_back(static_cast<long>(c->get_num().get_si()));
    }
    return out;
  };
  auto count_standard = [](const GroebnerBasis& gb, long D) {
    const size_t n = gb.ring().nvars();
    const auto& w = gb.ring().vars->weights();
    std::vector<long> counts(static_cast<size_t>(D) + 1, 0);
    std::vector<int32_t> e(n, 0);
    // depth first over exponent boxes bounded by weighted degree
    auto rec = [&](auto&& self, size_t v, long deg) -> void {
      if (deg > D) return;
      if (v == n) {
        Monomial m(n);
        for (size_t k = 0; k < n; ++k) m.set_exp(k, e[k]);
        for (const Polynomial& g : gb.gens())
          if (g.lead_mono().divides(m)) return;
        ++counts[static_cast<size_t>(deg)];
        return;
      }
      for (int32_t x = 0;; ++x) {
        e[v] = x;
        long nd = deg + x * w[v];
        if (nd > D) break;
        self(self, v + 1, nd);
      }
      e[v] = 0;
    };
    rec(rec, 0, 0);
    return counts;
  };

  SUBCASE("standard weights") {
    Ring r = Ring::make(VarTable({"x", "y"}));
    auto gb = GroebnerBasis::compute(r, {r.parse("x^2"), r.parse("x*y")});
    HilbertSeries hs = hilbert_series(gb);
    CHECK(expand(hs, 8) == count_standard(gb, 8));
  }
  SUBCASE("nontrivial weights") {
    Ring r = Ring::make(VarTable({"x", "y", "zz"}, {2, 3, 4}));
    auto gb = GroebnerBasis::compute(
        r, {r.parse("x^2*y"), r.parse("y^2 + x^3"), r.parse("zz*x")});
    HilbertSeries hs = hilbert_series(gb);
    CHECK(expand(hs, 16) == count_standard(gb, 16));
  }
  SUBCASE("random monomial ideals") {
    std::mt19937_64 rng(845);
    std::uniform_int_distribution<int> ex(0, 3);
    std::uniform_int_distribution<long> wdist(1, 3);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<long> w{wdist(rng), wdist(rng), wdist(rng)};
      Ring r = Ring::make(VarTable({"x", "y", "zz"}, w));
      std::vector<Polynomial> gens;
      for (int k = 0; k < 4; ++k) {
        Monomial m(3);
        for (size_t v = 0; v < 3; ++v) m.set_exp(v, ex(rng));
        if (m.is_one()) continue;
        gens.push_back(Polynomial::from_terms(r.vars, r.ord, {{m, Cyclo(1)}}));
      }
      auto gb = GroebnerBasis::compute(r, gens);
      HilbertSeries hs = hilbert_series(gb);
      CHECK(expand(hs, 12) == count_standard(gb, 12));
    }
  }
  SUBCASE("full ring and zero quotient") {
    Ring r = Ring::make(VarTable({"x", "y"}));
    auto free_ring = hilbert_series(GroebnerBasis::compute(r, {}));
    CHECK(free_ring.num == UniPoly(Cyclo(1)));
    auto unit = hilbert_series(GroebnerBasis::compute(r, {r.one()}));
    CHECK(unit.num.is_zero());
  }
}

TEST_CASE("budget exhaustion is reported") {
  Ring r = Ring::make(VarTable({"x", "y", "zz", "w"}));
  std::vector<Polynomial> gens{r.parse("x + y + zz + w"), r.parse("x*y + y*zz + zz*w + w*x"),
                               r.parse("x*y*zz + y*zz*w + zz*w*x + w*x*y"),
                               r.parse("x*y*zz*w - 1")};
  GroebnerOptions tiny;
  tiny.max_steps = 5;
  CHECK_THROWS_AS(GroebnerBasis::compute(r, gens, tiny), BudgetExceeded);
  // the same computation succeeds with the default budget
  auto gb = GroebnerBasis::compute(r, gens);
  CHECK(gb.stats().steps > 5);
  CHECK(certify(gb, gens));
  CHECK(same_basis(gb.gens(), oracle_groebner(r, gens)));
}

TEST_CASE("inject and project") {
  Ring small = Ring::make(VarTable({"x", "y"}));
  Ring big = Ring::make(VarTable({"tt", "x", "y"}));
  Polynomial p = small.parse("x^2 - 3*y");
  Polynomial q = inject(p, big, 1);
  CHECK(q == big.parse("x^2 - 3*y"));
  auto back = project(q, small, 1);
  REQUIRE(back.has_value());
  CHECK(*back == p);
  CHECK(!project(big.parse("tt*x"), small, 1).has_value());
  CHECK_THROWS_AS(inject(p, big, 0), std::invalid_argument);
}

TEST_CASE("basis cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "symsing-gb-cache-test";
  fs::remove_all(dir);
  GBCache cache(dir);
  Ring r = Ring::make(VarTable({"x", "y", "zz"}));
  std::vector<Polynomial> gens{r.parse("x + y + zz"), r.parse("x*y + y*zz + zz*x"),
                               r.parse("x*y*zz - 1")};
  GroebnerOptions opt;
  opt.cache = &cache;
  auto first = GroebnerBasis::compute(r, gens, opt);
  CHECK(!first.stats().from_cache);
  auto second = GroebnerBasis::compute(r, gens, opt);
  CHECK(second.stats().from_cache);
  CHECK(same_basis(first.gens(), second.gens()));
  // generator order must not matter for the cache key
  std::vector<Polynomial> shuffled{gens[2], gens[0], gens[1]};
  auto third = GroebnerBasis::compute(r, shuffled, opt);
  CHECK(third.stats().from_cache);
  // corrupt the stored file: the cache must fall back to recomputing
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream out(entry.path());
    out << "garbage";
  }
  auto fourth = GroebnerBasis::compute(r, gens, opt);
  CHECK(!fourth.stats().from_cache);
  CHECK(same_basis(first.gens(), fourth.gens()));
  fs::remove_all(dir);
}
