#include "symsing/dataset.hpp"

namespace symsing {

static Ring make_upstairs() {
  VarTable t({"x", "y", "X", "Y"});
  t.set_bigrading({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  return Ring::make(std::move(t));
}

static Ring make_ambient() {
  return Ring::make(VarTable({"h", "A1", "A0", "Am1", "B1", "B0", "Bm1", "C2",
                              "C1", "C0", "Cm1", "Cm2"},
                             {2, 6, 6, 6, 8, 8, 8, 12, 12, 12, 12, 12}));
}

static Ring make_chart() {
  return Ring::make(VarTable({"h", "c1", "c0", "cm1", "d1", "d0", "dm1", "z2",
                              "z1", "z0", "zm1", "zm2"},
                             {2, 4, 4, 4, 4, 4, 4, 6, 6, 6, 6, 6}));
}

Dataset::Dataset(std::string dir)
    : dir_(std::move(dir)),
      upstairs_(make_upstairs()),
      ambient_(make_ambient()),
      chart_(make_chart()) {
  semi_ = load_named_exprs(path("semi_invariants.txt"),
                           ParseEnv{upstairs_, {}, {}});
  ambient_gens_ = load_named_exprs(path("g5_generators.txt"),
                                   ParseEnv{upstairs_, {}, semi_.resolver()});
  locus_gens_ = load_named_exprs(path("singular_locus.txt"),
                                 ParseEnv{upstairs_, {}, semi_.resolver()});
  ambient_rels_ =
      load_named_exprs(path("g5_relations.txt"), ParseEnv{ambient_, {}, {}});
  chart_rels_ =
      load_named_exprs(path("yogh_relations.txt"), ParseEnv{chart_, {}, {}});
  chart_fracs_ =
      load_named_exprs(path("yogh_generators.txt"), upstairs_env("R44"));
  chart_exprs_ = load_named_exprs(path("chart_expressions.txt"),
                                  ParseEnv{chart_, {}, {}});
}

ParseEnv Dataset::upstairs_env(const std::string& base_name) const {
  std::shared_ptr<const Polynomial> base;
  if (!base_name.empty())
    base = std::make_shared<Polynomial>(locus_gens_.poly(base_name));
  auto chain =
      locus_gens_.resolver(ambient_gens_.resolver(semi_.resolver()));
  return ParseEnv{upstairs_, base, chain};
}

NamedExprs Dataset::load(const std::string& name, const ParseEnv& env) const {
  return load_named_exprs(path(name), env);
}

std::vector<FracPoly> Dataset::chart_generator_list() const {
  std::vector<FracPoly> out;
  for (size_t i = 0; i < chart_.nvars(); ++i) {
    std::string n = chart_.vars->name(i);
    if (n == "h")
      out.push_back(ambient_gens_.frac("h"));
    else
      out.push_back(chart_fracs_.frac(n));
  }
  return out;
}

Matrix group_gen_a() {
  return {{Cyclo::i(), Cyclo(0)}, {Cyclo(0), -Cyclo::i()}};
}

Matrix group_gen_b() {
  return {{Cyclo(0), Cyclo(1)}, {Cyclo(-1), Cyclo(0)}};
}

Matrix group_gen_c() {
  Cyclo s = Cyclo::zeta_power(1) * Cyclo::sqrt2().inverse();
  return {{s, -s}, {s * Cyclo::i(), s * Cyclo::i()}};
}

Matrix group_gen_d() {
  Cyclo sg = Cyclo::zeta_power(8);
  return {{sg, Cyclo(0)}, {Cyclo(0), sg}};
}

const GroupTable& group72() {
  static GroupTable g = GroupTable::generate({{"a", group_gen_a()},
                                              {"b", group_gen_b()},
                                              {"c", group_gen_c()},
                                              {"d", group_gen_d()}});
  return g;
}

}  // namespace symsing
