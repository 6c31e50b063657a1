#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symsing/corpus.hpp"
#include "symsing/poly.hpp"
#include "symsing/reflgroup.hpp"

namespace symsing {

// The definitions corpus as one loaded object: the rank-2 reflection group
// data, the rings the files live in, and the named-expression files with
// cross-file resolution wired the way the files expect. Loading is eager so
// a broken corpus fails at construction with the offending file named.
class Dataset {
 public:
  explicit Dataset(std::string dir);

  const std::string& dir() const { return dir_; }
  std::string path(const std::string& name) const { return dir_ + "/" + name; }

  // C[x,y,X,Y] with bidegree (1,0) on x,y and (0,1) on X,Y.
  const Ring& upstairs_ring() const { return upstairs_; }
  // Abstract target ring of the twelve invariant generators.
  const Ring& ambient_ring() const { return ambient_; }
  // Abstract target ring of the twelve chart generators.
  const Ring& chart_ring() const { return chart_; }

  const NamedExprs& semi_invariants() const { return semi_; }
  const NamedExprs& ambient_generators() const { return ambient_gens_; }
  const NamedExprs& locus_generators() const { return locus_gens_; }
  const NamedExprs& ambient_relations() const { return ambient_rels_; }
  const NamedExprs& chart_relations() const { return chart_rels_; }
  // Chart generators as fractions over the degree-(4,4) locus generator.
  const NamedExprs& chart_fractions() const { return chart_fracs_; }
  // Ambient generators and deep locus ratios rewritten in chart coordinates.
  const NamedExprs& chart_expressions() const { return chart_exprs_; }

  // The twelve chart generators in chart_ring order, as upstairs fractions.
  std::vector<FracPoly> chart_generator_list() const;

  // Parse environment for a corpus file over the upstairs ring, resolving
  // locus, ambient and eigenvector names, optionally over a locus base.
  ParseEnv upstairs_env(const std::string& base_name = {}) const;

  // Named expressions from an additional corpus file.
  NamedExprs load(const std::string& name, const ParseEnv& env) const;

 private:
  std::string dir_;
  Ring upstairs_;
  Ring ambient_;
  Ring chart_;
  NamedExprs semi_;
  NamedExprs ambient_gens_;
  NamedExprs locus_gens_;
  NamedExprs ambient_rels_;
  NamedExprs chart_rels_;
  NamedExprs chart_fracs_;
  NamedExprs chart_exprs_;
};

// Generator matrices of the order-72 rank-2 complex reflection group the
// quotient is taken by, and the multiplication table they generate.
Matrix group_gen_a();
Matrix group_gen_b();
Matrix group_gen_c();
Matrix group_gen_d();
const GroupTable& group72();

}  // namespace symsing
