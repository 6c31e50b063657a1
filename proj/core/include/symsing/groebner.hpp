#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symsing/poly.hpp"
#include "symsing/unipoly.hpp"

namespace symsing {

// Thrown when a basis computation exhausts its reduction-step budget. Callers
// report the computation as inconclusive rather than failed.
struct BudgetExceeded : std::runtime_error {
  size_t steps;
  explicit BudgetExceeded(size_t n)
      : std::runtime_error("reduction step budget exhausted after " + std::to_string(n) +
                           " steps"),
        steps(n) {}
};

class GBCache;

struct GroebnerOptions {
  size_t max_steps = 25'000'000;  // total single reductions before giving up
  const GBCache* cache = nullptr;
};

struct GBStats {
  size_t pairs_processed = 0;
  size_t nonzero_reductions = 0;
  size_t steps = 0;
  bool from_cache = false;
};

// Reduced Groebner basis: monic, auto-reduced, sorted by ascending lead
// monomial. This form is canonical for the ideal and the term order.
class GroebnerBasis {
 public:
  static GroebnerBasis compute(const Ring& ring, std::vector<Polynomial> gens,
                               const GroebnerOptions& opt = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return g_; }
  bool is_unit_ideal() const;
  const GBStats& stats() const { return stats_; }

  // Full normal form: no term of the result is divisible by any lead term.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

 private:
  Ring ring_;
  std::vector<Polynomial> g_;
  GBStats stats_;

  GroebnerBasis(Ring ring, std::vector<Polynomial> g, GBStats stats)
      : ring_(std::move(ring)), g_(std::move(g)), stats_(std::move(stats)) {}
};

// Moves a polynomial into a ring that contains the source variables as the
// contiguous block starting at index offset (names must match).
Polynomial inject(const Polynomial& p, const Ring& target, size_t offset);

// Inverse of inject: fails when p involves variables outside the block.
std::optional<Polynomial> project(const Polynomial& p, const Ring& target, size_t offset);

// Ring with extra variables prepended; the order is grevlex unless given.
Ring prepend_vars(const Ring& r, const std::vector<std::string>& names,
                  const std::vector<long>& weights);

// Generators of the elimination ideal I cap k[x_nelim, ...]: computes a basis
// under a block order and keeps the polynomials avoiding the first block.
// Results live in a ring equal to `ring` with the first nelim variables
// removed and grevlex order.
std::pair<Ring, std::vector<Polynomial>> eliminate(const Ring& ring,
                                                   const std::vector<Polynomial>& gens,
                                                   size_t nelim,
                                                   const GroebnerOptions& opt = {});

// Saturation I : f^infinity.
std::vector<Polynomial> saturate(const Ring& ring, const std::vector<Polynomial>& gens,
                                 const Polynomial& f, const GroebnerOptions& opt = {});

// Radical membership: true iff f vanishes on the zero set of I.
bool in_radical(const Ring& ring, const std::vector<Polynomial>& gens, const Polynomial& f,
                const GroebnerOptions& opt = {});

// Ideal quotient I : f.
std::vector<Polynomial> ideal_quotient(const Ring& ring, const std::vector<Polynomial>& gens,
                                       const Polynomial& f, const GroebnerOptions& opt = {});

// Whether fs is a regular sequence modulo the ideal: each successive colon
// ideal (I + <f_1..f_{k-1}>) : f_k equals I + <f_1..f_{k-1}>, and the final
// ideal stays proper.
bool is_regular_sequence(const Ring& ring, std::vector<Polynomial> gens,
                         const std::vector<Polynomial>& fs,
                         const GroebnerOptions& opt = {});

// Jacobian criterion for an ideal the caller knows to be equidimensional of
// the given codimension: true iff the ideal plus all codim-sized minors of
// the Jacobian matrix is the unit ideal.
bool jacobian_smoothness(const Ring& ring, const std::vector<Polynomial>& gens,
                         long codim, const GroebnerOptions& opt = {});

// Looks for a relation of the shape c*var*partner + f with f free of var and
// partner a different variable; such a relation lets var be eliminated when
// passing primality from the rationals to an extension field. Returns the
// (relation, partner variable) indices, or nullopt if no relation qualifies.
std::optional<std::pair<size_t, size_t>> linear_elimination_witness(
    const Ring& ring, const std::vector<Polynomial>& rels, size_t var);

// Krull dimension of R/I from the lead ideal (max independent variable set);
// -1 for the unit ideal.
long krull_dimension(const GroebnerBasis& gb);

// Weighted Hilbert series of R/I for a weighted-homogeneous ideal, computed
// from the lead ideal of a basis under a degree-compatible order.
HilbertSeries hilbert_series(const GroebnerBasis& gb);

// Disk cache of reduced bases, keyed by ring, order, and generators.
class GBCache {
 public:
  GBCache() = default;  // disabled
  explicit GBCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  static std::string key_for(const Ring& ring, const std::vector<Polynomial>& gens);
  std::optional<std::vector<Polynomial>> load(const Ring& ring, const std::string& key) const;
  void store(const std::string& key, const std::vector<Polynomial>& basis) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace symsing
