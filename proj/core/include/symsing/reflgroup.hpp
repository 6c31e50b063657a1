#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symsing/linalg.hpp"
#include "symsing/poly.hpp"
#include "symsing/unipoly.hpp"

namespace symsing {

// Finite matrix group over Q(zeta_24), built as the multiplicative closure of
// a set of named generator matrices. Elements are deduplicated exactly, and
// the full multiplication table is precomputed (these groups are tiny).
class GroupTable {
 public:
  // Throws std::runtime_error if the closure exceeds max_order elements or a
  // generator is singular.
  static GroupTable generate(
      const std::vector<std::pair<std::string, Matrix>>& generators,
      size_t max_order = 10000);

  size_t order() const { return elems_.size(); }
  size_t dim() const { return elems_.empty() ? 0 : elems_[0].size(); }
  const std::vector<Matrix>& elements() const { return elems_; }
  const Matrix& matrix(size_t k) const { return elems_.at(k); }
  // A generator word for element k, e.g. "acdd"; "e" for the identity.
  const std::string& word(size_t k) const { return words_.at(k); }

  size_t identity_index() const { return id_; }
  size_t product(size_t i, size_t j) const { return prod_.at(i).at(j); }
  size_t inverse(size_t i) const { return inv_.at(i); }
  bool contains(const Matrix& m) const;
  size_t find(const Matrix& m) const;  // throws if absent
  size_t element_order(size_t i) const;

  // Partition of {0..order-1} into conjugacy classes, each sorted, classes
  // ordered by their smallest member.
  std::vector<std::vector<size_t>> conjugacy_classes() const;

 private:
  std::vector<Matrix> elems_;
  std::vector<std::string> words_;
  std::vector<std::vector<size_t>> prod_;
  std::vector<size_t> inv_;
  size_t id_ = 0;
};

// diag(m, (m^{-1})^T): the induced action on V x V* of m acting on V, written
// in coordinates that pair x_i with x_{n+i}. Preserves the standard
// symplectic form; this is asserted at construction.
Matrix cotangent_lift(const Matrix& m);
std::vector<Matrix> cotangent_lifts(const std::vector<Matrix>& ms);

// Substitution x_i -> sum_j m[i][j] x_j, i.e. p(m x). The matrix must be
// square of size equal to the variable count of p's ring.
Polynomial apply_linear(const Polynomial& p, const Matrix& m);

// Contragredient matrix (m^{-1})^T; for a unitary m this is its entrywise
// conjugate.
Matrix dual_matrix(const Matrix& m);

// Action of a matrix on polynomial functions: coordinates transform by the
// contragredient, p -> p((m^{-1})^T x). Which of m, m^{-1} acts this way is a
// bookkeeping convention; this one is pinned by the eigenvector tests and is
// what all per-element eigenvalue statements in this codebase mean.
Polynomial dual_action(const Polynomial& p, const Matrix& m);

// True if dual_action(p, m) == p for every element of g. Independent of the
// convention above since the element set is closed under inverse.
bool is_invariant(const Polynomial& p, const GroupTable& g);

// Indices of matrices with rank(m - id) == 2. Applied to cotangent lifts
// these are the symplectic reflections.
std::vector<size_t> rank_two_motion_indices(const std::vector<Matrix>& mats);

// Molien series (1/N) sum_m 1/det(1 - t m), reduced. The Hilbert series of
// the invariant ring of the group the matrices form.
RatFun molien_series(const std::vector<Matrix>& mats);

}  // namespace symsing
