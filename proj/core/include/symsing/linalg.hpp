#pragma once

#include <optional>
#include <vector>

#include "symsing/cyclo.hpp"
#include "symsing/unipoly.hpp"

namespace symsing {

// Dense row-major matrix over Q(zeta_24). All operations are exact.
using Matrix = std::vector<std::vector<Cyclo>>;

Matrix identity_matrix(size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Cyclo& c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix mat_conj(const Matrix& a);  // entrywise field conjugation
bool mat_eq(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& a, long e);

size_t rank(Matrix a);
Cyclo det(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

// Reduced row echelon form with zero rows dropped: a canonical basis of the
// row space, usable as a dictionary key for subspaces.
Matrix rref(Matrix a);

// Basis of the right kernel {v : a v = 0}.
std::vector<std::vector<Cyclo>> kernel_basis(const Matrix& a);

// One particular solution of a x = b, if the system is consistent.
std::optional<std::vector<Cyclo>> solve(Matrix a, std::vector<Cyclo> b);

// det(I - t M) as a univariate polynomial; exact, for small n.
UniPoly det_one_minus_t(const Matrix& m);

}  // namespace symsing
