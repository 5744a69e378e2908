#ifndef JACIDEAL_EIGEN_HPP
#define JACIDEAL_EIGEN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "jacideal/ratmatrix.hpp"
#include "jacideal/unipoly.hpp"

namespace jacideal {

// Exact spectral evidence for a square rational matrix. Diagonalizability
// over the algebraic closure is certified by a squarefree minimal polynomial;
// no eigenvalue is ever computed numerically.
struct EigenReport {
    UniPoly char_poly;
    UniPoly min_poly;
    bool is_scalar = false;                     // min_poly has degree 1
    bool is_diagonalizable_over_closure = false; // gcd(min_poly, min_poly') constant
    std::vector<std::pair<Rat, int>> rational_eigenvalues; // ascending, with algebraic multiplicity
    bool splits_over_Q = false;                 // rational multiplicities sum to the dimension
};

// det(tI - M), monic, by fraction-free Bareiss elimination over Q[t].
UniPoly char_poly(const RatMatrix& M);

// Monic minimal polynomial via the first linear dependence among I, M, M^2, ...
UniPoly min_poly(const RatMatrix& M);

EigenReport eigen_report(const RatMatrix& M);

// Evaluate p at a square matrix (Horner).
RatMatrix eval_at_matrix(const UniPoly& p, const RatMatrix& M);

// Rational roots with multiplicities, ascending (rational-root theorem on the
// integer-scaled polynomial, each candidate verified by exact evaluation).
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p);

struct JordanPair {
    RatMatrix P;
    RatMatrix J;
};

// Exact Jordan form M = P^{-1} J P; present only when char_poly splits over Q.
// Blocks are sorted by eigenvalue ascending, then block size descending, and
// chain vectors are chosen by generalized kernel ascent with lowest-index
// tie-breaking, so the output is deterministic.
std::optional<JordanPair> rational_jordan_transform(const RatMatrix& M);

} // namespace jacideal

#endif
