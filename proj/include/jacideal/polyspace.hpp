#ifndef JACIDEAL_POLYSPACE_HPP
#define JACIDEAL_POLYSPACE_HPP

#include <vector>

#include "jacideal/hompoly.hpp"
#include "jacideal/ratmatrix.hpp"

namespace jacideal {

// dim S_{n,m} = C(n+m, n).
long long dim_graded(int n, int m);

// Coordinates of f over the degree-m monomials in descending graded-lex
// order (the global coordinate convention for all kernel computations).
std::vector<Rat> coordinate_vector(const HomPoly& f, const std::vector<ExponentVector>& monomials);

HomPoly from_coordinates(int n, int degree, const std::vector<Rat>& coords,
                         const std::vector<ExponentVector>& monomials);

// A subspace of S_{n,m} held in canonical reduced row-echelon form over the
// monomial coordinates; two spaces are equal iff their bases are identical.
class PolySpace {
public:
    static PolySpace zero(int n, int degree);

    // Canonicalize the span of the given polynomials (all same n and degree).
    static PolySpace span(const std::vector<HomPoly>& polys);

    int n() const { return n_; }
    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    long long ambient_dim() const;
    const std::vector<HomPoly>& basis() const { return basis_; }

    bool contains(const HomPoly& f) const;

    bool operator==(const PolySpace&) const = default;

private:
    PolySpace(int n, int degree) : n_(n), degree_(degree) {}

    int n_;
    int degree_;
    std::vector<HomPoly> basis_;
};

bool span_equal(const PolySpace& a, const PolySpace& b);

// Degree-m graded piece of the Jacobian ideal: span{ x^a f_i : |a| = m-d+1 }.
// Below degree d-1 this is the zero space.
PolySpace jacobian_component(const HomPoly& f, int m);

// E(f) = J_{f,d-1}, the span of the partial derivatives.
PolySpace gradient_span(const HomPoly& f);

} // namespace jacideal

#endif
