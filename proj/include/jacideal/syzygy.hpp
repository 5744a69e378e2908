#ifndef JACIDEAL_SYZYGY_HPP
#define JACIDEAL_SYZYGY_HPP

#include <vector>

#include "jacideal/hompoly.hpp"

namespace jacideal {

// AR(f)_m: tuples (a_0,...,a_n) of degree-m polynomials with sum a_i f_i = 0.
struct SyzygySpace {
    int m = 0;
    std::vector<std::vector<HomPoly>> basis; // each entry has n+1 components

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Kernel of (S_m)^{n+1} -> S_{m+d-1}, (a_i) -> sum a_i f_i, in the global
// monomial coordinates.
SyzygySpace syzygies(const HomPoly& f, int m);

// Minimal degree of a relation among the partial derivatives; terminates by
// m = d-1 (Koszul) for any f with at least two nonzero partials, and is 0
// for cones.
int mdr0(const HomPoly& f);

// True when (a_0,...,a_n) is a relation: sum a_i f_i = 0 symbolically.
bool is_syzygy(const HomPoly& f, const std::vector<HomPoly>& tuple);

} // namespace jacideal

#endif
