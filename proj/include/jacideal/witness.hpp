#ifndef JACIDEAL_WITNESS_HPP
#define JACIDEAL_WITNESS_HPP

#include <optional>
#include <string>

#include "jacideal/hompoly.hpp"
#include "jacideal/ratmatrix.hpp"

namespace jacideal {

enum class WitnessFamily { jordan_block, case1, case2 };

const char* witness_family_name(WitnessFamily f);

// A pair with equal gradient spans related by grad f = J grad g, f not
// proportional to g; the constructors verify both claims symbolically.
struct WitnessPair {
    HomPoly f;
    HomPoly g;
    RatMatrix J;
    WitnessFamily family;
    int n = 0;
    int d = 0;
    std::optional<Rat> A;     // case1
    std::optional<Rat> B;     // case1
    std::optional<HomPoly> H; // case2
    std::string st_status;    // "not_st", "st", or "unknown"
};

// Inductive non-ST witness: g built by iterated antidifferentiation from the
// (n-1)-variable witness, f = g + that witness, J the full Jordan block with
// eigenvalue 1. Requires n >= 2, d >= 3.
WitnessPair jordan_witness(int n, int d);

// g = x^{d-1}z + (d-1)/2 x^{d-2}y^2 + A x^{d-1}y + B x^d,
// f = g + x^{d-1}y + (A/d) x^d; always non-ST, x^{d-2} divides both.
WitnessPair case1_family(int d, const Rat& A, const Rat& B);

// g = x^{d-1}y + H(x,z), f = g + (1/d) x^d, with H in variables x and z
// only. May or may not be of ST type (H = z^d is the known ST member).
WitnessPair case2_family(int d, const HomPoly& H);

// Deterministic random homogeneous polynomial: coefficients uniform integers
// in [-coeff_bound, coeff_bound] over all monomials, drawn from mt19937_64
// seeded with seed (value mapped by modulo; part of the output contract).
HomPoly random_poly(int n, int d, unsigned long long seed, long long coeff_bound);

// Deterministic random matrix with the same coefficient convention; the
// invertible variant retries with seed+1, seed+2, ... until nonsingular.
RatMatrix random_matrix(int rows, int cols, unsigned long long seed, long long coeff_bound);
RatMatrix random_invertible_matrix(int size, unsigned long long seed, long long coeff_bound);

} // namespace jacideal

#endif
