#ifndef JACIDEAL_STRUCTURE_HPP
#define JACIDEAL_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "jacideal/eigen.hpp"
#include "jacideal/hompoly.hpp"
#include "jacideal/polyspace.hpp"

namespace jacideal {

// Result of the linear-dependence test on the partial derivatives. When f is
// a cone, substituting A removes the eliminated variable from f.
struct ConeReduction {
    bool is_cone = false;
    std::optional<RatMatrix> A;
    std::optional<int> eliminated_index;
};

ConeReduction cone_detect(const HomPoly& f);

// The invertible C with grad f = C grad g, together with its spectral
// evidence. Requires E(f) = E(g) and g not a cone (otherwise C is not
// unique); the identity is re-verified symbolically at construction.
struct RelationStructure {
    RatMatrix C;
    EigenReport report;
    std::optional<JordanPair> jordan; // present when char_poly splits over Q
};

RelationStructure relation_matrix(const HomPoly& f, const HomPoly& g);

enum class Outcome {
    same_hypersurface,
    st_type,
    multiplicity_witness,
    indeterminate_over_Q,
};

const char* outcome_name(Outcome o);

// Constructive Sebastiani-Thom splitting of g. In the coordinates X = A X'
// the polynomial substituted(g) = g(A X') decomposes into parts over disjoint
// groups of the new variables; parts_original are the same parts pulled back,
// so they sum to g exactly.
struct StSplitting {
    RatMatrix A;
    std::vector<std::vector<int>> groups; // new-coordinate variable indices
    std::vector<HomPoly> parts_new;       // in the new coordinates, sum = g(A X')
    std::vector<HomPoly> parts_original;  // pulled back, sum = g
};

// Singular point of multiplicity >= d-1 exhibited on V(g) (original
// coordinates); the multiplicity of f at the same point is also recorded.
struct WitnessPoint {
    std::vector<Rat> point;
    int multiplicity_g = 0;
    int multiplicity_f = 0;
};

struct Classification {
    Outcome outcome = Outcome::indeterminate_over_Q;
    std::optional<Rat> scalar;                // same_hypersurface: f = scalar * g
    std::optional<StSplitting> st_splitting;  // st_type with rational eigen-data
    std::optional<WitnessPoint> witness_point; // multiplicity_witness with rational eigen-data
    std::optional<RelationStructure> relation; // certificates (absent for f = c g)
};

// Dichotomy for a pair with equal gradient spans: either a scalar multiple,
// or Sebastiani-Thom type, or a multiplicity-(d-1) singularity.
Classification classify_pair(const HomPoly& f, const HomPoly& g);

// Multiplicity of V(f) at a projective point: 0 off the hypersurface, else
// the minimal local degree after moving p to the last coordinate point.
int multiplicity_at(const HomPoly& f, const std::vector<Rat>& p);

// Factorization hessian_det(f) = c * ell^e with ell linear; when present, f
// is certified not of Sebastiani-Thom type and not a cone.
struct LinearPowerFactorization {
    Rat c;
    HomPoly ell;
    int e = 0;
};

std::optional<LinearPowerFactorization> hessian_power_test(const HomPoly& f);

// grad f = J grad g, checked symbolically.
bool verify_jordan_relation(const HomPoly& f, const HomPoly& g, const RatMatrix& J);

// f = c * g for some nonzero rational c.
std::optional<Rat> proportionality(const HomPoly& f, const HomPoly& g);

} // namespace jacideal

#endif
