#ifndef JACIDEAL_RECONSTRUCT_HPP
#define JACIDEAL_RECONSTRUCT_HPP

#include <optional>
#include <vector>

#include "jacideal/polyspace.hpp"
#include "jacideal/structure.hpp"

namespace jacideal {

// Solutions F = M G of the symmetry system dF_i/dx_j = dF_j/dx_i over the
// canonical basis G of a space E with dim E = n+1. nullity is the full
// dimension of the linear solution space; M is a representative when the
// projectivized solution set is one point, and F is the symmetric basis when
// that representative is invertible.
struct SymmetricBasisSolution {
    int nullity = 0;
    std::optional<RatMatrix> M;
    std::optional<std::vector<HomPoly>> F;
};

SymmetricBasisSolution symmetric_basis(const PolySpace& E);

// Euler-identity inversion: f = (sum x_i F_i)/d, returned only when
// grad f = F holds exactly.
std::optional<HomPoly> integrate_gradient(const std::vector<HomPoly>& F);

struct Reconstruction {
    HomPoly f;
    bool unique = false;
};

// Recover f with span(grad f) = E, when one exists. unique is true exactly
// when the symmetry system has nullity 1.
std::optional<Reconstruction> reconstruct(const PolySpace& E);

// From E'(f) = E'(g) with mdr0(g) >= 3 and d > 3, gradient-span equality
// follows; verify it and classify the pair.
Classification eprime_pipeline(const HomPoly& f, const HomPoly& g);

// Empirical stand-in for the genericity statement: sampled polynomials are
// tested for cone-ness, reconstruction uniqueness and the Hessian
// obstruction. Deterministic for a fixed seed; sample k uses seed + k.
struct ProbeStats {
    int n = 0;
    int d = 0;
    long long samples = 0;
    unsigned long long seed = 0;
    long long coeff_bound = 0;
    long long zero_count = 0;
    long long cone_count = 0;
    long long nullity1_count = 0;
    long long hessian_power_count = 0;
};

ProbeStats genericity_probe(int n, int d, long long samples, unsigned long long seed,
                            long long coeff_bound);

} // namespace jacideal

#endif
