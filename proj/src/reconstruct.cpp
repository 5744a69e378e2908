#include "jacideal/reconstruct.hpp"

#include <stdexcept>

#include "jacideal/errors.hpp"
#include "jacideal/syzygy.hpp"
#include "jacideal/witness.hpp"

namespace jacideal {

namespace {

RatMatrix matrix_from_flat(int m, const std::vector<Rat>& flat) {
    RatMatrix M(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            M(i, j) = flat[static_cast<std::size_t>(i) * m + j];
    return M;
}

std::vector<HomPoly> apply_to_basis(const RatMatrix& M, const std::vector<HomPoly>& G) {
    int m = M.rows();
    std::vector<HomPoly> F;
    F.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        HomPoly acc(G.front().n(), G.front().degree());
        for (int j = 0; j < m; ++j)
            if (!rat_is_zero(M(i, j))) acc = acc + G[static_cast<std::size_t>(j)] * M(i, j);
        F.push_back(std::move(acc));
    }
    return F;
}

// Normalize so the first nonzero coefficient (graded-lex) of the first
// nonzero F_i is 1.
RatMatrix normalize_solution(const RatMatrix& M, const std::vector<HomPoly>& G) {
    for (const HomPoly& Fi : apply_to_basis(M, G)) {
        if (Fi.is_zero()) continue;
        return M * (1 / Fi.terms().begin()->second);
    }
    return M;
}

// Kernel of the symmetry system on vec(M) (row-major), for F = M G:
// dF_i/dx_j = dF_j/dx_i for all i < j.
std::vector<std::vector<Rat>> symmetry_kernel(const PolySpace& E) {
    int m = E.n() + 1;
    const auto& G = E.basis();
    auto monomials = monomials_of_degree(E.n(), E.degree() - 1);
    int rows_per_pair = static_cast<int>(monomials.size());

    std::vector<std::vector<std::vector<Rat>>> dG(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        dG[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            dG[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                coordinate_vector(partial(G[static_cast<std::size_t>(k)], j), monomials);
    }

    int pairs = m * (m - 1) / 2;
    RatMatrix S(pairs * rows_per_pair, m * m);
    int block = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            for (int k = 0; k < m; ++k)
                for (int r = 0; r < rows_per_pair; ++r) {
                    S(block * rows_per_pair + r, i * m + k) +=
                        dG[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
                    S(block * rows_per_pair + r, j * m + k) -=
                        dG[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
                }
            ++block;
        }
    return kernel(S);
}

void check_symmetric_basis_input(const PolySpace& E) {
    if (E.dimension() != E.n() + 1)
        throw precondition_error("symmetric_basis: space dimension must be n+1");
    if (E.degree() < 2)
        throw precondition_error("symmetric_basis: degree must be at least 2");
}

} // namespace

SymmetricBasisSolution symmetric_basis(const PolySpace& E) {
    check_symmetric_basis_input(E);
    int m = E.n() + 1;
    const auto& G = E.basis();

    auto null_basis = symmetry_kernel(E);
    SymmetricBasisSolution out;
    out.nullity = static_cast<int>(null_basis.size());
    if (out.nullity == 1) {
        RatMatrix M = normalize_solution(matrix_from_flat(m, null_basis.front()), G);
        out.M = M;
        if (inverse(M)) {
            auto F = apply_to_basis(M, G);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (!(partial(F[static_cast<std::size_t>(i)], j) ==
                          partial(F[static_cast<std::size_t>(j)], i)))
                        throw std::logic_error("symmetric_basis: symmetry verification failed");
            out.F = std::move(F);
        }
    }
    return out;
}

std::optional<HomPoly> integrate_gradient(const std::vector<HomPoly>& F) {
    if (F.empty()) throw std::invalid_argument("integrate_gradient: empty tuple");
    int n = F.front().n();
    int dm1 = F.front().degree();
    if (static_cast<int>(F.size()) != n + 1)
        throw std::invalid_argument("integrate_gradient: need n+1 components");
    for (const HomPoly& Fi : F)
        if (Fi.n() != n || Fi.degree() != dm1)
            throw std::invalid_argument("integrate_gradient: mixed degrees");

    int d = dm1 + 1;
    HomPoly acc(n, d);
    for (int i = 0; i <= n; ++i)
        acc = acc + multiply_by_variable(F[static_cast<std::size_t>(i)], i);
    HomPoly candidate = acc * rat(1, d);
    if (gradient(candidate) == F) return candidate;
    return std::nullopt;
}

std::optional<Reconstruction> reconstruct(const PolySpace& E) {
    check_symmetric_basis_input(E);
    int m = E.n() + 1;
    const auto& G = E.basis();

    auto null_basis = symmetry_kernel(E);
    if (null_basis.empty()) return std::nullopt;

    if (null_basis.size() == 1) {
        RatMatrix M = matrix_from_flat(m, null_basis.front());
        if (!inverse(M)) return std::nullopt; // only a singular solution
        auto F = apply_to_basis(normalize_solution(M, G), G);
        auto f = integrate_gradient(F);
        if (!f) return std::nullopt;
        return Reconstruction{*f, true};
    }

    // Ambiguous case: kernel basis vectors, then their cumulative sums, until
    // one is invertible and integrable.
    std::vector<std::vector<Rat>> candidates = null_basis;
    std::vector<Rat> cum(static_cast<std::size_t>(m) * m, Rat(0));
    for (std::size_t k = 0; k < null_basis.size(); ++k) {
        for (std::size_t t = 0; t < cum.size(); ++t) cum[t] += null_basis[k][t];
        if (k > 0) candidates.push_back(cum);
    }
    for (const auto& flat : candidates) {
        RatMatrix M = matrix_from_flat(m, flat);
        if (!inverse(M)) continue;
        auto F = apply_to_basis(normalize_solution(M, G), G);
        auto f = integrate_gradient(F);
        if (f) return Reconstruction{*f, false};
    }
    return std::nullopt;
}

Classification eprime_pipeline(const HomPoly& f, const HomPoly& g) {
    if (f.n() != g.n() || f.degree() != g.degree())
        throw precondition_error("eprime_pipeline: mismatched polynomials");
    if (f.degree() <= 3)
        throw precondition_error("eprime_pipeline: degree must be greater than 3");
    if (cone_detect(g).is_cone)
        throw precondition_error("eprime_pipeline: g is a cone");
    if (!span_equal(jacobian_component(f, f.degree()), jacobian_component(g, g.degree())))
        throw precondition_error("eprime_pipeline: E' spans differ");
    int mg = mdr0(g);
    if (mg < 3)
        throw precondition_error("eprime_pipeline: mdr0(g) = " + std::to_string(mg) + " < 3");

    if (auto c = proportionality(f, g)) {
        Classification out;
        out.outcome = Outcome::same_hypersurface;
        out.scalar = c;
        return out;
    }

    // With these hypotheses E-span equality is forced; verify it outright.
    if (!span_equal(gradient_span(f), gradient_span(g)))
        throw std::logic_error("eprime_pipeline: E-span equality failed despite hypotheses");
    return classify_pair(f, g);
}

ProbeStats genericity_probe(int n, int d, long long samples, unsigned long long seed,
                            long long coeff_bound) {
    if (d < 3) throw precondition_error("genericity_probe: degree must be >= 3");
    if (samples < 1) throw precondition_error("genericity_probe: need at least one sample");
    if (n < 1) throw precondition_error("genericity_probe: need n >= 1");

    ProbeStats st;
    st.n = n;
    st.d = d;
    st.samples = samples;
    st.seed = seed;
    st.coeff_bound = coeff_bound;

    for (long long k = 0; k < samples; ++k) {
        HomPoly p = random_poly(n, d, seed + static_cast<unsigned long long>(k), coeff_bound);
        if (p.is_zero()) {
            ++st.zero_count;
            ++st.cone_count;
            continue;
        }
        if (hessian_power_test(p)) ++st.hessian_power_count;
        if (cone_detect(p).is_cone) {
            ++st.cone_count;
            continue;
        }
        if (symmetric_basis(gradient_span(p)).nullity == 1) ++st.nullity1_count;
    }
    return st;
}

} // namespace jacideal
