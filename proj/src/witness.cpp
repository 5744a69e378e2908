#include "jacideal/witness.hpp"

#include <random>
#include <stdexcept>

#include "jacideal/errors.hpp"
#include "jacideal/polyspace.hpp"
#include "jacideal/structure.hpp"

namespace jacideal {

const char* witness_family_name(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::jordan_block: return "jordan";
        case WitnessFamily::case1: return "case1";
        case WitnessFamily::case2: return "case2";
    }
    return "unknown";
}

namespace {

// Formal antiderivative in x_i with lower limit 0.
HomPoly antiderivative(const HomPoly& f, int i) {
    HomPoly::TermMap t;
    for (const auto& [ev, c] : f.terms()) {
        ExponentVector w = ev;
        int e = ++w.exps[static_cast<std::size_t>(i)];
        t.emplace(std::move(w), c / e);
    }
    return HomPoly::from_terms(f.n(), f.degree() + 1, std::move(t));
}

// Set the listed variables to zero.
HomPoly kill_variables(const HomPoly& f, int first, int last) {
    HomPoly::TermMap t;
    for (const auto& [ev, c] : f.terms()) {
        bool keep = true;
        for (int v = first; v <= last; ++v)
            if (ev[v] != 0) { keep = false; break; }
        if (keep) t.emplace(ev, c);
    }
    return HomPoly::from_terms(f.n(), f.degree(), std::move(t));
}

RatMatrix full_jordan_block(int size, const Rat& lambda) {
    RatMatrix J(size, size);
    for (int i = 0; i < size; ++i) {
        J(i, i) = lambda;
        if (i + 1 < size) J(i, i + 1) = 1;
    }
    return J;
}

// The n-variable chain member: x0^{d-1}x1 for n = 1, then one integration
// step per added variable. Each step is checked against g_{r+1} = h_r.
HomPoly chain_witness(int n, int d) {
    std::vector<int> base(2, 0);
    base[0] = d - 1;
    base[1] = 1;
    HomPoly h = HomPoly::monomial(Rat(1), base); // x0^{d-1} x1
    for (int level = 2; level <= n; ++level) {
        HomPoly prev = h.embed(level);
        HomPoly g(level, d);
        for (int i = 0; i <= level - 1; ++i) {
            HomPoly hi = partial(prev, i);
            if (i >= 1) hi = kill_variables(hi, 1, i);
            g = g + antiderivative(hi, i + 1);
        }
        for (int r = 0; r <= level - 1; ++r)
            if (!(partial(g, r + 1) == partial(prev, r)))
                throw std::logic_error("jordan_witness: recursion g_{r+1} = h_r failed");
        h = g;
    }
    return h;
}

void verify_pair(const WitnessPair& wp) {
    if (!verify_jordan_relation(wp.f, wp.g, wp.J))
        throw std::logic_error("witness pair: grad f = J grad g failed");
    if (!span_equal(gradient_span(wp.f), gradient_span(wp.g)))
        throw std::logic_error("witness pair: gradient spans differ");
    if (proportionality(wp.f, wp.g))
        throw std::logic_error("witness pair: f proportional to g");
}

} // namespace

WitnessPair jordan_witness(int n, int d) {
    if (n < 2 || d < 3) throw precondition_error("jordan_witness: need n >= 2 and d >= 3");
    HomPoly g = chain_witness(n, d);
    HomPoly h = chain_witness(n - 1, d).embed(n);
    WitnessPair wp{g + h, g, full_jordan_block(n + 1, Rat(1)),
                   WitnessFamily::jordan_block, n, d,
                   std::nullopt, std::nullopt, std::nullopt, "not_st"};
    verify_pair(wp);
    return wp;
}

WitnessPair case1_family(int d, const Rat& A, const Rat& B) {
    if (d < 3) throw precondition_error("case1_family: need d >= 3");
    HomPoly g = HomPoly::monomial(Rat(1), {d - 1, 0, 1})
              + HomPoly::monomial(rat(d - 1, 2), {d - 2, 2, 0})
              + HomPoly::monomial(A, {d - 1, 1, 0})
              + HomPoly::monomial(B, {d, 0, 0});
    HomPoly f = g + HomPoly::monomial(Rat(1), {d - 1, 1, 0})
                  + HomPoly::monomial(A / d, {d, 0, 0});
    WitnessPair wp{std::move(f), std::move(g), full_jordan_block(3, Rat(1)),
                   WitnessFamily::case1, 2, d, A, B, std::nullopt, "not_st"};
    verify_pair(wp);
    if (!divisible_by_variable_power(wp.f, 0, d - 2) ||
        !divisible_by_variable_power(wp.g, 0, d - 2))
        throw std::logic_error("case1_family: x^{d-2} divisibility failed");
    return wp;
}

WitnessPair case2_family(int d, const HomPoly& H) {
    if (d < 3) throw precondition_error("case2_family: need d >= 3");
    if (H.n() != 2 || (!H.is_zero() && H.degree() != d))
        throw precondition_error("case2_family: H must be a degree-d polynomial in 3 variables");
    for (const auto& [ev, c] : H.terms()) {
        (void)c;
        if (ev[1] != 0)
            throw precondition_error("case2_family: H may involve only x and z");
    }

    HomPoly Hd = H.is_zero() ? HomPoly(2, d) : H;
    HomPoly g = HomPoly::monomial(Rat(1), {d - 1, 1, 0}) + Hd;
    HomPoly f = g + HomPoly::monomial(rat(1, d), {d, 0, 0});

    RatMatrix J = RatMatrix::identity(3);
    J(0, 1) = 1;

    bool known_st = H == HomPoly::monomial(Rat(1), {0, 0, d});
    WitnessPair wp{std::move(f), std::move(g), std::move(J),
                   WitnessFamily::case2, 2, d,
                   std::nullopt, std::nullopt, H, known_st ? "st" : "unknown"};
    verify_pair(wp);
    return wp;
}

HomPoly random_poly(int n, int d, unsigned long long seed, long long coeff_bound) {
    if (coeff_bound < 0) throw precondition_error("random_poly: negative coefficient bound");
    if (n < 0 || d < 0) throw precondition_error("random_poly: bad n or d");
    std::mt19937_64 rng(seed);
    unsigned long long width = 2 * static_cast<unsigned long long>(coeff_bound) + 1;
    HomPoly::TermMap t;
    for (const ExponentVector& ev : monomials_of_degree(n, d)) {
        long long c = static_cast<long long>(rng() % width) - coeff_bound;
        if (c != 0) t.emplace(ev, Rat(static_cast<long>(c)));
    }
    return HomPoly::from_terms(n, d, std::move(t));
}

RatMatrix random_matrix(int rows, int cols, unsigned long long seed, long long coeff_bound) {
    if (coeff_bound < 0) throw precondition_error("random_matrix: negative coefficient bound");
    std::mt19937_64 rng(seed);
    unsigned long long width = 2 * static_cast<unsigned long long>(coeff_bound) + 1;
    RatMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            M(i, j) = Rat(static_cast<long>(static_cast<long long>(rng() % width) - coeff_bound));
    return M;
}

RatMatrix random_invertible_matrix(int size, unsigned long long seed, long long coeff_bound) {
    if (coeff_bound < 1)
        throw precondition_error("random_invertible_matrix: bound must be positive");
    for (unsigned long long s = seed;; ++s) {
        RatMatrix M = random_matrix(size, size, s, coeff_bound);
        if (inverse(M)) return M;
    }
}

} // namespace jacideal
