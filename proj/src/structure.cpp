#include "jacideal/structure.hpp"

#include <stdexcept>

#include "jacideal/errors.hpp"

namespace jacideal {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::same_hypersurface: return "same_hypersurface";
        case Outcome::st_type: return "st_type";
        case Outcome::multiplicity_witness: return "multiplicity_witness";
        case Outcome::indeterminate_over_Q: return "indeterminate_over_Q";
    }
    return "unknown";
}

std::optional<Rat> proportionality(const HomPoly& f, const HomPoly& g) {
    if (f.n() != g.n() || f.degree() != g.degree()) return std::nullopt;
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return std::nullopt;
    const auto& [lead_ev, lead_c] = *g.terms().begin();
    Rat c = f.coeff(lead_ev) / lead_c;
    if (rat_is_zero(c)) return std::nullopt;
    if (f == g * c) return c;
    return std::nullopt;
}

ConeReduction cone_detect(const HomPoly& f) {
    ConeReduction out;
    auto grad = gradient(f);
    int m = f.var_count();

    // Left kernel of the coefficient matrix of the partials: a dependence
    // sum c_i f_i = 0.
    auto monomials = monomials_of_degree(f.n(), f.degree() > 0 ? f.degree() - 1 : 0);
    RatMatrix G(static_cast<int>(monomials.size()), m);
    for (int i = 0; i < m; ++i) {
        auto col = coordinate_vector(grad[static_cast<std::size_t>(i)], monomials);
        for (std::size_t r = 0; r < col.size(); ++r) G(static_cast<int>(r), i) = col[r];
    }
    auto deps = kernel(G);
    if (deps.empty()) return out; // partials independent: not a cone

    out.is_cone = true;
    const auto& c = deps.front();
    int idx = 0;
    while (rat_is_zero(c[static_cast<std::size_t>(idx)])) ++idx;
    out.eliminated_index = idx;

    // Row operation R with (R grad f)_idx = 0; substituting its transpose
    // performs the matching coordinate change, so partial(f o A, idx) = 0.
    RatMatrix R = RatMatrix::identity(m);
    Rat inv = 1 / c[static_cast<std::size_t>(idx)];
    for (int j = 0; j < m; ++j)
        if (j != idx) R(idx, j) = c[static_cast<std::size_t>(j)] * inv;
    RatMatrix A = R.transpose();
    if (!partial(linear_substitute(f, A), idx).is_zero())
        throw std::logic_error("cone_detect: elimination failed");
    out.A = std::move(A);
    return out;
}

RelationStructure relation_matrix(const HomPoly& f, const HomPoly& g) {
    if (f.n() != g.n() || f.degree() != g.degree())
        throw precondition_error("relation_matrix: mismatched polynomials");
    if (cone_detect(g).is_cone)
        throw precondition_error("relation_matrix: g is a cone, relation not unique");
    if (!span_equal(gradient_span(f), gradient_span(g)))
        throw precondition_error("relation_matrix: gradient spans differ");

    int m = f.var_count();
    auto gf = gradient(f);
    auto gg = gradient(g);
    auto monomials = monomials_of_degree(f.n(), f.degree() - 1);
    int rows = static_cast<int>(monomials.size());

    // Solve G^T C^T = F^T columnwise: express each f_i over the g_j.
    RatMatrix GT(rows, m), FT(rows, m);
    for (int i = 0; i < m; ++i) {
        auto gc = coordinate_vector(gg[static_cast<std::size_t>(i)], monomials);
        auto fc = coordinate_vector(gf[static_cast<std::size_t>(i)], monomials);
        for (int r = 0; r < rows; ++r) {
            GT(r, i) = gc[static_cast<std::size_t>(r)];
            FT(r, i) = fc[static_cast<std::size_t>(r)];
        }
    }
    auto X = solve(GT, FT);
    if (!X) throw std::logic_error("relation_matrix: inconsistent system despite equal spans");
    RatMatrix C = X->transpose();

    if (!verify_jordan_relation(f, g, C))
        throw std::logic_error("relation_matrix: verification failed");
    if (!inverse(C))
        throw std::logic_error("relation_matrix: relation matrix singular");

    RelationStructure out{C, eigen_report(C), std::nullopt};
    if (out.report.splits_over_Q) out.jordan = rational_jordan_transform(C);
    return out;
}

bool verify_jordan_relation(const HomPoly& f, const HomPoly& g, const RatMatrix& J) {
    if (f.n() != g.n()) return false;
    int m = f.var_count();
    if (J.rows() != m || J.cols() != m)
        throw std::invalid_argument("verify_jordan_relation: matrix size mismatch");
    auto gf = gradient(f);
    auto gg = gradient(g);
    for (int i = 0; i < m; ++i) {
        HomPoly acc(f.n(), f.degree() > 0 ? f.degree() - 1 : 0);
        for (int j = 0; j < m; ++j)
            if (!rat_is_zero(J(i, j))) acc = acc + gg[static_cast<std::size_t>(j)] * J(i, j);
        if (!(acc == gf[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

int multiplicity_at(const HomPoly& f, const std::vector<Rat>& p) {
    if (static_cast<int>(p.size()) != f.var_count())
        throw precondition_error("multiplicity_at: point arity mismatch");
    bool all_zero = true;
    for (const Rat& x : p)
        if (!rat_is_zero(x)) { all_zero = false; break; }
    if (all_zero) throw precondition_error("multiplicity_at: zero point is not projective");

    if (!rat_is_zero(evaluate(f, p))) return 0;
    if (f.is_zero()) return 0; // degenerate: identically zero

    int m = f.var_count();
    int pivot = 0;
    while (rat_is_zero(p[static_cast<std::size_t>(pivot)])) ++pivot;

    // Columns: unit vectors skipping the pivot, then p itself; sends the last
    // coordinate point to p.
    RatMatrix T(m, m);
    int col = 0;
    for (int j = 0; j < m; ++j) {
        if (j == pivot) continue;
        T(j, col) = 1;
        ++col;
    }
    for (int i = 0; i < m; ++i) T(i, m - 1) = p[static_cast<std::size_t>(i)];

    HomPoly moved = linear_substitute(f, T);
    // Dehomogenize in the last variable: local degree of a term is d - e_last.
    int best = f.degree() + 1;
    for (const auto& [ev, c] : moved.terms()) {
        (void)c;
        int local = f.degree() - ev[m - 1];
        if (local < best) best = local;
    }
    return best;
}

std::optional<LinearPowerFactorization> hessian_power_test(const HomPoly& f) {
    if (f.degree() < 3) throw precondition_error("hessian_power_test: degree must be >= 3");
    HomPoly H = hessian_det(f);
    if (H.is_zero()) return std::nullopt;
    int e = H.degree();
    int m = f.var_count();

    // Deterministic sweep over integer points until H(q) != 0.
    std::vector<Rat> q;
    for (int radius = 0; q.empty(); ++radius) {
        std::vector<int> point(static_cast<std::size_t>(m), -radius);
        while (true) {
            int maxabs = 0;
            for (int v : point) maxabs = std::max(maxabs, v < 0 ? -v : v);
            if (maxabs == radius) { // interior points were tried at smaller radii
                std::vector<Rat> cand;
                cand.reserve(static_cast<std::size_t>(m));
                for (int v : point) cand.emplace_back(v);
                if (!rat_is_zero(evaluate(H, cand))) { q = std::move(cand); break; }
            }
            int i = m - 1;
            while (i >= 0 && point[static_cast<std::size_t>(i)] == radius) {
                point[static_cast<std::size_t>(i)] = -radius;
                --i;
            }
            if (i < 0) break;
            ++point[static_cast<std::size_t>(i)];
        }
    }

    // For H = c ell^e the gradient at q is proportional to the coefficients
    // of ell; normalize the first nonzero one to 1.
    std::vector<Rat> lcoef(static_cast<std::size_t>(m));
    bool any = false;
    for (int i = 0; i < m; ++i) {
        lcoef[static_cast<std::size_t>(i)] = evaluate(partial(H, i), q);
        if (!rat_is_zero(lcoef[static_cast<std::size_t>(i)])) any = true;
    }
    if (!any) return std::nullopt;
    int lead = 0;
    while (rat_is_zero(lcoef[static_cast<std::size_t>(lead)])) ++lead;
    Rat norm = 1 / lcoef[static_cast<std::size_t>(lead)];

    HomPoly::TermMap t;
    for (int i = 0; i < m; ++i) {
        if (rat_is_zero(lcoef[static_cast<std::size_t>(i)])) continue;
        std::vector<int> e1(static_cast<std::size_t>(m), 0);
        e1[static_cast<std::size_t>(i)] = 1;
        t.emplace(ExponentVector(std::move(e1)), lcoef[static_cast<std::size_t>(i)] * norm);
    }
    HomPoly ell = HomPoly::from_terms(f.n(), 1, std::move(t));

    // Cross-multiplied identity H * ell(q)^e = H(q) * ell^e avoids division.
    Rat ellq = evaluate(ell, q);
    if (rat_is_zero(ellq)) return std::nullopt;
    Rat ellq_pow(1), Hq = evaluate(H, q);
    for (int k = 0; k < e; ++k) ellq_pow *= ellq;
    HomPoly ell_pow = HomPoly::monomial(Rat(1), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int k = 0; k < e; ++k) ell_pow = ell_pow * ell;
    if (!(H * ellq_pow == ell_pow * Hq)) return std::nullopt;

    return LinearPowerFactorization{Hq / ellq_pow, ell, e};
}

namespace {

// Splitting of g in the eigencoordinates of a diagonal J: cross-group second
// partials vanish, so (1/d) sum_{i in grp} x_i g_i collects the
// variables of each eigenvalue group.
StSplitting build_splitting(const HomPoly& g, const JordanPair& jp) {
    int m = g.var_count();
    RatMatrix A = jp.P.transpose();
    HomPoly g2 = linear_substitute(g, A);

    std::vector<std::vector<int>> groups;
    for (int i = 0; i < m; ++i) {
        if (i == 0 || !(jp.J(i, i) == jp.J(i - 1, i - 1)))
            groups.emplace_back();
        groups.back().push_back(i);
    }

    PolyMatrix H = hessian(g2);
    for (std::size_t a = 0; a < groups.size(); ++a)
        for (std::size_t b = a + 1; b < groups.size(); ++b)
            for (int i : groups[a])
                for (int j : groups[b])
                    if (!H.at(i, j).is_zero())
                        throw std::logic_error("classify_pair: cross-group Hessian entry nonzero");

    Rat dinv = rat(1, g.degree());
    std::vector<HomPoly> parts_new, parts_orig;
    auto Ainv = inverse(A);
    if (!Ainv) throw std::logic_error("classify_pair: coordinate change singular");
    HomPoly sum_check(g.n(), g.degree());
    for (const auto& grp : groups) {
        HomPoly part(g.n(), g.degree());
        for (int i : grp) part = part + multiply_by_variable(partial(g2, i), i);
        part = part * dinv;
        for (const auto& [ev, c] : part.terms()) {
            (void)c;
            for (int v = 0; v < m; ++v) {
                bool in_group = false;
                for (int i : grp)
                    if (i == v) in_group = true;
                if (!in_group && ev[v] != 0)
                    throw std::logic_error("classify_pair: part leaks outside its group");
            }
        }
        HomPoly back = linear_substitute(part, *Ainv);
        sum_check = sum_check + back;
        parts_new.push_back(std::move(part));
        parts_orig.push_back(std::move(back));
    }
    if (!(sum_check == g)) throw std::logic_error("classify_pair: parts do not sum to g");
    return StSplitting{std::move(A), std::move(groups), std::move(parts_new), std::move(parts_orig)};
}

// Multiplicity-(d-1) witness from a Jordan block of size >= 2: in the
// transformed coordinates g_{NN} = 0 for N the last index of the
// block, so the coordinate point x_N = 1 is deeply singular.
WitnessPoint build_witness(const HomPoly& f, const HomPoly& g, const JordanPair& jp) {
    int m = g.var_count();
    RatMatrix A = jp.P.transpose();
    HomPoly g2 = linear_substitute(g, A);

    int N = -1;
    int start = 0;
    while (start < m) {
        int end = start;
        while (end + 1 < m && !rat_is_zero(jp.J(end, end + 1))) ++end;
        if (end > start) { N = end; break; }
        start = end + 1;
    }
    if (N < 0) throw std::logic_error("classify_pair: no Jordan block of size >= 2");

    PolyMatrix H = hessian(g2);
    if (!H.at(N, N).is_zero())
        throw std::logic_error("classify_pair: g_{NN} does not vanish");

    std::vector<Rat> p_new(static_cast<std::size_t>(m), Rat(0));
    p_new[static_cast<std::size_t>(N)] = 1;
    std::vector<Rat> p_orig = mat_vec(A, p_new);

    WitnessPoint wp;
    wp.point = p_orig;
    wp.multiplicity_g = multiplicity_at(g, p_orig);
    wp.multiplicity_f = multiplicity_at(f, p_orig);
    if (wp.multiplicity_g < g.degree() - 1)
        throw std::logic_error("classify_pair: witness multiplicity below d-1");
    return wp;
}

} // namespace

Classification classify_pair(const HomPoly& f, const HomPoly& g) {
    if (f.n() != g.n() || f.degree() != g.degree())
        throw precondition_error("classify_pair: mismatched polynomials");
    if (f.degree() < 3) throw precondition_error("classify_pair: degree must be >= 3");

    Classification out;
    if (auto c = proportionality(f, g)) {
        out.outcome = Outcome::same_hypersurface;
        out.scalar = c;
        return out;
    }

    if (cone_detect(f).is_cone) throw precondition_error("classify_pair: f is a cone");
    if (cone_detect(g).is_cone) throw precondition_error("classify_pair: g is a cone");
    if (!span_equal(gradient_span(f), gradient_span(g)))
        throw precondition_error("classify_pair: gradient spans differ");

    RelationStructure rs = relation_matrix(f, g);
    const EigenReport& rep = rs.report;

    if (rep.is_diagonalizable_over_closure) {
        out.outcome = Outcome::st_type;
        if (rep.splits_over_Q) {
            if (!rs.jordan) throw std::logic_error("classify_pair: missing Jordan data");
            out.st_splitting = build_splitting(g, *rs.jordan);
        }
    } else {
        out.outcome = Outcome::multiplicity_witness;
        if (rep.splits_over_Q) {
            if (!rs.jordan) throw std::logic_error("classify_pair: missing Jordan data");
            out.witness_point = build_witness(f, g, *rs.jordan);
        }
    }
    out.relation = std::move(rs);
    return out;
}

} // namespace jacideal
