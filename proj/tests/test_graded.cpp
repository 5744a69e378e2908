#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "jacideal/polyspace.hpp"
#include "jacideal/syzygy.hpp"
#include "jacideal/witness.hpp"
#include "test_util.hpp"

using namespace jacideal;
using jtest::P;

// ---------------------------------------------------------------------------
// Independent dense-elimination oracle for syzygy dimensions. Shares no code
// with the library: its own monomial order (ascending lex), its own
// differentiation, its own elimination.
namespace oracle {

using Mono = std::vector<int>;
using Poly = std::map<Mono, mpq_class>;

void enumerate(int vars, int deg, Mono& cur, std::vector<Mono>& out) {
    if (vars == 1) {
        cur.push_back(deg);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= deg; ++e) { // ascending, unlike the library
        cur.push_back(e);
        enumerate(vars - 1, deg - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Mono> monomials(int vars, int deg) {
    std::vector<Mono> out;
    Mono cur;
    enumerate(vars, deg, cur, out);
    return out;
}

Poly diff(const Poly& f, int var) {
    Poly out;
    for (const auto& [m, c] : f) {
        if (m[static_cast<std::size_t>(var)] == 0) continue;
        Mono m2 = m;
        mpq_class c2 = c * m2[static_cast<std::size_t>(var)];
        m2[static_cast<std::size_t>(var)] -= 1;
        out[m2] += c2;
    }
    return out;
}

Poly shift(const Poly& f, const Mono& by) {
    Poly out;
    for (const auto& [m, c] : f) {
        Mono m2 = m;
        for (std::size_t i = 0; i < m2.size(); ++i) m2[i] += by[i];
        out[m2] = c;
    }
    return out;
}

int rank(std::vector<std::vector<mpq_class>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][c] != 0) { sel = r; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
            mpq_class factor = rows[r][c] / rows[static_cast<std::size_t>(rank)][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] -= factor * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

// Dimension of the degree-m syzygy space of f (given as a coefficient map).
int syzygy_dimension(const Poly& f, int vars, int d, int m) {
    std::vector<Poly> partials;
    for (int i = 0; i < vars; ++i) partials.push_back(diff(f, i));
    auto dom = monomials(vars, m);
    auto img = monomials(vars, m + d - 1);
    std::map<Mono, std::size_t> img_index;
    for (std::size_t r = 0; r < img.size(); ++r) img_index[img[r]] = r;

    // Generators as rows; the kernel dimension is columns minus rank.
    std::vector<std::vector<mpq_class>> rows;
    for (int i = 0; i < vars; ++i)
        for (const Mono& mu : dom) {
            Poly gen = shift(partials[static_cast<std::size_t>(i)], mu);
            std::vector<mpq_class> row(img.size(), 0);
            for (const auto& [mono, c] : gen) row[img_index.at(mono)] = c;
            rows.push_back(std::move(row));
        }
    int cols_total = vars * static_cast<int>(dom.size());
    return cols_total - rank(std::move(rows));
}

Poly from_hompoly(const HomPoly& f) {
    Poly out;
    for (const auto& [ev, c] : f.terms()) out[ev.exps] = c;
    return out;
}

} // namespace oracle
// ---------------------------------------------------------------------------

TEST_CASE("dim_graded") {
    CHECK(dim_graded(2, 3) == 10);
    CHECK(dim_graded(2, 2) == 6);
    CHECK(dim_graded(5, 0) == 1);
    CHECK(dim_graded(3, 4) == 35);
}

TEST_CASE("span basics") {
    PolySpace s = PolySpace::span({P("3*x^2", 2), P("3*y^2", 2), P("3*z^2", 2)});
    CHECK(s.dimension() == 3);
    CHECK(s.basis()[0] == P("x^2", 2));
    CHECK(s.basis()[1] == P("y^2", 2));
    CHECK(s.basis()[2] == P("z^2", 2));

    // Cone: f(x,y,z) = h(x,y) has dependent partials.
    PolySpace cone = PolySpace::span(gradient(P("x^3 + x*y^2 + 0*z^3")));
    CHECK(cone.dimension() <= 2);

    HomPoly p = P("x^2 + x*y");
    PolySpace one = PolySpace::span({p, p * Rat(2)});
    CHECK(one.dimension() == 1);
}

TEST_CASE("span canonicality under shuffle and scale") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<HomPoly> polys;
        for (int k = 0; k < 4; ++k) polys.push_back(random_poly(2, 3, rng(), 5));
        PolySpace a = PolySpace::span(polys);
        std::shuffle(polys.begin(), polys.end(), rng);
        for (HomPoly& q : polys) {
            long c = static_cast<long>(rng() % 5) + 1;
            q = q * Rat(c);
        }
        PolySpace b = PolySpace::span(polys);
        CHECK(span_equal(a, b));
        CHECK(a == b);
    }
}

TEST_CASE("span_equal on the unipotent cubic pair") {
    HomPoly g = P("x^2*z + x*y^2");
    HomPoly f = g + P("x^2*y", 2);
    CHECK(span_equal(gradient_span(f), gradient_span(g)));
    CHECK(span_equal(gradient_span(P("x^3 + y^3 + z^3")),
                     gradient_span(P("x^3 + 2*y^3 + 3*z^3"))));
    CHECK(!span_equal(gradient_span(P("x^3 + y^3 + z^3")),
                      gradient_span(P("x^3 + y^3 + z^3 + x*y*z"))));
}

TEST_CASE("jacobian_component") {
    HomPoly f = P("x^3 + y^3 + z^3");
    CHECK(jacobian_component(f, 2) == gradient_span(f));
    CHECK(jacobian_component(f, 2) == PolySpace::span(gradient(f)));

    PolySpace ep = jacobian_component(f, 3);
    CHECK(ep.dimension() == 9);
    CHECK(ep.ambient_dim() == 10);
    CHECK(!ep.contains(P("x*y*z")));
    CHECK(ep.contains(P("x^2*y + 0*z^3")));

    // Below d-1 the component is zero.
    CHECK(jacobian_component(f, 1).dimension() == 0);

    // E(f) = E(g) implies E'(f) = E'(g) on the unipotent cubic pair.
    HomPoly g = P("x^2*z + x*y^2");
    HomPoly fg = g + P("x^2*y", 2);
    CHECK(span_equal(jacobian_component(fg, 3), jacobian_component(g, 3)));
}

TEST_CASE("ideal monotonicity: variable multiples stay inside") {
    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 10; ++rep) {
        HomPoly f = random_poly(2, 3, rng(), 4);
        if (f.is_zero()) continue;
        PolySpace low = jacobian_component(f, 3);
        PolySpace high = jacobian_component(f, 4);
        for (const HomPoly& b : low.basis())
            for (int v = 0; v <= 2; ++v)
                CHECK(high.contains(multiply_by_variable(b, v)));
    }
}

TEST_CASE("syzygies examples") {
    CHECK(syzygies(P("x^3 + y^3 + z^3"), 1).dimension() == 0);

    HomPoly g = P("x^2*z + x*y^2");
    SyzygySpace s1 = syzygies(g, 1);
    CHECK(s1.dimension() > 0);
    std::vector<HomPoly> expected{P("x", 2), P("-1/2*y", 2), P("-2*z", 2)};
    CHECK(is_syzygy(g, expected));
    // The stated relation lies in the computed space.
    {
        auto monoms = monomials_of_degree(2, 1);
        int block = static_cast<int>(monoms.size());
        EchelonSpan span(3 * block);
        for (const auto& tuple : s1.basis) {
            std::vector<Rat> flat;
            for (const auto& a : tuple) {
                auto part = coordinate_vector(a, monoms);
                flat.insert(flat.end(), part.begin(), part.end());
            }
            span.add(flat);
        }
        std::vector<Rat> target;
        for (const auto& a : expected) {
            auto part = coordinate_vector(a, monoms);
            target.insert(target.end(), part.begin(), part.end());
        }
        CHECK(span.contains(target));
    }
}

TEST_CASE("Koszul relations are present at degree d-1") {
    std::mt19937_64 rng(97);
    for (int rep = 0; rep < 8; ++rep) {
        HomPoly f = random_poly(2, 3, rng(), 4);
        auto grad = gradient(f);
        if (grad[0].is_zero() || grad[1].is_zero()) continue;
        std::vector<HomPoly> koszul{grad[1], -grad[0], HomPoly(2, 2)};
        CHECK(is_syzygy(f, koszul));
        SyzygySpace s = syzygies(f, 2);
        CHECK(s.dimension() > 0);
    }
}

TEST_CASE("syzygy multiply-back") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 10; ++rep) {
        HomPoly f = random_poly(2, 4, rng(), 5);
        if (f.is_zero()) continue;
        for (int m = 0; m <= 3; ++m)
            for (const auto& tuple : syzygies(f, m).basis)
                CHECK(is_syzygy(f, tuple));
    }
}

TEST_CASE("mdr0") {
    CHECK(mdr0(P("x^3 + y^3 + z^3")) == 2);
    CHECK(mdr0(P("x^2*z + x*y^2")) == 1);
    // Cone with an identically zero partial.
    CHECK(mdr0(P("x^3 + y^3 + 0*z^3")) == 0);
    CHECK_THROWS(mdr0(HomPoly(2, 3)));
}

TEST_CASE("mdr0 of the unipotent cubic witness is 1, not 0") {
    // Degree-0 relations would mean dependent partials; RREF rank is 3.
    HomPoly g = P("x^2*z + x*y^2");
    CHECK(gradient_span(g).dimension() == 3);
    CHECK(syzygies(g, 0).dimension() == 0);
}

TEST_CASE("Koszul bound on random inputs") {
    std::mt19937_64 rng(107);
    for (int rep = 0; rep < 40; ++rep) {
        HomPoly f = random_poly(2, 3 + static_cast<int>(rng() % 2), rng(), 6);
        if (f.is_zero()) continue;
        auto grad = gradient(f);
        int nonzero = 0;
        for (const auto& fi : grad)
            if (!fi.is_zero()) ++nonzero;
        if (nonzero < 2) continue;
        CHECK(mdr0(f) <= f.degree() - 1);
    }
}

TEST_CASE("syzygy dimensions agree with the dense oracle (n=2, d<=4, m<=3)") {
    std::mt19937_64 rng(113);
    std::vector<HomPoly> cases{
        P("x^3 + y^3 + z^3"),
        P("x^2*z + x*y^2"),
        P("x^4 + y^4 + z^4"),
        P("x^2*y^2 + z^4"),
    };
    for (int rep = 0; rep < 6; ++rep) cases.push_back(random_poly(2, 3 + (rep % 2), rng(), 4));
    for (const HomPoly& f : cases) {
        if (f.is_zero()) continue;
        for (int m = 0; m <= 3; ++m) {
            int lib = syzygies(f, m).dimension();
            int ora = oracle::syzygy_dimension(oracle::from_hompoly(f), 3, f.degree(), m);
            CHECK(lib == ora);
        }
    }
}

TEST_CASE("E equality implies E-prime equality on witness pairs") {
    std::mt19937_64 rng(131);
    for (int d = 3; d <= 5; ++d) {
        WitnessPair wp = case1_family(d, rat(static_cast<long>(rng() % 7) - 3),
                                      rat(static_cast<long>(rng() % 7) - 3));
        REQUIRE(span_equal(gradient_span(wp.f), gradient_span(wp.g)));
        CHECK(span_equal(jacobian_component(wp.f, d), jacobian_component(wp.g, d)));
    }
    WitnessPair jw = jordan_witness(3, 4);
    REQUIRE(span_equal(gradient_span(jw.f), gradient_span(jw.g)));
    CHECK(span_equal(jacobian_component(jw.f, 4), jacobian_component(jw.g, 4)));
}

TEST_CASE("PolySpace RREF canonical form invariants") {
    std::mt19937_64 rng(139);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<HomPoly> polys;
        for (int k = 0; k < 3; ++k) polys.push_back(random_poly(2, 3, rng(), 5));
        PolySpace s = PolySpace::span(polys);
        // Leading monomials strictly decreasing, pivots normalized to 1.
        GradedLexGreater gt;
        for (std::size_t i = 0; i < s.basis().size(); ++i) {
            const HomPoly& b = s.basis()[i];
            if (b.is_zero()) continue;
            CHECK(b.terms().begin()->second == Rat(1));
            if (i + 1 < s.basis().size())
                CHECK(gt(b.terms().begin()->first,
                         s.basis()[i + 1].terms().begin()->first));
        }
        // Pivot columns cleared: no other basis row contains a pivot monomial.
        for (std::size_t i = 0; i < s.basis().size(); ++i)
            for (std::size_t j = 0; j < s.basis().size(); ++j) {
                if (i == j) continue;
                CHECK(rat_is_zero(s.basis()[j].coeff(s.basis()[i].terms().begin()->first)));
            }
    }
}
