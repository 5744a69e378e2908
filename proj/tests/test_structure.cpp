#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jacideal/errors.hpp"
#include "jacideal/structure.hpp"
#include "jacideal/witness.hpp"
#include "test_util.hpp"

using namespace jacideal;
using jtest::P;

namespace {

RatMatrix jordan_block3(const Rat& lambda) {
    RatMatrix J(3, 3);
    for (int i = 0; i < 3; ++i) {
        J(i, i) = lambda;
        if (i < 2) J(i, i + 1) = 1;
    }
    return J;
}

} // namespace

TEST_CASE("cone_detect") {
    ConeReduction c1 = cone_detect(P("x^3 + y^3 + 0*z^3"));
    CHECK(c1.is_cone);
    CHECK(c1.eliminated_index == 2);
    REQUIRE(c1.A.has_value());
    CHECK(partial(linear_substitute(P("x^3 + y^3 + 0*z^3"), *c1.A), 2).is_zero());

    // (x + y)^3 in two variables: partials proportional.
    HomPoly b = P("x + y");
    HomPoly f2 = b * b * b;
    ConeReduction c2 = cone_detect(f2);
    CHECK(c2.is_cone);
    REQUIRE(c2.A.has_value());
    CHECK(partial(linear_substitute(f2, *c2.A), *c2.eliminated_index).is_zero());

    CHECK(!cone_detect(P("x^3 + y^3 + z^3")).is_cone);
}

TEST_CASE("relation_matrix on a diagonal pair") {
    HomPoly f = P("x^3 + y^3 + z^3");
    HomPoly g = P("x^3 + 2*y^3 + 2*z^3");
    RelationStructure rs = relation_matrix(f, g);
    RatMatrix expect(3, 3);
    expect(0, 0) = 1;
    expect(1, 1) = rat(1, 2);
    expect(2, 2) = rat(1, 2);
    CHECK(rs.C == expect);
    CHECK(rs.report.is_diagonalizable_over_closure);
    CHECK(rs.report.splits_over_Q);
}

TEST_CASE("relation_matrix on the unipotent cubic family") {
    HomPoly g = P("x^2*z + x*y^2");
    for (long lam : {1L, 2L, -3L}) {
        HomPoly f = g * Rat(lam) + P("x^2*y", 2);
        RelationStructure rs = relation_matrix(f, g);
        CHECK(rs.C == jordan_block3(Rat(lam)));
        CHECK(!rs.report.is_diagonalizable_over_closure);
        CHECK(rs.report.splits_over_Q);
    }
}

TEST_CASE("relation_matrix identity and errors") {
    HomPoly f = P("x^3 + y^3 + z^3");
    CHECK(relation_matrix(f, f).C == RatMatrix::identity(3));
    CHECK_THROWS_AS(relation_matrix(f, P("x^3 + y^3 + z^3 + x*y*z")), precondition_error);
    CHECK_THROWS_AS(relation_matrix(P("x^3 + y^3 + 0*z^3"), P("x^3 + y^3 + 0*z^3")),
                    precondition_error);
}

TEST_CASE("relation round trip on random conjugated relations") {
    // Build g random non-cone, C invertible with rational spectrum, f by
    // integrating C grad g when possible; fall back to witness pairs.
    WitnessPair wp = jordan_witness(2, 4);
    RelationStructure rs = relation_matrix(wp.f, wp.g);
    CHECK(verify_jordan_relation(wp.f, wp.g, rs.C));
    CHECK(rs.C == wp.J);
}

TEST_CASE("classify: same hypersurface") {
    HomPoly g = P("x^2*z + x*y^2");
    Classification cls = classify_pair(g * Rat(2), g);
    CHECK(cls.outcome == Outcome::same_hypersurface);
    REQUIRE(cls.scalar.has_value());
    CHECK(*cls.scalar == Rat(2));
}

TEST_CASE("classify: diagonal ST splitting") {
    Classification cls = classify_pair(P("x^3 + y^3 + z^3"), P("x^3 + 2*y^3 + 2*z^3"));
    CHECK(cls.outcome == Outcome::st_type);
    REQUIRE(cls.st_splitting.has_value());
    const StSplitting& st = *cls.st_splitting;
    REQUIRE(st.groups.size() == 2);

    // Parts pulled back sum to g and are the expected split.
    HomPoly g = P("x^3 + 2*y^3 + 2*z^3");
    HomPoly sum(2, 3);
    for (const HomPoly& p : st.parts_original) sum = sum + p;
    CHECK(sum == g);
    bool found_x = false, found_yz = false;
    for (const HomPoly& p : st.parts_original) {
        if (p == P("x^3", 2)) found_x = true;
        if (p == P("2*y^3 + 2*z^3")) found_yz = true;
    }
    CHECK(found_x);
    CHECK(found_yz);

    // Cross-group Hessian entries vanish in the new coordinates.
    HomPoly g2 = linear_substitute(g, st.A);
    PolyMatrix H = hessian(g2);
    for (int i : st.groups[0])
        for (int j : st.groups[1]) {
            CHECK(H.at(i, j).is_zero());
            CHECK(H.at(j, i).is_zero());
        }
}

TEST_CASE("classify: unipotent cubic pair multiplicity witness") {
    HomPoly g = P("x^2*z + x*y^2");
    for (long lam : {1L, 2L, -3L}) {
        HomPoly f = g * Rat(lam) + P("x^2*y", 2);
        Classification cls = classify_pair(f, g);
        CHECK(cls.outcome == Outcome::multiplicity_witness);
        REQUIRE(cls.witness_point.has_value());
        const WitnessPoint& wp = *cls.witness_point;
        REQUIRE(wp.point.size() == 3);
        CHECK(rat_is_zero(wp.point[0]));
        CHECK(rat_is_zero(wp.point[1]));
        CHECK(!rat_is_zero(wp.point[2]));
        CHECK(wp.multiplicity_g == 2);
        CHECK(wp.multiplicity_f == 2);
    }
}

TEST_CASE("classify: precondition violations") {
    HomPoly g = P("x^2*z + x*y^2");
    CHECK_THROWS_AS(classify_pair(P("x^2 + y^2 + 0*z^2"), P("x^2 + 0*z^2 + 2*y^2")),
                    precondition_error); // d < 3
    CHECK_THROWS_AS(classify_pair(P("x^3 + y^3 + z^3"), g), precondition_error); // spans differ
    CHECK_THROWS_AS(classify_pair(P("x^3 + y^3 + 0*z^3"), P("x^3 + 2*y^3 + 0*z^3")),
                    precondition_error); // cones
}

TEST_CASE("classify: ST certified without rational splitting data") {
    // grad f = C grad g with C mixing the harmonic cubic x^3 - 3xy^2: the
    // relation block [[1,1],[-1,1]] has eigenvalues 1 +- i, so the outcome is
    // certified by the squarefree minimal polynomial with no splitting data.
    HomPoly g = P("x^3 - 3*x*y^2 + z^3");
    HomPoly f = P("x^3 + y^3 + z^3 - 3*x*y^2 - 3*x^2*y");
    RatMatrix C(3, 3);
    C(0, 0) = 1;
    C(0, 1) = 1;
    C(1, 0) = -1;
    C(1, 1) = 1;
    C(2, 2) = 1;
    REQUIRE(verify_jordan_relation(f, g, C));

    Classification cls = classify_pair(f, g);
    CHECK(cls.outcome == Outcome::st_type);
    CHECK(!cls.st_splitting.has_value());
    REQUIRE(cls.relation.has_value());
    CHECK(cls.relation->C == C);
    CHECK(cls.relation->report.is_diagonalizable_over_closure);
    CHECK(!cls.relation->report.splits_over_Q);
}

TEST_CASE("non-squarefree non-split spectra are representable") {
    // Companion matrix of (t^2-2)^2: the multiplicity branch without rational
    // eigen-data reports exactly this shape of certificate.
    RatMatrix C(4, 4);
    C(0, 3) = -4; // char: t^4 - 4t^2 + 4
    C(1, 0) = 1;
    C(2, 1) = 1;
    C(2, 3) = 4;
    C(3, 2) = 1;
    EigenReport rep = eigen_report(C);
    CHECK(rep.char_poly == UniPoly({Rat(4), Rat(0), Rat(-4), Rat(0), Rat(1)}));
    CHECK(!rep.is_diagonalizable_over_closure);
    CHECK(!rep.splits_over_Q);
    CHECK(rep.rational_eigenvalues.empty());
}

TEST_CASE("multiplicity_at") {
    HomPoly g = P("x^2*z + x*y^2");
    CHECK(multiplicity_at(g, {Rat(0), Rat(0), Rat(1)}) == 2);
    CHECK(multiplicity_at(g, {Rat(1), Rat(0), Rat(0)}) == 1);
    CHECK(multiplicity_at(P("x^3 + y^3 + z^3"), {Rat(1), Rat(0), Rat(0)}) == 0);
    CHECK_THROWS_AS(multiplicity_at(g, {Rat(0), Rat(0), Rat(0)}), precondition_error);
}

TEST_CASE("multiplicity_at invariance") {
    std::mt19937_64 rng(17);
    HomPoly g = P("x^2*z + x*y^2");
    std::vector<Rat> p{Rat(0), Rat(0), Rat(1)};

    // Rescaling the point.
    CHECK(multiplicity_at(g, {Rat(0), Rat(0), rat(-7, 3)}) == 2);

    // Simultaneous coordinate change of f and p.
    for (int rep = 0; rep < 10; ++rep) {
        RatMatrix A = random_invertible_matrix(3, rng(), 4);
        HomPoly g2 = linear_substitute(g, A);
        // New-coordinate point q with p = A q.
        auto q = mat_vec(*inverse(A), p);
        CHECK(multiplicity_at(g2, q) == 2);
    }
}

TEST_CASE("hessian_power_test") {
    auto res = hessian_power_test(P("1/2*x^2*z + 1/2*x*y^2"));
    REQUIRE(res.has_value());
    CHECK(res->ell == P("x", 2));
    CHECK(res->e == 3);
    CHECK(res->c == Rat(-1)); // Hess = -x^3 for the half-normalized witness

    CHECK(!hessian_power_test(P("x^3 + y^3 + z^3")).has_value());

    WitnessPair c1 = case1_family(4, Rat(0), Rat(0));
    auto r2 = hessian_power_test(c1.g);
    REQUIRE(r2.has_value());
    CHECK(r2->ell == P("x", 2));
    CHECK(r2->e == 6); // (d-2)(n+1) = 2*3

    CHECK_THROWS_AS(hessian_power_test(P("x^2 + y^2")), precondition_error);
}

TEST_CASE("hessian_power_test certifies the symbolic identity") {
    WitnessPair wp = jordan_witness(2, 5);
    auto res = hessian_power_test(wp.g);
    REQUIRE(res.has_value());
    // H = c * ell^e exactly.
    HomPoly ell_pow = HomPoly::monomial(Rat(1), {0, 0, 0});
    for (int k = 0; k < res->e; ++k) ell_pow = ell_pow * res->ell;
    CHECK(hessian_det(wp.g) == ell_pow * res->c);
}

TEST_CASE("verify_jordan_relation") {
    HomPoly g = P("x^2*z + x*y^2");
    HomPoly f = g + P("x^2*y", 2);
    CHECK(verify_jordan_relation(f, g, jordan_block3(Rat(1))));
    CHECK(!verify_jordan_relation(f, g, RatMatrix::identity(3)));
    CHECK(verify_jordan_relation(f, f, RatMatrix::identity(3)));

    // The n=3 closed form with its 4x4 Jordan block.
    WitnessPair jw = jordan_witness(3, 4);
    CHECK(verify_jordan_relation(jw.f, jw.g, jw.J));
}

TEST_CASE("witness families classify to multiplicity d-1 at the coordinate point") {
    for (int d = 3; d <= 5; ++d) {
        WitnessPair wp = jordan_witness(2, d);
        Classification cls = classify_pair(wp.f, wp.g);
        CHECK(cls.outcome == Outcome::multiplicity_witness);
        REQUIRE(cls.witness_point.has_value());
        CHECK(cls.witness_point->multiplicity_g == d - 1);
        // The point is the last coordinate point.
        for (int i = 0; i < 2; ++i) CHECK(rat_is_zero(cls.witness_point->point[static_cast<std::size_t>(i)]));
        CHECK(!rat_is_zero(cls.witness_point->point[2]));
    }
    WitnessPair c1 = case1_family(4, rat(1, 2), Rat(-2));
    Classification cls = classify_pair(c1.f, c1.g);
    CHECK(cls.outcome == Outcome::multiplicity_witness);
    REQUIRE(cls.witness_point.has_value());
    CHECK(cls.witness_point->multiplicity_g == 3);
}

TEST_CASE("single-block Hessian zero pattern (i+j >= n+1)") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 3; d <= 4; ++d) {
            WitnessPair wp = jordan_witness(n, d);
            PolyMatrix H = hessian(wp.g);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    if (i + j >= n + 1) CHECK(H.at(i, j).is_zero());
        }
}

TEST_CASE("classify: mixed block structure (Jordan part plus separate eigenvalue)") {
    // grad f = C grad g for C = diag(J_2(1), 2): integrability forces
    // g = a x^d + b x^{d-1} y + c z^d, f = (a + b/d) x^d + b x^{d-1} y + 2c z^d.
    HomPoly g = P("x^3 + 3*x^2*y + z^3");
    HomPoly f = P("2*x^3 + 3*x^2*y + 2*z^3");
    RatMatrix C(3, 3);
    C(0, 0) = 1;
    C(0, 1) = 1;
    C(1, 1) = 1;
    C(2, 2) = 2;
    REQUIRE(verify_jordan_relation(f, g, C));

    Classification cls = classify_pair(f, g);
    CHECK(cls.outcome == Outcome::multiplicity_witness);
    REQUIRE(cls.witness_point.has_value());
    // The singular point of V(g) is [0:1:0], of multiplicity d-1 = 2.
    const auto& p = cls.witness_point->point;
    CHECK(rat_is_zero(p[0]));
    CHECK(!rat_is_zero(p[1]));
    CHECK(rat_is_zero(p[2]));
    CHECK(cls.witness_point->multiplicity_g == 2);
    CHECK(multiplicity_at(g, {Rat(0), Rat(1), Rat(0)}) == 2);
}

TEST_CASE("classification is covariant under linear substitution") {
    std::mt19937_64 rng(271);
    for (int rep = 0; rep < 5; ++rep) {
        RatMatrix S = random_invertible_matrix(3, rng(), 3);

        // Jordan-branch pair in scrambled coordinates: the relation matrix
        // becomes S^t J S^{-t}, still non-diagonalizable.
        WitnessPair wp = jordan_witness(2, 4);
        HomPoly f2 = linear_substitute(wp.f, S);
        HomPoly g2 = linear_substitute(wp.g, S);
        Classification cls = classify_pair(f2, g2);
        CHECK(cls.outcome == Outcome::multiplicity_witness);
        REQUIRE(cls.witness_point.has_value());
        CHECK(cls.witness_point->multiplicity_g >= 3);
        CHECK(multiplicity_at(g2, cls.witness_point->point) >= 3);

        // Diagonal-branch pair in scrambled coordinates.
        HomPoly fd = linear_substitute(P("x^3 + y^3 + z^3"), S);
        HomPoly gd = linear_substitute(P("x^3 + 2*y^3 + 2*z^3"), S);
        Classification cd = classify_pair(fd, gd);
        CHECK(cd.outcome == Outcome::st_type);
        REQUIRE(cd.st_splitting.has_value());
        HomPoly sum(2, 3);
        for (const HomPoly& p : cd.st_splitting->parts_original) sum = sum + p;
        CHECK(sum == gd);
    }
}

TEST_CASE("indeterminate_over_Q is never produced") {
    std::vector<Classification> results;
    results.push_back(classify_pair(P("x^3 + y^3 + z^3"), P("x^3 + 2*y^3 + 2*z^3")));
    results.push_back(classify_pair(P("x^2*z + x*y^2 + x^2*y"), P("x^2*z + x*y^2")));
    results.push_back(classify_pair(P("x^3 + y^3 + z^3 - 3*x*y^2 - 3*x^2*y"),
                                    P("x^3 - 3*x*y^2 + z^3")));
    for (int d = 3; d <= 5; ++d) {
        WitnessPair wp = jordan_witness(2, d);
        results.push_back(classify_pair(wp.f, wp.g));
        results.push_back(classify_pair(wp.g * rat(5, 3), wp.g));
    }
    for (const Classification& cls : results)
        CHECK(cls.outcome != Outcome::indeterminate_over_Q);
}

TEST_CASE("proportionality") {
    HomPoly g = P("x^2*z + x*y^2");
    auto c = proportionality(g * rat(-3, 7), g);
    REQUIRE(c.has_value());
    CHECK(*c == rat(-3, 7));
    CHECK(!proportionality(g + P("x^2*y", 2), g).has_value());
    CHECK(!proportionality(HomPoly(2, 3), g).has_value());
}
