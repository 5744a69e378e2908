#include "jacideal/polyspace.hpp"

#include <stdexcept>

namespace jacideal {

long long dim_graded(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("dim_graded: bad arguments");
    // C(n+m, n) without overflow at desk scale.
    long long num = 1;
    for (int k = 1; k <= n; ++k) {
        num *= (m + k);
        num /= k;
    }
    return num;
}

std::vector<Rat> coordinate_vector(const HomPoly& f, const std::vector<ExponentVector>& monomials) {
    std::vector<Rat> v(monomials.size(), Rat(0));
    for (std::size_t j = 0; j < monomials.size(); ++j) v[j] = f.coeff(monomials[j]);
    return v;
}

HomPoly from_coordinates(int n, int degree, const std::vector<Rat>& coords,
                         const std::vector<ExponentVector>& monomials) {
    if (coords.size() != monomials.size())
        throw std::invalid_argument("from_coordinates: size mismatch");
    HomPoly::TermMap t;
    for (std::size_t j = 0; j < monomials.size(); ++j)
        if (!rat_is_zero(coords[j])) t.emplace(monomials[j], coords[j]);
    return HomPoly::from_terms(n, degree, std::move(t));
}

PolySpace PolySpace::zero(int n, int degree) { return PolySpace(n, degree); }

PolySpace PolySpace::span(const std::vector<HomPoly>& polys) {
    if (polys.empty()) throw std::invalid_argument("PolySpace::span: empty list (use zero)");
    int n = polys.front().n();
    int degree = polys.front().degree();
    for (const HomPoly& f : polys)
        if (f.n() != n || f.degree() != degree)
            throw std::invalid_argument("PolySpace::span: mixed degrees or variable counts");

    auto monomials = monomials_of_degree(n, degree);
    RatMatrix M(static_cast<int>(polys.size()), static_cast<int>(monomials.size()));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        auto row = coordinate_vector(polys[i], monomials);
        for (std::size_t j = 0; j < row.size(); ++j)
            M(static_cast<int>(i), static_cast<int>(j)) = row[j];
    }
    RrefResult rr = rref(M);
    PolySpace out(n, degree);
    for (int i = 0; i < rr.rank; ++i) {
        std::vector<Rat> row(monomials.size());
        for (std::size_t j = 0; j < monomials.size(); ++j) row[j] = rr.R(i, static_cast<int>(j));
        out.basis_.push_back(from_coordinates(n, degree, row, monomials));
    }
    return out;
}

long long PolySpace::ambient_dim() const { return dim_graded(n_, degree_); }

bool PolySpace::contains(const HomPoly& f) const {
    if (f.n() != n_ || f.degree() != degree_) return false;
    if (f.is_zero()) return true;
    auto monomials = monomials_of_degree(n_, degree_);
    EchelonSpan span(static_cast<int>(monomials.size()));
    for (const HomPoly& b : basis_) span.add(coordinate_vector(b, monomials));
    return span.contains(coordinate_vector(f, monomials));
}

bool span_equal(const PolySpace& a, const PolySpace& b) {
    if (a.n() != b.n() || a.degree() != b.degree())
        throw std::invalid_argument("span_equal: mismatched ambient spaces");
    return a == b;
}

PolySpace jacobian_component(const HomPoly& f, int m) {
    int d = f.degree();
    if (m < 0) return PolySpace::zero(f.n(), 0);
    if (m < d - 1) return PolySpace::zero(f.n(), m);
    auto grad = gradient(f);
    auto shifts = monomials_of_degree(f.n(), m - (d - 1));
    std::vector<HomPoly> generators;
    for (const HomPoly& fi : grad) {
        if (fi.is_zero()) continue;
        for (const ExponentVector& a : shifts) {
            HomPoly g = fi;
            for (int v = 0; v <= f.n(); ++v)
                for (int k = 0; k < a[v]; ++k) g = multiply_by_variable(g, v);
            generators.push_back(std::move(g));
        }
    }
    if (generators.empty()) return PolySpace::zero(f.n(), m);
    return PolySpace::span(generators);
}

PolySpace gradient_span(const HomPoly& f) { return jacobian_component(f, f.degree() - 1); }

} // namespace jacideal
