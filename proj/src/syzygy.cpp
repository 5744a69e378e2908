#include "jacideal/syzygy.hpp"

#include <stdexcept>

#include "jacideal/errors.hpp"
#include "jacideal/polyspace.hpp"
#include "jacideal/ratmatrix.hpp"

namespace jacideal {

SyzygySpace syzygies(const HomPoly& f, int m) {
    if (m < 0) throw std::invalid_argument("syzygies: negative degree");
    int n = f.n();
    int d = f.degree();
    auto grad = gradient(f);
    auto dom_monomials = monomials_of_degree(n, m);
    auto img_monomials = monomials_of_degree(n, m + (d > 0 ? d - 1 : 0));
    int block = static_cast<int>(dom_monomials.size());
    int cols = (n + 1) * block;
    int rows = static_cast<int>(img_monomials.size());

    // Column (i*block + j) is the image of x^{a_j} e_i, i.e. x^{a_j} f_i.
    RatMatrix M(rows, cols);
    for (int i = 0; i <= n; ++i) {
        if (grad[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < block; ++j) {
            HomPoly g = grad[static_cast<std::size_t>(i)];
            const ExponentVector& a = dom_monomials[static_cast<std::size_t>(j)];
            for (int v = 0; v <= n; ++v)
                for (int k = 0; k < a[v]; ++k) g = multiply_by_variable(g, v);
            auto col = coordinate_vector(g, img_monomials);
            for (int r = 0; r < rows; ++r) M(r, i * block + j) = col[static_cast<std::size_t>(r)];
        }
    }

    SyzygySpace out;
    out.m = m;
    for (const auto& v : kernel(M)) {
        std::vector<HomPoly> tuple;
        tuple.reserve(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) {
            std::vector<Rat> coords(v.begin() + static_cast<std::ptrdiff_t>(i) * block,
                                    v.begin() + static_cast<std::ptrdiff_t>(i + 1) * block);
            tuple.push_back(from_coordinates(n, m, coords, dom_monomials));
        }
        out.basis.push_back(std::move(tuple));
    }
    return out;
}

bool is_syzygy(const HomPoly& f, const std::vector<HomPoly>& tuple) {
    if (static_cast<int>(tuple.size()) != f.var_count())
        throw std::invalid_argument("is_syzygy: tuple arity mismatch");
    auto grad = gradient(f);
    int m = tuple.front().degree();
    HomPoly acc(f.n(), m + (f.degree() > 0 ? f.degree() - 1 : 0));
    for (std::size_t i = 0; i < tuple.size(); ++i)
        acc = acc + tuple[i] * grad[i];
    return acc.is_zero();
}

int mdr0(const HomPoly& f) {
    if (f.is_zero()) throw precondition_error("mdr0: zero polynomial");
    if (f.degree() < 1) throw precondition_error("mdr0: degree must be at least 1");
    if (f.n() < 1)
        throw precondition_error("mdr0: a single nonzero partial admits no relations");
    for (int m = 0;; ++m) {
        if (syzygies(f, m).dimension() > 0) return m;
        // With n >= 1, either some partial vanishes (unit relation at m = 0)
        // or the Koszul relation appears by m = d-1.
        if (m >= f.degree() - 1)
            throw std::logic_error("mdr0: no relation up to the Koszul degree");
    }
}

} // namespace jacideal
