#include "jacideal/hompoly.hpp"

#include <numeric>
#include <stdexcept>

#include "jacideal/ratmatrix.hpp"

namespace jacideal {

int ExponentVector::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

namespace {

void enumerate_rec(int vars_left, int deg_left, std::vector<int>& prefix,
                   std::vector<ExponentVector>& out) {
    if (vars_left == 1) {
        prefix.push_back(deg_left);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = deg_left; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_rec(vars_left - 1, deg_left - e, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<ExponentVector> monomials_of_degree(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<ExponentVector> out;
    std::vector<int> prefix;
    enumerate_rec(n + 1, m, prefix, out);
    return out;
}

HomPoly::HomPoly(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0 || degree < 0) throw std::invalid_argument("HomPoly: bad n or degree");
}

HomPoly HomPoly::monomial(const Rat& c, const std::vector<int>& exps) {
    if (exps.empty()) throw std::invalid_argument("HomPoly::monomial: empty exponents");
    ExponentVector ev(exps);
    HomPoly f(static_cast<int>(exps.size()) - 1, ev.degree());
    if (!rat_is_zero(c)) f.terms_.emplace(std::move(ev), c);
    f.check_invariants();
    return f;
}

HomPoly HomPoly::from_terms(int n, int degree, TermMap terms) {
    HomPoly f(n, degree);
    for (auto it = terms.begin(); it != terms.end();) {
        if (rat_is_zero(it->second)) it = terms.erase(it);
        else ++it;
    }
    f.terms_ = std::move(terms);
    f.check_invariants();
    return f;
}

void HomPoly::check_invariants() const {
    for (const auto& [ev, c] : terms_) {
        if (ev.size() != n_ + 1) throw std::logic_error("HomPoly: exponent arity mismatch");
        if (ev.degree() != degree_) throw std::logic_error("HomPoly: inhomogeneous term");
        if (rat_is_zero(c)) throw std::logic_error("HomPoly: stored zero coefficient");
        for (int e : ev.exps)
            if (e < 0) throw std::logic_error("HomPoly: negative exponent");
    }
}

Rat HomPoly::coeff(const ExponentVector& ev) const {
    auto it = terms_.find(ev);
    return it == terms_.end() ? Rat(0) : it->second;
}

HomPoly HomPoly::operator-() const {
    TermMap t;
    for (const auto& [ev, c] : terms_) t.emplace(ev, -c);
    return from_terms(n_, degree_, std::move(t));
}

HomPoly HomPoly::operator+(const HomPoly& rhs) const {
    if (n_ != rhs.n_ || degree_ != rhs.degree_)
        throw std::invalid_argument("HomPoly +: mixed degrees or variable counts");
    TermMap t = terms_;
    for (const auto& [ev, c] : rhs.terms_) {
        auto [it, fresh] = t.emplace(ev, c);
        if (!fresh) {
            it->second += c;
            if (rat_is_zero(it->second)) t.erase(it);
        }
    }
    return from_terms(n_, degree_, std::move(t));
}

HomPoly HomPoly::operator-(const HomPoly& rhs) const { return *this + (-rhs); }

HomPoly HomPoly::operator*(const HomPoly& rhs) const {
    if (n_ != rhs.n_)
        throw std::invalid_argument("HomPoly *: variable counts differ");
    TermMap t;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            ExponentVector ev;
            ev.exps.resize(ea.exps.size());
            for (std::size_t i = 0; i < ev.exps.size(); ++i)
                ev.exps[i] = ea.exps[i] + eb.exps[i];
            Rat c = ca * cb;
            auto [it, fresh] = t.emplace(std::move(ev), c);
            if (!fresh) {
                it->second += c;
                if (rat_is_zero(it->second)) t.erase(it);
            }
        }
    }
    return from_terms(n_, degree_ + rhs.degree_, std::move(t));
}

HomPoly HomPoly::operator*(const Rat& c) const {
    if (rat_is_zero(c)) return HomPoly(n_, degree_);
    TermMap t;
    for (const auto& [ev, cf] : terms_) t.emplace(ev, cf * c);
    return from_terms(n_, degree_, std::move(t));
}

HomPoly HomPoly::embed(int new_n) const {
    if (new_n < n_) throw std::invalid_argument("HomPoly::embed: shrinking ambient ring");
    TermMap t;
    for (const auto& [ev, c] : terms_) {
        ExponentVector w = ev;
        w.exps.resize(new_n + 1, 0);
        t.emplace(std::move(w), c);
    }
    return from_terms(new_n, degree_, std::move(t));
}

PolyMatrix::PolyMatrix(int rows, int cols, int n, int entry_degree)
    : rows_(rows), cols_(cols), n_(n), entry_degree_(entry_degree),
      entries_(static_cast<std::size_t>(rows) * cols, HomPoly(n, entry_degree)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("PolyMatrix: bad shape");
}

const HomPoly& PolyMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void PolyMatrix::set(int i, int j, HomPoly value) {
    if (value.n() != n_ || value.degree() != entry_degree_)
        throw std::invalid_argument("PolyMatrix::set: entry degree mismatch");
    entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(value);
}

namespace {

// Cofactor expansion over the rows, memoized on the set of open columns.
HomPoly det_rec(const PolyMatrix& M, int row, unsigned mask,
                std::map<unsigned, HomPoly>& memo, int n, int entry_degree) {
    int size = M.rows();
    if (row == size) return HomPoly::monomial(Rat(1), std::vector<int>(n + 1, 0));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    HomPoly acc(n, entry_degree * (size - row));
    int pos = 0;
    for (int j = 0; j < size; ++j) {
        if (!(mask & (1u << j))) continue;
        const HomPoly& e = M.at(row, j);
        if (!e.is_zero()) {
            HomPoly sub = det_rec(M, row + 1, mask & ~(1u << j), memo, n, entry_degree);
            HomPoly term = e * sub;
            acc = (pos % 2 == 0) ? acc + term : acc - term;
        }
        ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

HomPoly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::determinant: not square");
    if (rows_ > 31) throw std::invalid_argument("PolyMatrix::determinant: too large");
    std::map<unsigned, HomPoly> memo;
    return det_rec(*this, 0, (1u << rows_) - 1, memo, n_, entry_degree_);
}

HomPoly partial(const HomPoly& f, int i) {
    if (i < 0 || i > f.n()) throw std::invalid_argument("partial: variable index out of range");
    int dd = f.degree() > 0 ? f.degree() - 1 : 0;
    HomPoly::TermMap t;
    for (const auto& [ev, c] : f.terms()) {
        int e = ev[i];
        if (e == 0) continue;
        ExponentVector w = ev;
        w.exps[static_cast<std::size_t>(i)] = e - 1;
        t.emplace(std::move(w), c * e);
    }
    return HomPoly::from_terms(f.n(), dd, std::move(t));
}

std::vector<HomPoly> gradient(const HomPoly& f) {
    std::vector<HomPoly> g;
    g.reserve(static_cast<std::size_t>(f.var_count()));
    for (int i = 0; i <= f.n(); ++i) g.push_back(partial(f, i));
    return g;
}

PolyMatrix hessian(const HomPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("hessian: degree < 2");
    int m = f.var_count();
    PolyMatrix H(m, m, f.n(), f.degree() - 2);
    for (int i = 0; i < m; ++i) {
        HomPoly fi = partial(f, i);
        for (int j = i; j < m; ++j) {
            HomPoly fij = partial(fi, j);
            H.set(i, j, fij);
            if (j != i) H.set(j, i, fij);
        }
    }
    return H;
}

HomPoly hessian_det(const HomPoly& f) { return hessian(f).determinant(); }

HomPoly linear_substitute(const HomPoly& f, const RatMatrix& A) {
    int m = f.var_count();
    if (A.rows() != m || A.cols() != m)
        throw std::invalid_argument("linear_substitute: matrix must be (n+1)x(n+1)");

    // Row i of A gives the image of x_i as a linear form.
    std::vector<HomPoly> image;
    image.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        HomPoly::TermMap t;
        for (int j = 0; j < m; ++j) {
            if (rat_is_zero(A(i, j))) continue;
            std::vector<int> e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(j)] = 1;
            t.emplace(ExponentVector(std::move(e)), A(i, j));
        }
        image.push_back(HomPoly::from_terms(f.n(), 1, std::move(t)));
    }

    // Powers of each image form, filled on demand.
    std::vector<std::vector<HomPoly>> pow(static_cast<std::size_t>(m));
    auto power = [&](int i, int e) -> const HomPoly& {
        auto& cache = pow[static_cast<std::size_t>(i)];
        if (cache.empty())
            cache.push_back(HomPoly::monomial(Rat(1), std::vector<int>(m, 0)));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * image[static_cast<std::size_t>(i)]);
        return cache[static_cast<std::size_t>(e)];
    };

    HomPoly acc(f.n(), f.degree());
    for (const auto& [ev, c] : f.terms()) {
        HomPoly term = HomPoly::monomial(c, std::vector<int>(static_cast<std::size_t>(m), 0));
        for (int i = 0; i < m; ++i)
            if (ev[i] > 0) term = term * power(i, ev[i]);
        acc = acc + term;
    }
    return acc;
}

Rat evaluate(const HomPoly& f, const std::vector<Rat>& p) {
    if (static_cast<int>(p.size()) != f.var_count())
        throw std::invalid_argument("evaluate: point arity mismatch");
    Rat acc(0);
    for (const auto& [ev, c] : f.terms()) {
        Rat t = c;
        for (int i = 0; i <= f.n(); ++i)
            for (int k = 0; k < ev[i]; ++k) t *= p[static_cast<std::size_t>(i)];
        acc += t;
    }
    return acc;
}

bool euler_check(const HomPoly& f) {
    if (f.degree() == 0) return true; // both sides vanish
    HomPoly acc(f.n(), f.degree());
    for (int i = 0; i <= f.n(); ++i)
        acc = acc + multiply_by_variable(partial(f, i), i);
    return acc == f * Rat(f.degree());
}

HomPoly multiply_by_variable(const HomPoly& f, int i) {
    if (i < 0 || i > f.n()) throw std::invalid_argument("multiply_by_variable: bad index");
    HomPoly::TermMap t;
    for (const auto& [ev, c] : f.terms()) {
        ExponentVector w = ev;
        ++w.exps[static_cast<std::size_t>(i)];
        t.emplace(std::move(w), c);
    }
    return HomPoly::from_terms(f.n(), f.degree() + 1, std::move(t));
}

bool divisible_by_variable_power(const HomPoly& f, int i, int k) {
    if (i < 0 || i > f.n()) throw std::invalid_argument("divisible_by_variable_power: bad index");
    for (const auto& [ev, c] : f.terms()) {
        (void)c;
        if (ev[i] < k) return false;
    }
    return true;
}

} // namespace jacideal
