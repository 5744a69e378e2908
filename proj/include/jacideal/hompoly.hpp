#ifndef JACIDEAL_HOMPOLY_HPP
#define JACIDEAL_HOMPOLY_HPP

#include <map>
#include <vector>

#include "jacideal/rat.hpp"

namespace jacideal {

class RatMatrix;

// Exponent vector of a monomial in x_0..x_n.
struct ExponentVector {
    std::vector<int> exps;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> e) : exps(std::move(e)) {}

    int degree() const;
    int size() const { return static_cast<int>(exps.size()); }
    int operator[](int i) const { return exps[static_cast<std::size_t>(i)]; }

    bool operator==(const ExponentVector&) const = default;
};

// Graded lexicographic order with x_0 > x_1 > ... > x_n, used in descending
// direction so that map iteration starts at the leading monomial.
struct GradedLexGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

// All monomials of total degree m in x_0..x_n, descending graded-lex.
std::vector<ExponentVector> monomials_of_degree(int n, int m);

// Homogeneous polynomial with exact rational coefficients in x_0..x_n.
// Immutable after construction; stored coefficients are never zero; the zero
// polynomial keeps an explicit degree tag so graded operations stay total.
class HomPoly {
public:
    using TermMap = std::map<ExponentVector, Rat, GradedLexGreater>;

    // Zero polynomial of the given degree.
    HomPoly(int n, int degree);

    // c * x^exps; the variable count and degree are read off the exponents.
    static HomPoly monomial(const Rat& c, const std::vector<int>& exps);

    // Sum of monomials, all of one degree in n+1 variables.
    static HomPoly from_terms(int n, int degree, TermMap terms);

    int n() const { return n_; }
    int var_count() const { return n_ + 1; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const ExponentVector& ev) const;

    HomPoly operator-() const;
    HomPoly operator+(const HomPoly& rhs) const;
    HomPoly operator-(const HomPoly& rhs) const;
    HomPoly operator*(const HomPoly& rhs) const;
    HomPoly operator*(const Rat& c) const;
    friend HomPoly operator*(const Rat& c, const HomPoly& f) { return f * c; }

    bool operator==(const HomPoly&) const = default;

    // f viewed in a larger ambient ring x_0..x_{new_n}; exponents pad with 0.
    HomPoly embed(int new_n) const;

private:
    int n_;
    int degree_;
    TermMap terms_;

    void check_invariants() const;
};

// Square matrix of homogeneous polynomials of one common degree (Hessians).
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int n, int entry_degree);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int entry_degree() const { return entry_degree_; }

    const HomPoly& at(int i, int j) const;
    void set(int i, int j, HomPoly value);

    // Exact determinant via cofactor expansion with subset memoization.
    HomPoly determinant() const;

private:
    int rows_, cols_, n_, entry_degree_;
    std::vector<HomPoly> entries_;
};

// d f / d x_i.
HomPoly partial(const HomPoly& f, int i);

// (f_0, ..., f_n).
std::vector<HomPoly> gradient(const HomPoly& f);

// Symmetric matrix of second partials; requires degree >= 2.
PolyMatrix hessian(const HomPoly& f);

// det Hess(f), homogeneous of degree (d-2)(n+1).
HomPoly hessian_det(const HomPoly& f);

// f composed with X -> A X for a square (n+1)x(n+1) rational matrix A.
HomPoly linear_substitute(const HomPoly& f, const RatMatrix& A);

Rat evaluate(const HomPoly& f, const std::vector<Rat>& p);

// Euler identity sum_i x_i f_i = d f, checked symbolically.
bool euler_check(const HomPoly& f);

// x_i * f.
HomPoly multiply_by_variable(const HomPoly& f, int i);

// True when every term of f carries x_i^k, i.e. x_i^k | f monomialwise.
bool divisible_by_variable_power(const HomPoly& f, int i, int k);

} // namespace jacideal

#endif
