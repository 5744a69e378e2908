#ifndef JACIDEAL_RATMATRIX_HPP
#define JACIDEAL_RATMATRIX_HPP

#include <optional>
#include <vector>

#include "jacideal/rat.hpp"

namespace jacideal {

// Dense exact rational matrix.
class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    RatMatrix(int rows, int cols, std::vector<Rat> entries);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator*(const Rat& c) const;
    RatMatrix transpose() const;

    bool operator==(const RatMatrix&) const = default;

    std::vector<Rat> column(int j) const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    RatMatrix R;
    std::vector<int> pivot_cols;
    int rank;
};

// Reduced row-echelon form: pivots 1, pivot columns cleared, zero rows last.
RrefResult rref(const RatMatrix& M);

// Basis of the right null space, one vector per free column in ascending
// column order (the canonical rref parametrization).
std::vector<std::vector<Rat>> kernel(const RatMatrix& M);

// Determinant by fraction-free Bareiss elimination.
Rat det(const RatMatrix& M);

std::optional<RatMatrix> inverse(const RatMatrix& M);

// Unique solution X of A X = B; nullopt when the system is inconsistent or
// underdetermined.
std::optional<RatMatrix> solve(const RatMatrix& A, const RatMatrix& B);

std::vector<Rat> mat_vec(const RatMatrix& M, const std::vector<Rat>& v);

// Incremental row space in echelon form; add() reports whether the vector
// enlarged the span. Pivot choice is leftmost-nonzero, so results are
// deterministic in insertion order.
class EchelonSpan {
public:
    explicit EchelonSpan(int dim) : dim_(dim) {}

    bool add(std::vector<Rat> v);
    bool contains(std::vector<Rat> v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_; // sorted by pivot column
    std::vector<int> pivots_;

    void reduce(std::vector<Rat>& v) const;
};

} // namespace jacideal

#endif
