#include "jacideal/ratmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacideal {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: bad shape");
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0 || a_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("RatMatrix: entry count mismatch");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RatMatrix +: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + rhs.a_[k];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RatMatrix -: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - rhs.a_[k];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix *: shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = (*this)(i, k);
            if (rat_is_zero(aik)) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out(i, j) += aik * rhs(k, j);
        }
    return out;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

std::vector<Rat> RatMatrix::column(int j) const {
    std::vector<Rat> v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
}

RrefResult rref(const RatMatrix& M) {
    RatMatrix R = M;
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < R.cols() && r < R.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < R.rows(); ++i)
            if (!rat_is_zero(R(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < R.cols(); ++j) std::swap(R(piv, j), R(r, j));
        Rat inv = 1 / R(r, c);
        for (int j = c; j < R.cols(); ++j) R(r, j) *= inv;
        for (int i = 0; i < R.rows(); ++i) {
            if (i == r || rat_is_zero(R(i, c))) continue;
            Rat factor = R(i, c);
            for (int j = c; j < R.cols(); ++j) R(i, j) -= factor * R(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return RrefResult{std::move(R), std::move(pivot_cols), r};
}

std::vector<std::vector<Rat>> kernel(const RatMatrix& M) {
    RrefResult rr = rref(M);
    std::vector<bool> is_pivot(static_cast<std::size_t>(M.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < M.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(M.cols()), Rat(0));
        v[static_cast<std::size_t>(c)] = 1;
        for (int k = 0; k < rr.rank; ++k)
            v[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(k)])] = -rr.R(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("det: not square");
    int n = M.rows();
    if (n == 0) return Rat(1);
    RatMatrix B = M;
    Rat prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (rat_is_zero(B(k, k))) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!rat_is_zero(B(i, k))) { piv = i; break; }
            if (piv < 0) return Rat(0);
            for (int j = 0; j < n; ++j) std::swap(B(k, j), B(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                B(i, j) = (B(i, j) * B(k, k) - B(i, k) * B(k, j)) / prev;
            B(i, k) = 0;
        }
        prev = B(k, k);
    }
    return sign > 0 ? B(n - 1, n - 1) : -B(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("inverse: not square");
    int n = M.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = M(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1)
        return std::nullopt;
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.R(i, n + j);
    return inv;
}

std::optional<RatMatrix> solve(const RatMatrix& A, const RatMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve: shape mismatch");
    RatMatrix aug(A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        for (int j = 0; j < B.cols(); ++j) aug(i, A.cols() + j) = B(i, j);
    }
    RrefResult rr = rref(aug);
    // Unique solution needs full column rank on A and no pivot inside B.
    int rank_a = 0;
    for (int c : rr.pivot_cols) {
        if (c < A.cols()) ++rank_a;
        else return std::nullopt; // inconsistent
    }
    if (rank_a < A.cols()) return std::nullopt;
    RatMatrix X(A.cols(), B.cols());
    for (int i = 0; i < A.cols(); ++i)
        for (int j = 0; j < B.cols(); ++j) X(i, j) = rr.R(i, A.cols() + j);
    return X;
}

std::vector<Rat> mat_vec(const RatMatrix& M, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != M.cols()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Rat> out(static_cast<std::size_t>(M.rows()), Rat(0));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (!rat_is_zero(M(i, j))) out[static_cast<std::size_t>(i)] += M(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

void EchelonSpan::reduce(std::vector<Rat>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int p = pivots_[k];
        if (rat_is_zero(v[static_cast<std::size_t>(p)])) continue;
        Rat factor = v[static_cast<std::size_t>(p)];
        for (int j = p; j < dim_; ++j)
            v[static_cast<std::size_t>(j)] -= factor * rows_[k][static_cast<std::size_t>(j)];
    }
}

bool EchelonSpan::add(std::vector<Rat> v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("EchelonSpan::add: bad size");
    reduce(v);
    int p = -1;
    for (int j = 0; j < dim_; ++j)
        if (!rat_is_zero(v[static_cast<std::size_t>(j)])) { p = j; break; }
    if (p < 0) return false;
    Rat inv = 1 / v[static_cast<std::size_t>(p)];
    for (int j = p; j < dim_; ++j) v[static_cast<std::size_t>(j)] *= inv;
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    // Clear the new pivot column from the other rows to stay fully reduced.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k == idx) continue;
        Rat factor = rows_[k][static_cast<std::size_t>(p)];
        if (rat_is_zero(factor)) continue;
        for (int j = p; j < dim_; ++j)
            rows_[k][static_cast<std::size_t>(j)] -= factor * rows_[idx][static_cast<std::size_t>(j)];
    }
    return true;
}

bool EchelonSpan::contains(std::vector<Rat> v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("EchelonSpan::contains: bad size");
    reduce(v);
    for (const Rat& x : v)
        if (!rat_is_zero(x)) return false;
    return true;
}

} // namespace jacideal
