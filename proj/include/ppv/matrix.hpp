#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "ppv/errors.hpp"
#include "ppv/field.hpp"

namespace ppv {

/// Dense matrix over an exact field (RatField or PrimeField).
/// Row-major storage; sizes here are tiny (desk-scale module dimensions),
/// so plain Gaussian elimination is the right tool throughout.
template <class F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * cols, field.zero()) {}

    static Matrix identity(F field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    const Elem& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t k = 0; k < data_.size(); ++k)
            if (!field_.eq(data_[k], o.data_[k])) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = field_.add(r.data_[k], o.data_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = field_.sub(r.data_[k], o.data_[k]);
        return r;
    }

    Matrix negated() const {
        Matrix r = *this;
        for (auto& e : r.data_) e = field_.neg(e);
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r = *this;
        for (auto& e : r.data_) e = field_.mul(e, c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// [this | o] side by side.
    Matrix hstack(const Matrix& o) const {
        assert(rows_ == o.rows_);
        Matrix r(field_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Matrix vstack(const Matrix& o) const {
        assert(cols_ == o.cols_);
        Matrix r(field_, rows_ + o.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Matrix columns(const std::vector<int>& idx) const {
        Matrix r(field_, rows_, static_cast<int>(idx.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) r.at(i, int(j)) = at(i, idx[j]);
        return r;
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (!field_.is_zero(at(i, c))) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
            Elem piv_inv = field_.inv(at(r, c));
            for (int j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), piv_inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || field_.is_zero(at(i, c))) continue;
                Elem f = at(i, c);
                for (int j = c; j < cols_; ++j)
                    at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    /// Columns form a basis of {v : this*v = 0}.
    Matrix kernel_basis() const {
        Matrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<int> free_cols;
        for (int c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix k(field_, cols_, static_cast<int>(free_cols.size()));
        for (size_t fj = 0; fj < free_cols.size(); ++fj) {
            int fc = free_cols[fj];
            k.at(fc, int(fj)) = field_.one();
            for (size_t pi = 0; pi < pivots.size(); ++pi)
                k.at(pivots[pi], int(fj)) = field_.neg(m.at(int(pi), fc));
        }
        return k;
    }

    /// Solve this * x = b for one solution; nullopt if inconsistent.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const {
        assert(static_cast<int>(b.size()) == rows_);
        Matrix aug(field_, rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Elem> x(cols_, field_.zero());
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            x[pivots[pi]] = aug.at(int(pi), cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        Matrix aug = hstack(identity(field_, rows_));
        std::vector<int> pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= rows_))
            return std::nullopt;
        for (int c : pivots)
            if (c >= rows_) return std::nullopt;
        Matrix inv(field_, rows_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
        return inv;
    }

    bool is_invertible() const {
        return rows_ == cols_ && rank() == rows_;
    }

    /// Block-diagonal assembly.
    static Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

  private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> data_;
};

using QMatrix = Matrix<RatField>;
using PMatrix = Matrix<PrimeField>;

/// Complete the columns of `basis` (assumed independent) to a basis of the
/// ambient space by appending standard unit vectors. Returns the indices of
/// the appended unit vectors and the full invertible matrix.
template <class F>
std::pair<Matrix<F>, std::vector<int>> complete_basis(const Matrix<F>& basis) {
    const F& field = basis.field();
    int n = basis.rows();
    Matrix<F> acc = basis;
    std::vector<int> added;
    for (int e = 0; e < n && acc.cols() < n; ++e) {
        Matrix<F> unit(field, n, 1);
        unit.at(e, 0) = field.one();
        Matrix<F> cand = acc.hstack(unit);
        if (cand.rank() == cand.cols()) {
            acc = cand;
            added.push_back(e);
        }
    }
    if (acc.cols() != n) throw Error("complete_basis: input columns dependent");
    return {acc, added};
}

}  // namespace ppv
