#pragma once

#include <initializer_list>
#include <vector>

#include "hodgelat/error.hpp"
#include "hodgelat/numeric.hpp"

namespace hodgelat {

// Dense row-major matrix over an exact scalar type. Dimensions are positive
// for every constructed instance.
template <typename T>
class Matrix {
  public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows <= 0 || cols <= 0)
            fail(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
        entries_.resize(static_cast<size_t>(rows) * cols);
    }

    Matrix(std::initializer_list<std::initializer_list<T>> data)
        : Matrix(static_cast<int>(data.size()),
                 data.size() ? static_cast<int>(data.begin()->size()) : 0) {
        int i = 0;
        for (const auto& row : data) {
            if (static_cast<int>(row.size()) != cols_)
                fail(ErrorCode::DimensionMismatch, "ragged initializer");
            int j = 0;
            for (const auto& v : row) at(i, j++) = v;
            ++i;
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(int i, int j) {
        check_bounds(i, j);
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }
    const T& at(int i, int j) const {
        check_bounds(i, j);
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
        Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            fail(ErrorCode::DimensionMismatch, "matrix sum shape");
        Matrix out(rows_, cols_);
        for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            fail(ErrorCode::DimensionMismatch, "matrix difference shape");
        Matrix out(rows_, cols_);
        for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
        return out;
    }

    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
        return out;
    }

    Matrix scaled(const T& c) const {
        Matrix out(rows_, cols_);
        for (size_t k = 0; k < entries_.size(); ++k) {
            out.entries_[k] = entries_[k] * c;
            canonicalize_entry(out.entries_[k]);
        }
        return out;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : entries_)
            if (v != 0) return false;
        return true;
    }

    std::vector<T> row(int i) const {
        std::vector<T> out(cols_);
        for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
        return out;
    }

    std::vector<T> col(int j) const {
        std::vector<T> out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
        return out;
    }

    // rows [r0, r1) and all columns
    Matrix row_slice(int r0, int r1) const {
        Matrix out(r1 - r0, cols_);
        for (int i = r0; i < r1; ++i)
            for (int j = 0; j < cols_; ++j) out.at(i - r0, j) = at(i, j);
        return out;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return out;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "vstack shape");
        Matrix out(a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
        return out;
    }

    // strict total order, used to make search results deterministic
    bool lex_less(const Matrix& other) const {
        if (rows_ != other.rows_) return rows_ < other.rows_;
        if (cols_ != other.cols_) return cols_ < other.cols_;
        for (size_t k = 0; k < entries_.size(); ++k) {
            if (entries_[k] != other.entries_[k]) return entries_[k] < other.entries_[k];
        }
        return false;
    }

  private:
    static void canonicalize_entry(Rat& v) { v.canonicalize(); }
    static void canonicalize_entry(Int&) {}

    void check_bounds(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            fail(ErrorCode::DimensionMismatch, "matrix index out of bounds");
    }

    int rows_;
    int cols_;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);

// exact demotion; nullopt if any entry has denominator != 1
std::optional<IntMatrix> to_integral(const RatMatrix& m);

std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v);
std::vector<Rat> apply(const RatMatrix& m, const std::vector<Rat>& v);

}  // namespace hodgelat
