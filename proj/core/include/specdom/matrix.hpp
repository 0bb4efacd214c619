#pragma once

#include "specdom/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specdom {

/// Dense matrix over one scalar regime (Rational = exact, double = float).
/// Row-major storage, value semantics, immutable-after-construction use.
/// Vectors are thin matrices (n x 1 columns, 1 x n rows) so every operation
/// shares one arithmetic path. Mixing regimes is impossible by type.
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("matrix dimensions must be positive");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        if (rows_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
        cols_ = init.begin()->size();
        if (cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix filled(std::size_t rows, std::size_t cols, const T& value) {
        Matrix m(rows, cols);
        std::fill(m.data_.begin(), m.data_.end(), value);
        return m;
    }

    /// n x 1 column of ones.
    static Matrix ones_column(std::size_t n) { return filled(n, 1, T(1)); }
    /// 1 x n row of ones.
    static Matrix ones_row(std::size_t n) { return filled(1, n, T(1)); }

    static Matrix column(std::vector<T> entries) {
        Matrix m(entries.size(), 1);
        m.data_ = std::move(entries);
        return m;
    }

    static Matrix row(std::vector<T> entries) {
        Matrix m(1, entries.size());
        m.data_ = std::move(entries);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_column() const { return cols_ == 1; }
    bool is_row() const { return rows_ == 1; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Entry i of a thin (row or column) matrix.
    const T& vec(std::size_t i) const {
        if (!is_column() && !is_row())
            throw std::invalid_argument("vec() requires a row or column matrix");
        return data_[i];
    }

    std::size_t vec_size() const { return is_column() ? rows_ : cols_; }

    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        require_square("trace");
        T s(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    /// Largest entry magnitude; zero for the zero matrix.
    T max_abs() const {
        T best(0);
        for (const T& x : data_) {
            T a = abs_value(x);
            if (a > best) best = a;
        }
        return best;
    }

    Matrix operator+(const Matrix& other) const {
        require_same_shape(other, "+");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        require_same_shape(other, "-");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (T& x : out.data_) x = -x;
        return out;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        Matrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out(i, j) += aik * other(k, j);
            }
        }
        return out;
    }

    Matrix operator*(const T& scalar) const {
        Matrix out = *this;
        for (T& x : out.data_) x *= scalar;
        return out;
    }

    friend Matrix operator*(const T& scalar, const Matrix& m) { return m * scalar; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    void require_square(const char* what) const {
        if (!is_square())
            throw std::invalid_argument(std::string(what) + " requires a square matrix");
    }

private:
    void require_same_shape(const Matrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument(std::string("matrix ") + op + " shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// A^k by repeated squaring; A^0 = I.
template <class T>
Matrix<T> pow(const Matrix<T>& a, unsigned long k) {
    a.require_square("pow");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    Matrix<T> base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        base = k > 1 ? base * base : base;
        k >>= 1u;
    }
    return result;
}

template <class T>
constexpr double default_positive_eps() {
    return is_exact_scalar_v<T> ? 0.0 : 1e-12;
}

/// Strict positivity of every entry. In the float regime an entry counts as
/// positive only above eps * max|a_ij|; exact regime demands eps == 0.
template <class T>
bool is_strictly_positive(const Matrix<T>& a, double eps = default_positive_eps<T>()) {
    if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
    if constexpr (is_exact_scalar_v<T>) {
        if (eps != 0) throw std::invalid_argument("exact regime requires eps == 0");
        for (const T& x : a.data())
            if (!(x > 0)) return false;
        return true;
    } else {
        const T threshold = eps * to_double(a.max_abs());
        for (const T& x : a.data())
            if (!(x > threshold)) return false;
        return true;
    }
}

/// Entrywise nonnegativity, with the same eps convention as strict positivity.
template <class T>
bool is_nonnegative(const Matrix<T>& a, double eps = default_positive_eps<T>()) {
    if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
    if constexpr (is_exact_scalar_v<T>) {
        if (eps != 0) throw std::invalid_argument("exact regime requires eps == 0");
        for (const T& x : a.data())
            if (x < 0) return false;
        return true;
    } else {
        const T threshold = -eps * to_double(a.max_abs());
        for (const T& x : a.data())
            if (x < threshold) return false;
        return true;
    }
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    return to_double((a - b).max_abs());
}

/// Diagonal +-1 matrix stored as its sign vector. S * S = I.
class SignatureMatrix {
public:
    explicit SignatureMatrix(std::vector<int> signs) : signs_(std::move(signs)) {
        for (int s : signs_)
            if (s != 1 && s != -1)
                throw std::invalid_argument("signature entries must be +1 or -1");
    }

    static SignatureMatrix identity(std::size_t n) {
        return SignatureMatrix(std::vector<int>(n, 1));
    }

    /// Signs that make the given column vector positive. The vector must have
    /// no zero entries (callers screen those out first).
    template <class T>
    static SignatureMatrix making_positive(const Matrix<T>& v) {
        std::vector<int> signs(v.vec_size());
        for (std::size_t i = 0; i < v.vec_size(); ++i) {
            if (v.vec(i) == T(0))
                throw std::invalid_argument("cannot orient a vector with a zero entry");
            signs[i] = v.vec(i) > T(0) ? 1 : -1;
        }
        return SignatureMatrix(std::move(signs));
    }

    std::size_t size() const { return signs_.size(); }
    int sign(std::size_t i) const { return signs_[i]; }
    const std::vector<int>& signs() const { return signs_; }

    bool is_identity() const {
        return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
    }

    /// S * v for a column vector.
    template <class T>
    Matrix<T> scale_rows(const Matrix<T>& v) const {
        if (v.rows() != signs_.size())
            throw std::invalid_argument("signature/vector dimension mismatch");
        Matrix<T> out = v;
        for (std::size_t i = 0; i < v.rows(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j)
                if (signs_[i] < 0) out(i, j) = -out(i, j);
        return out;
    }

    /// u * S for a row vector.
    template <class T>
    Matrix<T> scale_cols(const Matrix<T>& u) const {
        if (u.cols() != signs_.size())
            throw std::invalid_argument("signature/vector dimension mismatch");
        Matrix<T> out = u;
        for (std::size_t i = 0; i < u.rows(); ++i)
            for (std::size_t j = 0; j < u.cols(); ++j)
                if (signs_[j] < 0) out(i, j) = -out(i, j);
        return out;
    }

private:
    std::vector<int> signs_;
};

/// S * A * S, i.e. entry (i,j) becomes s_i * s_j * a_ij.
template <class T>
Matrix<T> apply_signature(const SignatureMatrix& s, const Matrix<T>& a) {
    a.require_square("apply_signature");
    if (a.rows() != s.size())
        throw std::invalid_argument("signature/matrix dimension mismatch");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (s.sign(i) * s.sign(j) < 0) out(i, j) = -out(i, j);
    return out;
}

template <class T>
Matrix<double> to_float(const Matrix<T>& a) {
    Matrix<double> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_double(a(i, j));
    return out;
}

}  // namespace specdom
