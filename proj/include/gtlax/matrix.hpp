/*
 * Small dense complex matrices and the Hermitian wrapper used throughout.
 * Everything is value-semantic and sized for desk-scale problems (n <= ~50);
 * no attempt is made at cache blocking or expression templates.
 */

#ifndef GTLAX_MATRIX_HPP
#define GTLAX_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gtlax {

using cdouble = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cdouble& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cdouble& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix a(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
        return a;
    }

    cdouble trace() const {
        cdouble t = 0.0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    ComplexMatrix leading_block(int k) const {
        ComplexMatrix b(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
        return b;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same_shape(o, "+=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same_shape(o, "-=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    ComplexMatrix& operator*=(cdouble s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cdouble s) { return a *= s; }
    friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
        ComplexMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const cdouble aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    void check_same_shape(const ComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("ComplexMatrix: shape mismatch in ") + op);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cdouble> data_;
};

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

/// Solves A X = B by Gaussian elimination with partial pivoting. A square.
inline ComplexMatrix solve_linear(ComplexMatrix a, ComplexMatrix b) {
    if (!a.square() || a.rows() != b.rows())
        throw std::invalid_argument("solve_linear: shape mismatch");
    const int n = a.rows();
    const int m = b.cols();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) throw NumericalError("solve_linear: singular matrix");
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(col, j), b(piv, j));
        }
        const cdouble d = a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cdouble f = a(r, col) / d;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < m; ++j) b(r, j) -= f * b(col, j);
        }
    }
    ComplexMatrix x(n, m);
    for (int r = n - 1; r >= 0; --r) {
        for (int j = 0; j < m; ++j) {
            cdouble s = b(r, j);
            for (int k = r + 1; k < n; ++k) s -= a(r, k) * x(k, j);
            x(r, j) = s / a(r, r);
        }
    }
    return x;
}

/// Hermitian matrix; construction symmetrizes, so the invariant A = A^H holds exactly.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    explicit HermitianMatrix(const ComplexMatrix& a) {
        if (!a.square()) throw std::invalid_argument("HermitianMatrix: matrix not square");
        n_ = a.rows();
        m_ = ComplexMatrix(n_, n_);
        for (int i = 0; i < n_; ++i) {
            m_(i, i) = 0.5 * (a(i, i) + std::conj(a(i, i)));
            for (int j = i + 1; j < n_; ++j) {
                const cdouble v = 0.5 * (a(i, j) + std::conj(a(j, i)));
                m_(i, j) = v;
                m_(j, i) = std::conj(v);
            }
        }
    }

    static HermitianMatrix diagonal(const std::vector<double>& d) {
        ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < static_cast<int>(d.size()); ++i) m(i, i) = d[i];
        return HermitianMatrix(m);
    }

    static HermitianMatrix zero(int n) { return HermitianMatrix(ComplexMatrix(n, n)); }

    int size() const { return n_; }
    cdouble operator()(int i, int j) const { return m_(i, j); }
    const ComplexMatrix& matrix() const { return m_; }

    HermitianMatrix leading_block(int k) const {
        if (k < 1 || k > n_) throw std::invalid_argument("HermitianMatrix: block size out of range");
        return HermitianMatrix(m_.leading_block(k));
    }

    double frobenius_norm() const { return m_.frobenius_norm(); }
    double max_abs() const { return m_.max_abs(); }
    double trace_real() const { return m_.trace().real(); }

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
        return HermitianMatrix(a.m_ + b.m_);
    }
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
        return HermitianMatrix(a.m_ - b.m_);
    }
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a) {
        return HermitianMatrix(a.m_ * cdouble(s, 0.0));
    }

private:
    int n_ = 0;
    ComplexMatrix m_;
};

/// Embeds a k x k Hermitian block in the top-left corner of an n x n zero matrix.
inline HermitianMatrix pad_to(const HermitianMatrix& block, int n) {
    if (block.size() > n) throw std::invalid_argument("pad_to: block larger than target");
    ComplexMatrix m(n, n);
    for (int i = 0; i < block.size(); ++i)
        for (int j = 0; j < block.size(); ++j) m(i, j) = block(i, j);
    return HermitianMatrix(m);
}

} // namespace gtlax

#endif
