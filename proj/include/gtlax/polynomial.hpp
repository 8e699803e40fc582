/*
 * Real univariate polynomials plus the polynomial algebra the spectral side
 * of the library needs: characteristic polynomials (Faddeev-LeVerrier),
 * resultants and discriminants (Sylvester matrix), real root isolation for
 * real-rooted polynomials, and square-free decomposition by root clustering.
 *
 * Coefficients are stored lowest degree first. The zero polynomial has
 * degree() == -1.
 */

#ifndef GTLAX_POLYNOMIAL_HPP
#define GTLAX_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace gtlax {

class RealPolynomial {
public:
    RealPolynomial() = default;

    explicit RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RealPolynomial constant(double v) { return RealPolynomial({v}); }

    static RealPolynomial from_roots(std::span<const double> roots) {
        std::vector<double> c{1.0};
        for (double r : roots) {
            // multiply by (w - r)
            std::vector<double> next(c.size() + 1, 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= r * c[i];
            }
            c = std::move(next);
        }
        return RealPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    double coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0.0;
    }
    const std::vector<double>& coeffs() const { return c_; }
    double leading() const { return c_.empty() ? 0.0 : c_.back(); }

    double operator()(double x) const {
        double v = 0.0;
        for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
        return v;
    }

    RealPolynomial derivative() const {
        if (c_.size() <= 1) return RealPolynomial();
        std::vector<double> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
        return RealPolynomial(std::move(d));
    }

    /// Synthetic division by (w - a): returns (quotient, remainder-value).
    std::pair<RealPolynomial, double> divide_linear(double a) const {
        if (is_zero()) return {RealPolynomial(), 0.0};
        const int d = degree();
        std::vector<double> q(std::max(d, 0), 0.0);
        double carry = c_[d];
        for (int i = d - 1; i >= 0; --i) {
            q[i] = carry;
            carry = c_[i] + a * carry;
        }
        return {RealPolynomial(std::move(q)), carry};
    }

    friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return RealPolynomial();
        std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RealPolynomial(std::move(c));
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (double x : c_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
    }

    std::vector<double> c_; // lowest degree first
};

inline double max_coeff_diff(const RealPolynomial& a, const RealPolynomial& b) {
    double m = 0.0;
    for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i)
        m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
    return m;
}

/// Characteristic polynomial det(w 1 - A) of a complex square matrix by the
/// Faddeev-LeVerrier recursion. Returns coefficients lowest degree first.
inline std::vector<cdouble> char_poly_complex(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("char_poly: matrix not square");
    const int n = a.rows();
    std::vector<cdouble> c(n + 1, 0.0);
    c[n] = 1.0;
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        const cdouble ck = -m.trace() / static_cast<double>(k);
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;
}

/// Characteristic polynomial of a Hermitian matrix; coefficients are real.
inline RealPolynomial char_poly(const HermitianMatrix& a) {
    const auto cc = char_poly_complex(a.matrix());
    std::vector<double> c(cc.size());
    for (std::size_t i = 0; i < cc.size(); ++i) c[i] = cc[i].real();
    return RealPolynomial(std::move(c));
}

/// Coefficients of p(w + h) for complex h (Taylor shift).
inline std::vector<cdouble> taylor_shift(std::span<const cdouble> p, cdouble h) {
    const int d = static_cast<int>(p.size()) - 1;
    std::vector<cdouble> r(p.begin(), p.end());
    // Repeated synthetic division by (w + h) accumulates the shifted coefficients.
    for (int j = 0; j < d; ++j)
        for (int i = d - 1; i >= j; --i) r[i] += h * r[i + 1];
    return r;
}

namespace detail {

inline double lu_determinant(std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

inline std::vector<std::vector<double>> sylvester_matrix(const RealPolynomial& f,
                                                         const RealPolynomial& g) {
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    std::vector<std::vector<double>> s(size, std::vector<double>(size, 0.0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
    return s;
}

} // namespace detail

/// Resultant Res(f, g) as the Sylvester matrix determinant (LU with pivoting).
inline double resultant(const RealPolynomial& f, const RealPolynomial& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0.0;
    if (m == 0) return std::pow(f.coeff(0), n);
    if (n == 0) return std::pow(g.coeff(0), m);
    auto s = detail::sylvester_matrix(f, g);
    return detail::lu_determinant(s);
}

/// Disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f). Requires deg f >= 1.
inline double discriminant(const RealPolynomial& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (d == 1) return 1.0;
    const double res = resultant(f, f.derivative());
    const int sign = ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? 1 : -1;
    return sign * res / f.leading();
}

/// Discriminant of the monic polynomial with the given roots: prod_{i<j} (r_i - r_j)^2.
inline double discriminant_from_roots(std::span<const double> roots) {
    double p = 1.0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const double d = roots[i] - roots[j];
            p *= d * d;
        }
    return p;
}

/// All real roots of a real-rooted polynomial, ascending, without multiplicity.
/// Roots are isolated between critical points (found recursively) and refined
/// by bisection; even-order roots are picked up at critical points where |f|
/// is negligible.
inline std::vector<double> real_roots(const RealPolynomial& f) {
    const int d = f.degree();
    if (d <= 0) return {};
    if (d == 1) return {-f.coeff(0) / f.coeff(1)};

    const double bound = 1.0 + f.max_abs_coeff() / std::abs(f.leading());
    std::vector<double> pts = real_roots(f.derivative());
    pts.insert(pts.begin(), -bound);
    pts.push_back(bound);
    std::sort(pts.begin(), pts.end());

    const double coeff_scale = f.max_abs_coeff();
    std::vector<double> roots;
    auto add_root = [&](double r) {
        for (double x : roots)
            if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(r))) return;
        roots.push_back(r);
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        double flo = f(lo), fhi = f(hi);
        if (flo == 0.0) add_root(lo);
        if (fhi == 0.0) add_root(hi);
        if (flo * fhi < 0.0) {
            for (int it = 0; it < 120; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if ((flo < 0.0) == (fm < 0.0)) { lo = mid; flo = fm; }
                else { hi = mid; }
            }
            add_root(0.5 * (lo + hi));
        }
    }
    // Even-multiplicity roots sit at critical points where f does not change sign.
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const double c = pts[i];
        const double local = coeff_scale * std::pow(std::max(1.0, std::abs(c)), d);
        if (std::abs(f(c)) <= 1e-10 * local) add_root(c);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct SquareFreeResult {
    RealPolynomial square_free;         // one root per cluster, monic
    std::vector<double> cluster_roots;  // representative (mean) per cluster, ascending
    std::vector<int> multiplicities;    // cluster sizes, aligned with cluster_roots
};

/// Square-free decomposition from a known root list (with repetitions):
/// clusters roots within tol and keeps one representative per cluster.
inline SquareFreeResult square_free_part(std::span<const double> roots, double tol) {
    std::vector<double> sorted(roots.begin(), roots.end());
    std::sort(sorted.begin(), sorted.end());
    SquareFreeResult out;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        double sum = sorted[i];
        while (j < sorted.size() && sorted[j] - sorted[j - 1] <= tol) {
            sum += sorted[j];
            ++j;
        }
        out.cluster_roots.push_back(sum / static_cast<double>(j - i));
        out.multiplicities.push_back(static_cast<int>(j - i));
        i = j;
    }
    out.square_free = RealPolynomial::from_roots(out.cluster_roots);
    return out;
}

/// Square-free decomposition of a monic real-rooted polynomial; roots are
/// recovered by real_roots and multiplicities by synthetic deflation.
inline SquareFreeResult square_free_part(const RealPolynomial& f, double tol) {
    const auto distinct = real_roots(f);
    std::vector<double> with_mult;
    RealPolynomial rem = f;
    const double scale = std::max(1.0, f.max_abs_coeff());
    for (double r : distinct) {
        while (rem.degree() > 0) {
            auto [q, value] = rem.divide_linear(r);
            const double local = scale * std::pow(std::max(1.0, std::abs(r)), rem.degree());
            if (std::abs(value) > 1e-8 * local) break;
            with_mult.push_back(r);
            rem = q;
        }
    }
    if (static_cast<int>(with_mult.size()) != f.degree())
        throw NumericalError("square_free_part: root/multiplicity recovery incomplete");
    return square_free_part(std::span<const double>(with_mult), tol);
}

} // namespace gtlax

#endif
