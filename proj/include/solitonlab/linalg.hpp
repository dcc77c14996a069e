#ifndef SOLITONLAB_LINALG_HPP
#define SOLITONLAB_LINALG_HPP

// Small dense linear algebra over a generic scalar. Dimensions here are
// tiny (<= 16 or so), so everything is plain Gaussian elimination with
// pivot-by-magnitude on double and pivot-by-nonzero on rationals.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace slab {

template <class S>
struct Vec {
    std::vector<S> v;
    Vec() = default;
    explicit Vec(std::size_t n) : v(n, S(0)) {}
    Vec(std::initializer_list<S> il) : v(il) {}
    std::size_t size() const { return v.size(); }
    S& operator[](std::size_t i) { return v[i]; }
    const S& operator[](std::size_t i) const { return v[i]; }
};

template <class S>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<S> a;  // row-major
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, S(0)) {}
    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    S& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Mat transpose() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
};

template <class S>
Mat<S> operator*(const Mat<S>& x, const Mat<S>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat<S> z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const S& xik = x(i, k);
            if (scalar_traits<S>::exact && xik == S(0)) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

template <class S>
Vec<S> operator*(const Mat<S>& x, const Vec<S>& y) {
    if (x.cols != y.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec<S> z(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z[i] += x(i, j) * y[j];
    return z;
}

template <class S>
Mat<S> operator+(const Mat<S>& x, const Mat<S>& y) {
    Mat<S> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

template <class S>
Mat<S> operator-(const Mat<S>& x, const Mat<S>& y) {
    Mat<S> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

template <class S>
Mat<S> operator*(const S& s, const Mat<S>& x) {
    Mat<S> z = x;
    for (auto& e : z.a) e *= s;
    return z;
}

template <class S>
S trace(const Mat<S>& m) {
    S t(0);
    for (std::size_t i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

namespace detail {
// Picks the pivot row in column c at/below row r; nonzero for exact
// scalars, max magnitude for double. Returns npos when the column is
// (numerically) zero.
template <class S>
std::size_t pivot_row(const Mat<S>& m, std::size_t r, std::size_t c, double tol) {
    std::size_t best = std::size_t(-1);
    if constexpr (scalar_traits<S>::exact) {
        for (std::size_t i = r; i < m.rows; ++i)
            if (m(i, c) != S(0)) return i;
    } else {
        double mx = 0;
        for (std::size_t i = r; i < m.rows; ++i) {
            double v = std::fabs(scalar_traits<S>::to_double(m(i, c)));
            if (v > mx) {
                mx = v;
                best = i;
            }
        }
        if (mx <= tol) return std::size_t(-1);
    }
    return best;
}
}  // namespace detail

// Reduced row echelon form in place; returns pivot column indices.
template <class S>
std::vector<std::size_t> rref(Mat<S>& m, double tol = scalar_traits<S>::default_tol()) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = detail::pivot_row(m, r, c, tol);
        if (p == std::size_t(-1)) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
        S inv = S(1) / m(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            S f = m(i, c);
            if (scalar_traits<S>::is_zero(f, tol)) continue;
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
std::size_t rank(Mat<S> m, double tol = scalar_traits<S>::default_tol()) {
    return rref(m, tol).size();
}

template <class S>
S det(Mat<S> m, double tol = scalar_traits<S>::default_tol()) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    S d(1);
    for (std::size_t c = 0; c < m.cols; ++c) {
        std::size_t p = detail::pivot_row(m, c, c, tol);
        if (p == std::size_t(-1)) return S(0);
        if (p != c) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(c, j), m(p, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < m.rows; ++i) {
            S f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m, double tol = scalar_traits<S>::default_tol()) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows;
    Mat<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto piv = rref(aug, tol);
    if (piv.size() != n || piv.back() >= n) return std::nullopt;
    Mat<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Solution of A x = b as a particular solution plus a nullspace basis.
template <class S>
struct AffineSolution {
    bool consistent = false;
    Vec<S> particular;             // free variables set to zero
    std::vector<Vec<S>> nullspace;  // basis of ker A
};

template <class S>
AffineSolution<S> solve_affine(const Mat<S>& A, const Vec<S>& b,
                               double tol = scalar_traits<S>::default_tol()) {
    std::size_t m = A.rows, n = A.cols;
    Mat<S> aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref(aug, tol);
    AffineSolution<S> sol;
    if (!piv.empty() && piv.back() == n) return sol;  // row [0...0 | 1]
    sol.consistent = true;
    sol.particular = Vec<S>(n);
    std::vector<long> pivot_of_col(n, -1);
    for (std::size_t r = 0; r < piv.size(); ++r) pivot_of_col[piv[r]] = long(r);
    for (std::size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = aug(r, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec<S> k(n);
        k[c] = S(1);
        for (std::size_t r = 0; r < piv.size(); ++r) k[piv[r]] = -aug(r, c);
        sol.nullspace.push_back(std::move(k));
    }
    return sol;
}

template <class S>
std::vector<Vec<S>> nullspace(const Mat<S>& A, double tol = scalar_traits<S>::default_tol()) {
    return solve_affine(A, Vec<S>(A.rows), tol).nullspace;
}

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// p(t) = t^n + c[n-1] t^{n-1} + ... + c[0]. Exact on rationals.
template <class S>
std::vector<S> char_poly(const Mat<S>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("char_poly of non-square matrix");
    std::size_t n = m.rows;
    std::vector<S> c(n, S(0));
    Mat<S> M = Mat<S>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = m * M;
        S ck = trace(M) * (S(-1) / S(static_cast<int>(k)));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += ck;
    }
    return c;
}

// Signature of a symmetric matrix by congruence diagonalization.
// Exact on rationals (including the off-diagonal-only case), tolerance-based
// zero detection on double.
struct SignatureCounts {
    int plus = 0, minus = 0, zero = 0;
};

template <class S>
SignatureCounts signature(Mat<S> g, double tol = scalar_traits<S>::default_tol()) {
    if (g.rows != g.cols) throw std::invalid_argument("signature of non-square matrix");
    std::size_t n = g.rows;
    SignatureCounts sig;
    // Symmetric Gaussian elimination with the standard fix when the diagonal
    // vanishes but an off-diagonal entry does not (row+col combination).
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // find an unprocessed index with nonzero diagonal
        std::size_t p = std::size_t(-1);
        double best = tol;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if constexpr (scalar_traits<S>::exact) {
                if (g(i, i) != S(0)) {
                    p = i;
                    break;
                }
            } else {
                double v = std::fabs(scalar_traits<S>::to_double(g(i, i)));
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
        }
        if (p == std::size_t(-1)) {
            // all remaining diagonal entries vanish; look for an off-diagonal
            std::size_t bi = std::size_t(-1), bj = std::size_t(-1);
            double bmax = tol;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if constexpr (scalar_traits<S>::exact) {
                        if (g(i, j) != S(0)) {
                            bi = i;
                            bj = j;
                            goto found;
                        }
                    } else {
                        double v = std::fabs(scalar_traits<S>::to_double(g(i, j)));
                        if (v > bmax) {
                            bmax = v;
                            bi = i;
                            bj = j;
                        }
                    }
                }
            }
        found:
            if (bi == std::size_t(-1)) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) {
                        ++sig.zero;
                        done[i] = true;
                    }
                break;
            }
            // g(bi,bi)=g(bj,bj)=0, g(bi,bj)!=0: row/col bi += row/col bj
            for (std::size_t j = 0; j < n; ++j) g(bi, j) += g(bj, j);
            for (std::size_t i = 0; i < n; ++i) g(i, bi) += g(i, bj);
            p = bi;
        }
        // eliminate row/col p against the others
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || done[i]) continue;
            if (scalar_traits<S>::is_zero(g(i, p), tol)) continue;
            S f = -g(i, p) / g(p, p);
            for (std::size_t j = 0; j < n; ++j) g(i, j) += f * g(p, j);
            for (std::size_t j = 0; j < n; ++j) g(j, i) += f * g(j, p);
        }
        if constexpr (scalar_traits<S>::exact) {
            if (g(p, p) > S(0))
                ++sig.plus;
            else
                ++sig.minus;
        } else {
            double v = scalar_traits<S>::to_double(g(p, p));
            if (v > tol)
                ++sig.plus;
            else if (v < -tol)
                ++sig.minus;
            else
                ++sig.zero;
        }
        done[p] = true;
    }
    return sig;
}

}  // namespace slab

#endif
