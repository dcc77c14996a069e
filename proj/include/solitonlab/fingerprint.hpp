#ifndef SOLITONLAB_FINGERPRINT_HPP
#define SOLITONLAB_FINGERPRINT_HPP

// Isomorphism-type fingerprint of a 3-/4-dimensional solvable Lie algebra:
// series dimensions, nilradical, and a label drawn from the usual
// low-dimensional solvable catalog (r4-type, d4-type, nilpotent, products).
// Labels are matched up to the symmetries of each family (common rescaling
// of the defining derivation, permutation of eigenvalues, sign of the
// complex part), not via a single canonical form.

#include <complex>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "algebra.hpp"
#include "classify.hpp"

namespace slab {

enum class AlgClass {
    abelian,
    h3,     // 3D Heisenberg
    h3xR,   // h3 + R (4D nilpotent, 1D derived)
    n4,     // filiform nilpotent (4D, 2D derived)
    r3xR,   // (1,1)-Jordan almost-abelian 3D factor + central R
    r3_lambda_xR,
    r3p_lambda_xR,
    r4,
    r4_lambda,
    r4_mu_lambda,
    r4p_mu_lambda,
    d4,
    d4_lambda,
    d4p_lambda,
    h4,
    product,
    unknown
};

inline const char* alg_class_name(AlgClass k) {
    switch (k) {
        case AlgClass::abelian: return "abelian";
        case AlgClass::h3: return "h3";
        case AlgClass::h3xR: return "h3xR";
        case AlgClass::n4: return "n4";
        case AlgClass::r3xR: return "r3xR";
        case AlgClass::r3_lambda_xR: return "r3_lambda_xR";
        case AlgClass::r3p_lambda_xR: return "r3'_lambda_xR";
        case AlgClass::r4: return "r4";
        case AlgClass::r4_lambda: return "r4_lambda";
        case AlgClass::r4_mu_lambda: return "r4_mu_lambda";
        case AlgClass::r4p_mu_lambda: return "r4'_mu_lambda";
        case AlgClass::d4: return "d4";
        case AlgClass::d4_lambda: return "d4_lambda";
        case AlgClass::d4p_lambda: return "d4'_lambda";
        case AlgClass::h4: return "h4";
        case AlgClass::product: return "product";
        default: return "unknown";
    }
}

struct Fingerprint {
    bool solvable = false;
    bool nilpotent = false;
    bool unimodular = false;
    std::vector<std::size_t> derived_dims;  // dim g, dim g', dim g'', ...
    std::vector<std::size_t> lcs_dims;      // lower central series dims
    std::size_t nilradical_dim = 0;         // 0 when not determined
    bool nilradical_known = false;
    AlgClass klass = AlgClass::unknown;
    // eigenvalue data of the defining derivation (see matches_label)
    std::vector<std::complex<double>> spectrum;
    std::string label;  // printable summary
};

namespace detail {

template <class S>
std::vector<Vec<S>> span_basis(const std::vector<Vec<S>>& vs, std::size_t n, double tol) {
    if (vs.empty()) return {};
    Mat<S> m(vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[r][c];
    rref(m, tol);
    std::vector<Vec<S>> out;
    for (std::size_t r = 0; r < m.rows; ++r) {
        bool nz = false;
        Vec<S> v(n);
        for (std::size_t c = 0; c < n; ++c) {
            v[c] = m(r, c);
            if (!scalar_traits<S>::is_zero(v[c], tol)) nz = true;
        }
        if (nz) out.push_back(v);
    }
    return out;
}

template <class S>
bool in_span(const std::vector<Vec<S>>& basis, const Vec<S>& v, std::size_t n, double tol) {
    auto ext = basis;
    ext.push_back(v);
    return span_basis(ext, n, tol).size() == basis.size();
}

template <class S>
std::vector<Vec<S>> bracket_space(const MetricLieAlgebra<S>& a, const std::vector<Vec<S>>& A,
                                  const std::vector<Vec<S>>& B, double tol) {
    std::vector<Vec<S>> vs;
    for (const auto& x : A)
        for (const auto& y : B) vs.push_back(a.bracket(x, y));
    return span_basis(vs, a.n, tol);
}

template <class S>
std::vector<Vec<S>> full_basis(std::size_t n) {
    std::vector<Vec<S>> b;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<S> e(n);
        e[i] = S(1);
        b.push_back(e);
    }
    return b;
}

template <class S>
bool matrix_nilpotent(Mat<S> m, double tol) {
    for (std::size_t k = 0; k < m.rows; ++k) m = m * m;  // power 2^n >= n, overkill but safe
    for (const S& x : m.a)
        if (!scalar_traits<S>::is_zero(x, std::max(tol, 1e-6))) return false;
    return true;
}

// Cubic root structure of t^3 + b t^2 + c t + d.
template <class S>
struct CubicStructure {
    bool complex_pair = false;
    bool repeated = false;
    S root = S(0);  // the repeated root when repeated
    int alg_mult = 1;
};

template <class S>
CubicStructure<S> cubic_structure(const S& b, const S& c, const S& d, double tol) {
    CubicStructure<S> cs;
    S disc = S(18) * b * c * d - S(4) * b * b * b * d + b * b * c * c - S(4) * c * c * c -
             S(27) * d * d;
    double scale = std::max({1.0, std::abs(scalar_traits<S>::to_double(b)),
                             std::abs(scalar_traits<S>::to_double(c)),
                             std::abs(scalar_traits<S>::to_double(d))});
    double ztol = std::max(tol, 1e-9) * scale * scale * scale;
    double dd = scalar_traits<S>::to_double(disc);
    if (std::abs(dd) > ztol) {
        cs.complex_pair = dd < 0;
        return cs;
    }
    cs.repeated = true;
    auto eval = [&](const S& t) { return t * t * t + b * t * t + c * t + d; };
    auto evald = [&](const S& t) { return S(3) * t * t + S(2) * b * t + c; };
    S r3 = -b / S(3);
    if (std::abs(scalar_traits<S>::to_double(eval(r3))) <= ztol &&
        std::abs(scalar_traits<S>::to_double(evald(r3))) <= ztol) {
        cs.root = r3;
        cs.alg_mult = 3;
        return cs;
    }
    // rem(chi, chi') = (2c/3 - 2b^2/9) t + (d - bc/9)
    S alpha = (S(2) * c) / S(3) - (S(2) * b * b) / S(9);
    S beta = d - (b * c) / S(9);
    cs.root = -beta / alpha;  // alpha != 0 here, else the triple case above hit
    cs.alg_mult = 2;
    return cs;
}

template <class S>
Eigen::MatrixXd to_eigen(const Mat<S>& m) {
    Eigen::MatrixXd e(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) e(i, j) = scalar_traits<S>::to_double(m(i, j));
    return e;
}

inline std::vector<std::complex<double>> eigenvalues_sorted(const Eigen::MatrixXd& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    std::vector<std::complex<double>> out;
    for (long k = 0; k < m.rows(); ++k) out.push_back(es.eigenvalues()[k]);
    std::sort(out.begin(), out.end(), [](auto x, auto y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return out;
}

}  // namespace detail

// Nilradical of a solvable Lie algebra. The nilradical is orthogonal to the
// whole algebra under the trace form tr(ad_x ad_y) and killed by the trace
// functional; the candidate cut out by those linear conditions is then
// verified to be a nilpotent ideal, which pins it down exactly.
template <class S>
std::optional<std::vector<Vec<S>>> nilradical(const MetricLieAlgebra<S>& a,
                                              double tol = scalar_traits<S>::default_tol()) {
    const std::size_t n = a.n;
    std::vector<Mat<S>> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(a.ad(i));
    Mat<S> cond(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) cond(0, j) = trace(ads[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cond(i + 1, j) = trace(ads[i] * ads[j]);
    auto cand = nullspace(cond, tol);
    // verify: ideal, closed lower central series reaching zero, ad-nilpotent
    auto cb = detail::span_basis(cand, n, tol);
    auto fb = detail::full_basis<S>(n);
    auto gc = detail::bracket_space(a, fb, cb, tol);
    for (const auto& v : gc)
        if (!detail::in_span(cb, v, n, tol)) return std::nullopt;
    auto series = cb;
    for (std::size_t k = 0; k < n + 1 && !series.empty(); ++k)
        series = detail::bracket_space(a, cb, series, tol);
    if (!series.empty()) return std::nullopt;
    for (const auto& v : cb)
        if (!detail::matrix_nilpotent(a.ad(v), tol)) return std::nullopt;
    return cb;
}

template <class S>
Fingerprint fingerprint(const MetricLieAlgebra<S>& a,
                        double tol = scalar_traits<S>::default_tol()) {
    const std::size_t n = a.n;
    Fingerprint fp;
    fp.unimodular = is_unimodular(a, tol);
    auto fb = detail::full_basis<S>(n);
    // derived series
    auto cur = fb;
    fp.derived_dims.push_back(cur.size());
    for (std::size_t k = 0; k < n + 1 && !cur.empty(); ++k) {
        cur = detail::bracket_space(a, cur, cur, tol);
        if (cur.size() == fp.derived_dims.back() && !cur.empty()) {
            fp.derived_dims.push_back(cur.size());
            break;
        }
        fp.derived_dims.push_back(cur.size());
    }
    fp.solvable = fp.derived_dims.back() == 0;
    // lower central series
    cur = fb;
    fp.lcs_dims.push_back(cur.size());
    for (std::size_t k = 0; k < n + 1 && !cur.empty(); ++k) {
        auto nxt = detail::bracket_space(a, fb, cur, tol);
        if (nxt.size() == cur.size()) {
            fp.lcs_dims.push_back(nxt.size());
            break;
        }
        cur = nxt;
        fp.lcs_dims.push_back(cur.size());
    }
    fp.nilpotent = fp.lcs_dims.back() == 0;

    auto derived = detail::bracket_space(a, fb, fb, tol);
    const std::size_t dprime = derived.size();

    if (fp.nilpotent) {
        if (dprime == 0)
            fp.klass = AlgClass::abelian;
        else if (n == 3)
            fp.klass = AlgClass::h3;
        else if (dprime == 1)
            fp.klass = AlgClass::h3xR;
        else
            fp.klass = AlgClass::n4;
        fp.nilradical_known = true;
        fp.nilradical_dim = n;
        fp.label = alg_class_name(fp.klass);
        return fp;
    }
    if (!fp.solvable) {
        fp.label = "nonsolvable";
        return fp;
    }
    auto nil = nilradical(a, tol);
    if (nil) {
        fp.nilradical_known = true;
        fp.nilradical_dim = nil->size();
    }
    if (n != 4 || !nil || nil->size() != 3) {
        fp.label = "unknown";
        return fp;
    }

    // pick x outside the nilradical and restrict ad_x to it
    const auto& N = *nil;
    Vec<S> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec<S> e(n);
        e[i] = S(1);
        if (!detail::in_span(N, e, n, tol)) {
            x = e;
            break;
        }
    }
    auto Nderived = detail::bracket_space(a, N, N, tol);
    Mat<S> A(3, 3);  // ad_x in the nilradical basis
    {
        Mat<S> Bmat(n, 3);
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t r = 0; r < n; ++r) Bmat(r, c) = N[c][r];
        // solve Bmat * A_col = [x, N_c] for each column (least squares not
        // needed: [x, N] lies in N since N is an ideal)
        for (std::size_t c = 0; c < 3; ++c) {
            Vec<S> w = a.bracket(x, N[c]);
            auto sol = solve_affine(Bmat, w, tol);
            if (!sol.consistent) {
                fp.label = "unknown";
                return fp;
            }
            for (std::size_t r = 0; r < 3; ++r) A(r, c) = sol.particular[r];
        }
    }
    auto spec = detail::eigenvalues_sorted(detail::to_eigen(A));
    fp.spectrum = spec;
    auto cp = char_poly(A);  // t^3 + c2 t^2 + c1 t + c0
    auto cs = detail::cubic_structure(cp[2], cp[1], cp[0], tol);

    if (Nderived.empty()) {
        // abelian nilradical: r-family
        if (cs.complex_pair) {
            fp.klass = AlgClass::r4p_mu_lambda;
        } else if (cs.repeated) {
            Mat<S> M = A - cs.root * Mat<S>::identity(3);
            std::size_t geo = 3 - rank(M, std::max(tol, 1e-7));
            if (cs.alg_mult == 3)
                fp.klass = geo == 1 ? AlgClass::r4
                                    : (geo == 2 ? AlgClass::r4_lambda : AlgClass::r4_mu_lambda);
            else
                fp.klass = geo == 1 ? AlgClass::r4_lambda : AlgClass::r4_mu_lambda;
        } else {
            fp.klass = AlgClass::r4_mu_lambda;
        }
        // central direct factor: ker(A) not inside im(A) splits off R
        if (scalar_traits<S>::is_zero(det(A, tol), std::max(tol, 1e-9))) {
            auto kerA = nullspace(A, std::max(tol, 1e-7));
            std::vector<Vec<S>> imA;
            for (std::size_t c = 0; c < 3; ++c) {
                Vec<S> col(3);
                for (std::size_t r = 0; r < 3; ++r) col[r] = A(r, c);
                imA.push_back(col);
            }
            imA = detail::span_basis(imA, 3, tol);
            if (!kerA.empty() && !detail::in_span(imA, kerA[0], 3, std::max(tol, 1e-7))) {
                // quotient 2x2 structure: drop one zero eigenvalue
                std::vector<std::complex<double>> q;
                bool dropped = false;
                for (auto e : spec) {
                    if (!dropped && std::abs(e) <= 1e-7) {
                        dropped = true;
                        continue;
                    }
                    q.push_back(e);
                }
                fp.spectrum = q;
                if (q.size() == 2 && std::abs(q[0].imag()) > 1e-9) {
                    fp.klass = AlgClass::r3p_lambda_xR;
                } else if (fp.klass == AlgClass::r4_lambda || fp.klass == AlgClass::r4) {
                    fp.klass = AlgClass::r3xR;
                } else {
                    fp.klass = AlgClass::r3_lambda_xR;
                }
            }
        }
    } else {
        // Heisenberg nilradical: d-family; the center of N is its derived line
        Vec<S> z = Nderived[0];
        // center eigenvalue: [x, z] = mu_z * z
        Vec<S> xz = a.bracket(x, z);
        S mu_z(0);
        for (std::size_t i = 0; i < n; ++i)
            if (!scalar_traits<S>::is_zero(z[i], std::max(tol, 1e-7))) {
                mu_z = xz[i] / z[i];
                break;
            }
        // quotient action on N / z
        auto eig = detail::eigenvalues_sorted(detail::to_eigen(A));
        // remove one copy of mu_z (the center eigenvalue) from the triple
        double mz = scalar_traits<S>::to_double(mu_z);
        std::vector<std::complex<double>> q;
        bool removed = false;
        for (auto e : eig) {
            if (!removed && std::abs(e.imag()) < 1e-9 &&
                std::abs(e.real() - mz) <= 1e-7 * std::max(1.0, std::abs(mz))) {
                removed = true;
                continue;
            }
            q.push_back(e);
        }
        if (!removed && !q.empty()) q.pop_back();
        fp.spectrum = q;
        fp.spectrum.push_back(mz);  // spectrum = {alpha, beta, center}
        bool cplx = q.size() == 2 && std::abs(q[0].imag()) > 1e-9;
        if (cplx) {
            fp.klass = AlgClass::d4p_lambda;
        } else if (scalar_traits<S>::is_zero(mu_z, std::max(tol, 1e-9))) {
            fp.klass = AlgClass::d4;
        } else if (q.size() == 2 &&
                   std::abs(q[0].real() - q[1].real()) <=
                       1e-7 * std::max(1.0, std::abs(q[0].real()))) {
            // repeated quotient eigenvalue: diagonalizable would force a
            // scalar 2x2 block; check the Jordan structure of A at it
            S r = mu_z / S(2);
            Mat<S> M = A - r * Mat<S>::identity(3);
            std::size_t geo = 3 - rank(M, std::max(tol, 1e-7));
            fp.klass = geo >= 2 ? AlgClass::d4_lambda : AlgClass::h4;
        } else {
            fp.klass = AlgClass::d4_lambda;
        }
    }
    std::ostringstream os;
    os << alg_class_name(fp.klass) << " [";
    for (std::size_t i = 0; i < fp.spectrum.size(); ++i) {
        if (i) os << ", ";
        os << fp.spectrum[i].real();
        if (std::abs(fp.spectrum[i].imag()) > 1e-12) os << (fp.spectrum[i].imag() > 0 ? "+" : "")
                                                        << fp.spectrum[i].imag() << "i";
    }
    os << "]";
    fp.label = os.str();
    return fp;
}

// ---- label matching --------------------------------------------------------
// Checks whether the fingerprint matches a target class with parameters,
// up to overall rescaling of the derivation, eigenvalue permutation, and
// (for the primed families) the simultaneous sign flip of both parameters.

inline bool matches_label(const Fingerprint& fp, AlgClass target,
                          const std::vector<double>& params = {}, double tol = 1e-7) {
    auto close = [&](double x, double y) {
        return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    if (fp.klass != target) return false;
    const auto& s = fp.spectrum;
    switch (target) {
        case AlgClass::abelian:
        case AlgClass::h3:
        case AlgClass::h3xR:
        case AlgClass::n4:
        case AlgClass::r4:
        case AlgClass::r3xR:
        case AlgClass::d4:
            return true;
        case AlgClass::r4_lambda: {
            // eigenvalues {lambda,lambda,1} up to scale (Jordan block at lambda)
            if (params.size() != 1 || s.size() != 3) return false;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j) {
                    std::size_t k = 3 - i - j;
                    if (close(s[i].real(), s[j].real()) && std::abs(s[k].real()) > tol &&
                        close(s[i].real() / s[k].real(), params[0]))
                        return true;
                }
            return false;
        }
        case AlgClass::r4_mu_lambda: {
            // eigenvalues {1,mu,lambda} up to scale and permutation
            if (params.size() != 2 || s.size() != 3) return false;
            for (std::size_t i = 0; i < 3; ++i) {
                double sc = s[i].real();
                if (std::abs(sc) < tol) continue;
                std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
                if (close(s[a].real() / sc, params[0]) && close(s[b].real() / sc, params[1]))
                    return true;
                if (close(s[a].real() / sc, params[1]) && close(s[b].real() / sc, params[0]))
                    return true;
            }
            return false;
        }
        case AlgClass::r4p_mu_lambda: {
            // real mu, complex pair lambda +- i, up to scale; (mu,lambda) ~ -(mu,lambda)
            if (params.size() != 2 || s.size() != 3) return false;
            double re = 0, q = 0, r = 0;
            for (auto e : s) {
                if (std::abs(e.imag()) > tol)
                    re = e.real(), q = std::abs(e.imag());
                else
                    r = e.real();
            }
            if (q < tol) return false;
            return (close(r / q, params[0]) && close(re / q, params[1])) ||
                   (close(r / q, -params[0]) && close(re / q, -params[1]));
        }
        case AlgClass::r3_lambda_xR: {
            // quotient eigenvalues {1, lambda} up to scale (lambda ~ 1/lambda)
            if (params.size() != 1 || s.size() != 2) return false;
            double a = s[0].real(), b = s[1].real();
            if (std::abs(a) > tol && close(b / a, params[0])) return true;
            if (std::abs(b) > tol && close(a / b, params[0])) return true;
            return false;
        }
        case AlgClass::r3p_lambda_xR: {
            if (params.size() != 1 || s.size() != 2) return false;
            double p = s[0].real(), q = std::abs(s[0].imag());
            if (q < tol) return false;
            return close(p / q, params[0]) || close(p / q, -params[0]);
        }
        case AlgClass::d4_lambda: {
            // center scaled to 1; others {lambda, 1-lambda}, lambda ~ 1-lambda
            if (params.size() != 1 || s.size() != 3) return false;
            double c = s[2].real();
            if (std::abs(c) < tol) return false;
            double a = s[0].real() / c, b = s[1].real() / c;
            return (close(a, params[0]) && close(b, 1 - params[0])) ||
                   (close(b, params[0]) && close(a, 1 - params[0]));
        }
        case AlgClass::d4p_lambda: {
            // complex pair lambda +- i (scaled), center 2*lambda; lambda ~ -lambda
            if (params.size() != 1 || s.size() != 3) return false;
            double p = s[0].real(), q = std::abs(s[0].imag());
            if (q < tol) return false;
            return close(p / q, params[0]) || close(p / q, -params[0]);
        }
        case AlgClass::h4:
            return true;
        default:
            return false;
    }
}

}  // namespace slab

#endif
