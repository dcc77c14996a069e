#ifndef SOLITONLAB_ALGEBRA_HPP
#define SOLITONLAB_ALGEBRA_HPP

// The metric Lie algebra data model: structure constants + metric matrix,
// with validation, basis changes, products and (de)serialization.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linalg.hpp"
#include "scalar.hpp"

namespace slab {

using json = nlohmann::json;

template <class S>
struct MetricLieAlgebra {
    std::size_t n = 0;
    std::vector<S> cc;  // structure constants, flat [i][j][k], size n^3
    Mat<S> g;           // metric, n x n symmetric
    std::string basis_note;

    MetricLieAlgebra() = default;
    explicit MetricLieAlgebra(std::size_t dim, std::string note = "")
        : n(dim), cc(dim * dim * dim, S(0)), g(dim, dim), basis_note(std::move(note)) {}

    S& c(std::size_t i, std::size_t j, std::size_t k) { return cc[(i * n + j) * n + k]; }
    const S& c(std::size_t i, std::size_t j, std::size_t k) const {
        return cc[(i * n + j) * n + k];
    }

    // [e_i, e_j] += v e_k and the antisymmetric companion.
    void add_bracket(std::size_t i, std::size_t j, std::size_t k, const S& v) {
        c(i, j, k) += v;
        c(j, i, k) -= v;
    }

    // coordinates of [x, y]
    Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
        Vec<S> z(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (scalar_traits<S>::exact && x[i] == S(0)) break;
                for (std::size_t k = 0; k < n; ++k) z[k] += x[i] * y[j] * c(i, j, k);
            }
        return z;
    }

    // matrix of ad_{e_i}: (ad_i)^k_j = c_{ij}^k
    Mat<S> ad(std::size_t i) const {
        Mat<S> m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = c(i, j, k);
        return m;
    }

    Mat<S> ad(const Vec<S>& x) const {
        Mat<S> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) m(k, j) += x[i] * c(i, j, k);
        return m;
    }

    S inner(const Vec<S>& x, const Vec<S>& y) const {
        S s(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += x[i] * g(i, j) * y[j];
        return s;
    }
};

struct ValidationReport {
    bool antisymmetric = true;
    bool jacobi = true;
    bool metric_symmetric = true;
    bool metric_nondegenerate = true;
    SignatureCounts sig;
    // first failing Jacobi quadruple (i,j,k,l), 0-based, when jacobi=false
    std::array<std::size_t, 4> jacobi_fail{};
    bool ok() const {
        return antisymmetric && jacobi && metric_symmetric && metric_nondegenerate;
    }
};

template <class S>
ValidationReport validate(const MetricLieAlgebra<S>& a,
                          double tol = scalar_traits<S>::default_tol()) {
    ValidationReport r;
    const std::size_t n = a.n;
    for (std::size_t i = 0; i < n && r.antisymmetric; ++i)
        for (std::size_t j = 0; j < n && r.antisymmetric; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_traits<S>::is_zero(a.c(i, j, k) + a.c(j, i, k), tol)) {
                    r.antisymmetric = false;
                    break;
                }
    for (std::size_t i = 0; i < n && r.jacobi; ++i)
        for (std::size_t j = 0; j < n && r.jacobi; ++j)
            for (std::size_t k = 0; k < n && r.jacobi; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    S s(0);
                    for (std::size_t m = 0; m < n; ++m)
                        s += a.c(i, j, m) * a.c(m, k, l) + a.c(j, k, m) * a.c(m, i, l) +
                             a.c(k, i, m) * a.c(m, j, l);
                    if (!scalar_traits<S>::is_zero(s, tol)) {
                        r.jacobi = false;
                        r.jacobi_fail = {i, j, k, l};
                        break;
                    }
                }
    for (std::size_t i = 0; i < n && r.metric_symmetric; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!scalar_traits<S>::eq(a.g(i, j), a.g(j, i), tol)) {
                r.metric_symmetric = false;
                break;
            }
    r.sig = signature(a.g, tol);
    r.metric_nondegenerate = (r.sig.zero == 0);
    return r;
}

// Pushforward along the basis change whose columns are the new basis
// vectors in old coordinates: c' = M^{-1} c(M., M.), g' = M^T g M.
template <class S>
MetricLieAlgebra<S> change_basis(const MetricLieAlgebra<S>& a, const Mat<S>& M,
                                 double tol = scalar_traits<S>::default_tol()) {
    if (M.rows != a.n || M.cols != a.n) throw std::invalid_argument("basis-change shape");
    auto Minv = inverse(M, tol);
    if (!Minv) throw std::invalid_argument("not a basis: singular matrix");
    MetricLieAlgebra<S> b(a.n, a.basis_note);
    for (std::size_t p = 0; p < a.n; ++p)
        for (std::size_t q = 0; q < a.n; ++q) {
            Vec<S> fp(a.n), fq(a.n);
            for (std::size_t i = 0; i < a.n; ++i) {
                fp[i] = M(i, p);
                fq[i] = M(i, q);
            }
            Vec<S> br = a.bracket(fp, fq);
            Vec<S> coords = (*Minv) * br;
            for (std::size_t k = 0; k < a.n; ++k) b.c(p, q, k) = coords[k];
        }
    b.g = M.transpose() * a.g * M;
    return b;
}

// a x R^k with product metric; signs holds the k diagonal entries (+-1).
template <class S>
MetricLieAlgebra<S> direct_product(const MetricLieAlgebra<S>& a, std::size_t k,
                                   const std::vector<int>& signs) {
    if (k < 1 || signs.size() != k) throw std::invalid_argument("direct_product: bad k/signs");
    MetricLieAlgebra<S> b(a.n + k, a.basis_note);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t l = 0; l < a.n; ++l) b.c(i, j, l) = a.c(i, j, l);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) b.g(i, j) = a.g(i, j);
    for (std::size_t i = 0; i < k; ++i) b.g(a.n + i, a.n + i) = S(signs[i]);
    return b;
}

// Signature of g restricted to the span of the given vectors (columns).
template <class S>
SignatureCounts restricted_signature(const MetricLieAlgebra<S>& a,
                                     const std::vector<Vec<S>>& span,
                                     double tol = scalar_traits<S>::default_tol()) {
    std::size_t m = span.size();
    Mat<S> B(a.n, m);
    for (std::size_t j = 0; j < m; ++j) {
        if (span[j].size() != a.n) throw std::invalid_argument("restricted_signature: bad vector");
        for (std::size_t i = 0; i < a.n; ++i) B(i, j) = span[j][i];
    }
    if (rank(B, tol) != m)
        throw std::invalid_argument("restricted_signature: dependent spanning set");
    Mat<S> gram = B.transpose() * a.g * B;
    return signature(gram, tol);
}

// ---- JSON serialization -------------------------------------------------
// { "dim": n, "metric": [[...]], "brackets": [{"i":1,"j":2,"k":3,"v":...}],
//   "scalar": "rational"|"float", "note": "..." }
// Indices are 1-based; only i<j entries are listed; values are "p/q"
// strings on the rational backend and plain numbers on the float backend.

namespace detail {
inline Rat scalar_from_json_impl(const json& v, const Rat*) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw std::invalid_argument("rational backend requires integer or \"p/q\" values");
}
inline double scalar_from_json_impl(const json& v, const double*) {
    if (v.is_string()) return scalar_traits<Rat>::to_double(parse_rational(v.get<std::string>()));
    if (v.is_number()) return v.get<double>();
    throw std::invalid_argument("bad numeric value");
}
template <class S>
S scalar_from_json(const json& v) {
    return scalar_from_json_impl(v, static_cast<const S*>(nullptr));
}
inline json scalar_to_json(const Rat& v) { return to_string(v); }
inline json scalar_to_json(double v) { return v; }
}  // namespace detail

template <class S>
json to_json(const MetricLieAlgebra<S>& a) {
    json j;
    j["dim"] = a.n;
    j["scalar"] = scalar_traits<S>::exact ? "rational" : "float";
    j["note"] = a.basis_note;
    json metric = json::array();
    for (std::size_t i = 0; i < a.n; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < a.n; ++jj) row.push_back(detail::scalar_to_json(a.g(i, jj)));
        metric.push_back(row);
    }
    j["metric"] = metric;
    json brackets = json::array();
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t jj = i + 1; jj < a.n; ++jj)
            for (std::size_t k = 0; k < a.n; ++k)
                if (!(scalar_traits<S>::exact ? a.c(i, jj, k) == S(0)
                                              : scalar_traits<S>::is_zero(a.c(i, jj, k))))
                    brackets.push_back({{"i", i + 1},
                                        {"j", jj + 1},
                                        {"k", k + 1},
                                        {"v", detail::scalar_to_json(a.c(i, jj, k))}});
    j["brackets"] = brackets;
    return j;
}

template <class S>
MetricLieAlgebra<S> from_json(const json& j) {
    std::size_t n = j.at("dim").get<std::size_t>();
    if (n < 2 || n > 4) throw std::invalid_argument("dim must be 3 or 4 (2 allowed for tests)");
    MetricLieAlgebra<S> a(n, j.value("note", ""));
    const json& metric = j.at("metric");
    if (metric.size() != n) throw std::invalid_argument("metric has wrong number of rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (metric[i].size() != n) throw std::invalid_argument("metric row has wrong length");
        for (std::size_t jj = 0; jj < n; ++jj)
            a.g(i, jj) = detail::scalar_from_json<S>(metric[i][jj]);
    }
    for (const json& b : j.value("brackets", json::array())) {
        std::size_t i = b.at("i").get<std::size_t>(), jj = b.at("j").get<std::size_t>(),
                    k = b.at("k").get<std::size_t>();
        if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n || i >= jj)
            throw std::invalid_argument("bracket entry needs 1-based indices with i<j");
        a.add_bracket(i - 1, jj - 1, k - 1, detail::scalar_from_json<S>(b.at("v")));
    }
    return a;
}

}  // namespace slab

#endif
