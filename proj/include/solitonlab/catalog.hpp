#ifndef SOLITONLAB_CATALOG_HPP
#define SOLITONLAB_CATALOG_HPP

// Built-in registry of the classified left-invariant metric families on 3-
// and 4-dimensional Lie groups, with expected-result records (soliton
// constant, scalar curvature, criticality value, Lie-algebra label, wave
// verdicts) evaluated from the stated closed-form expressions. Instances
// form the verification corpus of the test suite and the `verify`/`scan`
// CLI commands.

#include <functional>
#include <map>

#include "classify.hpp"
#include "fingerprint.hpp"

namespace slab::cat {

template <class S>
using Params = std::map<std::string, S>;

template <class S>
struct Expected {
    std::optional<S> c, tau, rhonorm2, t;
    std::optional<SolitonKind> kind;
    std::optional<bool> soliton_exists, einstein, loc_symmetric, s_critical, lirs_exists,
        ricci_parallel;
    std::optional<bool> ft_critical;  // E-L equation vanishes at some t (false: at no t)
    std::optional<WaveKind> wave;
    std::string planewave_type;  // "", "i" or "ii"
    std::optional<AlgClass> klass;
    std::vector<double> klass_params;
    std::optional<std::size_t> null_direction_index;  // expected null basis direction
    std::optional<S> lirs_c;
};

template <class S>
struct FamilyInstance {
    std::string id;
    Params<S> params;
    MetricLieAlgebra<S> algebra;
    Expected<S> expected;
};

template <class S>
struct FamilySpec {
    std::string id;
    std::vector<std::string> param_names;
    Params<S> defaults;
    std::function<FamilyInstance<S>(const Params<S>&)> build;
    std::vector<Params<S>> grid;  // default verification grid (possibly empty params)
};

namespace detail {

template <class S>
S getp(const Params<S>& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw std::invalid_argument("missing parameter: " + k);
    return it->second;
}

template <class S>
void constraint(bool ok, const std::string& id, const std::string& what) {
    if (!ok) throw std::invalid_argument(id + ": constraint violated: " + what);
}

template <class S>
Mat<S> diag_metric(std::size_t n, std::initializer_list<int> d) {
    Mat<S> g(n, n);
    std::size_t i = 0;
    for (int v : d) g(i, i) = S(v), ++i;
    return g;
}

// pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1
template <class S>
Mat<S> pon12(std::size_t n = 4) {
    Mat<S> g(n, n);
    g(0, 1) = g(1, 0) = S(1);
    for (std::size_t i = 2; i < n; ++i) g(i, i) = S(1);
    return g;
}

// pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1
template <class S>
Mat<S> pon34() {
    Mat<S> g(4, 4);
    g(0, 0) = g(1, 1) = S(1);
    g(2, 3) = g(3, 2) = S(1);
    return g;
}

inline bool pos(double x) { return x > 0; }

// evaluate boost.multiprecision expression templates before trait lookups
template <class T>
struct eval_type {
    using type = T;
};
template <class Tag, class A1, class A2, class A3, class A4>
struct eval_type<boost::multiprecision::detail::expression<Tag, A1, A2, A3, A4>> {
    using type =
        typename boost::multiprecision::detail::expression<Tag, A1, A2, A3, A4>::result_type;
};

template <class T>
SolitonKind kind_of(const T& c) {
    using S = typename eval_type<T>::type;
    double d = scalar_traits<S>::to_double(S(c));
    if (std::abs(d) <= scalar_traits<double>::default_tol()) return SolitonKind::steady;
    return d > 0 ? SolitonKind::shrinking : SolitonKind::expanding;
}

template <class T>
bool is0(const T& x) {
    using S = typename eval_type<T>::type;
    return scalar_traits<S>::is_zero(S(x), scalar_traits<S>::default_tol());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// family builders
// ---------------------------------------------------------------------------

template <class S>
void register_r3_normal_forms(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using detail::getp;
    using P = Params<S>;

    // (R.i): nilpotent shrinking soliton on n4
    out.push_back(FamilySpec<S>{
        "R3.g_R.i",
        {},
        {},
        [](const P&) {
            FamilyInstance<S> fi;
            fi.id = "R3.g_R.i";
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 3, 1, S(1));
            a.add_bracket(1, 3, 2, S(1));
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            fi.expected.c = S(3) / S(2);
            fi.expected.tau = S(1);
            fi.expected.rhonorm2 = S(3) / S(2);
            fi.expected.t = S(-3) / S(2);
            fi.expected.kind = SolitonKind::shrinking;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::n4;
            fi.expected.einstein = false;
            return fi;
        },
        {P{}}});

    // (R.ii)
    out.push_back(FamilySpec<S>{
        "R3.g_R.ii",
        {"eta3", "gamma1"},
        {{"eta3", S(2)}, {"gamma1", S(0)}},
        [](const P& p) {
            S eta3 = getp(p, "eta3"), g1 = getp(p, "gamma1");
            constraint<S>(!detail::is0(eta3) && !detail::is0(eta3 - S(1)), "R3.g_R.ii",
                          "eta3 not in {0,1}");
            constraint<S>(scalar_traits<S>::to_double(g1) >= 0, "R3.g_R.ii", "gamma1 >= 0");
            FamilyInstance<S> fi;
            fi.id = "R3.g_R.ii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 3, 0, S(1));
            a.add_bracket(0, 3, 1, -g1);
            a.add_bracket(1, 3, 0, g1);
            a.add_bracket(1, 3, 1, S(1));
            a.add_bracket(2, 3, 2, eta3);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            S c = eta3 * eta3 + S(2);
            S tau = S(2) * (eta3 * eta3 + S(2) * eta3 + S(3));
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::shrinking;
            fi.expected.soliton_exists = true;
            double e3d = scalar_traits<S>::to_double(eta3),
                   g1d = scalar_traits<S>::to_double(g1);
            if (g1d == 0) {
                fi.expected.klass = AlgClass::r4_mu_lambda;
                fi.expected.klass_params = {1.0, e3d};
            } else {
                fi.expected.klass = AlgClass::r4p_mu_lambda;
                fi.expected.klass_params = {e3d / g1d, 1.0 / g1d};
            }
            return fi;
        },
        {P{{"eta3", S(2)}, {"gamma1", S(0)}}, P{{"eta3", S(-1)}, {"gamma1", S(0)}},
         P{{"eta3", S(3)}, {"gamma1", S(2)}}, P{{"eta3", S(1) / S(2)}, {"gamma1", S(1)}},
         P{{"eta3", S(5)}, {"gamma1", S(1) / S(3)}}}});

    // (R.iii)
    out.push_back(FamilySpec<S>{
        "R3.g_R.iii",
        {"eta2", "eta3"},
        {{"eta2", S(2)}, {"eta3", S(3)}},
        [](const P& p) {
            S e2 = getp(p, "eta2"), e3 = getp(p, "eta3");
            constraint<S>(!detail::is0(e2) && !detail::is0(e2 - S(1)), "R3.g_R.iii",
                          "eta2 not in {0,1}");
            constraint<S>(!detail::is0(e3) && !detail::is0(e3 - S(1)), "R3.g_R.iii",
                          "eta3 not in {0,1}");
            constraint<S>(!detail::is0(e2 - e3), "R3.g_R.iii", "eta2 != eta3");
            FamilyInstance<S> fi;
            fi.id = "R3.g_R.iii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 3, 0, S(1));
            a.add_bracket(1, 3, 1, e2);
            a.add_bracket(2, 3, 2, e3);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            S c = e2 * e2 + e3 * e3 + S(1);
            S tau = S(2) * (e2 * e2 + e3 * e3 + e2 * e3 + e2 + e3 + S(1));
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::shrinking;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::r4_mu_lambda;
            fi.expected.klass_params = {scalar_traits<S>::to_double(e2),
                                        scalar_traits<S>::to_double(e3)};
            return fi;
        },
        {P{{"eta2", S(2)}, {"eta3", S(3)}}, P{{"eta2", S(-1)}, {"eta3", S(2)}},
         P{{"eta2", S(1) / S(2)}, {"eta3", S(-3)}}, P{{"eta2", S(4)}, {"eta3", S(1) / S(4)}}}});

    // (L.Ia.i): like (R.ii) with e3 timelike
    out.push_back(FamilySpec<S>{
        "R3.L.Ia.i",
        {"eta3", "gamma1"},
        {{"eta3", S(2)}, {"gamma1", S(0)}},
        [](const P& p) {
            S eta3 = getp(p, "eta3"), g1 = getp(p, "gamma1");
            constraint<S>(!detail::is0(eta3) && !detail::is0(eta3 - S(1)), "R3.L.Ia.i",
                          "eta3 not in {0,1}");
            constraint<S>(scalar_traits<S>::to_double(g1) >= 0, "R3.L.Ia.i", "gamma1 >= 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ia.i";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, S(1));
            a.add_bracket(0, 3, 1, -g1);
            a.add_bracket(1, 3, 0, g1);
            a.add_bracket(1, 3, 1, S(1));
            a.add_bracket(2, 3, 2, eta3);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            S c = -(eta3 * eta3 + S(2));
            S tau = S(-2) * (eta3 * eta3 + S(2) * eta3 + S(3));
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            double e3d = scalar_traits<S>::to_double(eta3),
                   g1d = scalar_traits<S>::to_double(g1);
            if (g1d == 0) {
                fi.expected.klass = AlgClass::r4_mu_lambda;
                fi.expected.klass_params = {1.0, e3d};
            } else {
                fi.expected.klass = AlgClass::r4p_mu_lambda;
                fi.expected.klass_params = {e3d / g1d, 1.0 / g1d};
            }
            return fi;
        },
        {P{{"eta3", S(2)}, {"gamma1", S(0)}}, P{{"eta3", S(-2)}, {"gamma1", S(1)}},
         P{{"eta3", S(1) / S(3)}, {"gamma1", S(2)}}, P{{"eta3", S(3)}, {"gamma1", S(1) / S(2)}}}});

    // (L.Ia.ii)
    out.push_back(FamilySpec<S>{
        "R3.L.Ia.ii",
        {"eta2", "gamma2"},
        {{"eta2", S(-2)}, {"gamma2", S(1)}},
        [](const P& p) {
            S e2 = getp(p, "eta2"), g2 = getp(p, "gamma2");
            constraint<S>(!detail::is0(e2) && !detail::is0(e2 - S(1)), "R3.L.Ia.ii",
                          "eta2 not in {0,1}");
            constraint<S>(scalar_traits<S>::to_double(g2) >= 0, "R3.L.Ia.ii", "gamma2 >= 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ia.ii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, S(1));
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 1, e2);
            a.add_bracket(2, 3, 0, g2);
            a.add_bracket(2, 3, 2, S(1));
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            S c = -(e2 * e2 + S(2));
            S tau = S(-2) * (e2 * e2 + S(2) * e2 + S(3));
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            double e2d = scalar_traits<S>::to_double(e2),
                   g2d = scalar_traits<S>::to_double(g2);
            if (g2d == 1) {
                fi.expected.klass = AlgClass::r3_lambda_xR;
                fi.expected.klass_params = {e2d / 2};
            } else {
                fi.expected.klass = AlgClass::r4_mu_lambda;
                fi.expected.klass_params = {(g2d + 1) / e2d, (1 - g2d) / e2d};
            }
            return fi;
        },
        {P{{"eta2", S(-2)}, {"gamma2", S(1)}}, P{{"eta2", S(2)}, {"gamma2", S(0)}},
         P{{"eta2", S(3)}, {"gamma2", S(2)}}, P{{"eta2", S(-1) / S(2)}, {"gamma2", S(3)}}}});

    // (L.Ia.iii)
    out.push_back(FamilySpec<S>{
        "R3.L.Ia.iii",
        {"eta2", "eta3"},
        {{"eta2", S(2)}, {"eta3", S(3)}},
        [](const P& p) {
            S e2 = getp(p, "eta2"), e3 = getp(p, "eta3");
            constraint<S>(!detail::is0(e2) && !detail::is0(e2 - S(1)), "R3.L.Ia.iii",
                          "eta2 not in {0,1}");
            constraint<S>(!detail::is0(e3) && !detail::is0(e3 - S(1)), "R3.L.Ia.iii",
                          "eta3 not in {0,1}");
            constraint<S>(!detail::is0(e2 - e3), "R3.L.Ia.iii", "eta2 != eta3");
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ia.iii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, S(1));
            a.add_bracket(1, 3, 1, e2);
            a.add_bracket(2, 3, 2, e3);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            S c = -(e2 * e2 + e3 * e3 + S(1));
            S tau = S(-2) * (e2 * e2 + e3 * e3 + e2 * e3 + e2 + e3 + S(1));
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::r4_mu_lambda;
            fi.expected.klass_params = {scalar_traits<S>::to_double(e2),
                                        scalar_traits<S>::to_double(e3)};
            return fi;
        },
        {P{{"eta2", S(2)}, {"eta3", S(3)}}, P{{"eta2", S(-1)}, {"eta3", S(1) / S(2)}},
         P{{"eta2", S(4)}, {"eta3", S(-2)}}}});

    // (L.Ib.i)
    out.push_back(FamilySpec<S>{
        "R3.L.Ib.i",
        {"eta", "delta"},
        {{"eta", S(1)}, {"delta", S(1)}},
        [](const P& p) {
            S eta = getp(p, "eta"), del = getp(p, "delta");
            constraint<S>(!detail::is0(eta), "R3.L.Ib.i", "eta != 0");
            // excluded Einstein points are irrational; no rational grid risk
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ib.i";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, eta);
            a.add_bracket(1, 3, 1, del);
            a.add_bracket(1, 3, 2, S(-1));
            a.add_bracket(2, 3, 1, S(1));
            a.add_bracket(2, 3, 2, del);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            S c = -eta * eta - S(2) * del * del + S(2);
            S tau = S(-2) * ((eta + del) * (eta + del) + S(2) * del * del - S(1));
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.kind = detail::kind_of(c);
            fi.expected.soliton_exists = true;
            if (!detail::is0(tau))
                fi.expected.t = -c / tau;
            else
                fi.expected.s_critical = true;
            fi.expected.klass = AlgClass::r4p_mu_lambda;
            fi.expected.klass_params = {scalar_traits<S>::to_double(eta),
                                        scalar_traits<S>::to_double(del)};
            return fi;
        },
        {P{{"eta", S(1)}, {"delta", S(1)}}, P{{"eta", S(1)}, {"delta", S(0)}},
         P{{"eta", S(-2)}, {"delta", S(1)}}, P{{"eta", S(1)}, {"delta", S(-2) / S(3)}},
         P{{"eta", S(1) / S(2)}, {"delta", S(2)}}}});

    // (L.Ib.ii)
    out.push_back(FamilySpec<S>{
        "R3.L.Ib.ii",
        {},
        {},
        [](const P&) {
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ib.ii";
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 2, S(1));
            a.add_bracket(1, 3, 2, S(-1));
            a.add_bracket(2, 3, 0, S(1));
            a.add_bracket(2, 3, 1, S(1));
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.c = S(3);
            fi.expected.tau = S(2);
            fi.expected.rhonorm2 = S(6);
            fi.expected.t = S(-3) / S(2);
            fi.expected.kind = SolitonKind::shrinking;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::n4;
            return fi;
        },
        {P{}}});

    // (L.II.i)
    out.push_back(FamilySpec<S>{
        "R3.L.II.i",
        {"eta1", "eta2"},
        {{"eta1", S(1)}, {"eta2", S(2)}},
        [](const P& p) {
            S e1 = getp(p, "eta1"), e2 = getp(p, "eta2");
            constraint<S>(!detail::is0(e2), "R3.L.II.i", "eta2 != 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.II.i";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, e1);
            a.add_bracket(0, 3, 1, S(1));
            a.add_bracket(1, 3, 1, e1);
            a.add_bracket(2, 3, 2, e2);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            S c = -(S(2) * e1 * e1 + e2 * e2);
            S tau = S(-2) * (S(3) * e1 * e1 + e2 * e2 + S(2) * e1 * e2);
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::r4_lambda;
            fi.expected.klass_params = {scalar_traits<S>::to_double(e1) /
                                        scalar_traits<S>::to_double(e2)};
            return fi;
        },
        {P{{"eta1", S(1)}, {"eta2", S(2)}}, P{{"eta1", S(0)}, {"eta2", S(1)}},
         P{{"eta1", S(1)}, {"eta2", S(1)}}, P{{"eta1", S(-2)}, {"eta2", S(3)}},
         P{{"eta1", S(1)}, {"eta2", S(-3)}}}});

    // (L.II.ii)
    out.push_back(FamilySpec<S>{
        "R3.L.II.ii",
        {"eta1", "eta2"},
        {{"eta1", S(1)}, {"eta2", S(2)}},
        [](const P& p) {
            S e1 = getp(p, "eta1"), e2 = getp(p, "eta2");
            constraint<S>(!detail::is0(e2) && !detail::is0(e2 - e1) &&
                              !detail::is0(e2 + S(2) * e1),
                          "R3.L.II.ii", "eta2(eta2-eta1)(eta2+2 eta1) != 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.II.ii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, -e2 / S(2));
            a.add_bracket(0, 3, 1, S(1));
            a.add_bracket(1, 3, 1, (S(4) * e1 + e2) / S(2));
            a.add_bracket(2, 3, 2, e2);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            S c = -(S(2) * e1 * e1 + e2 * e2);
            S tau = S(-2) * (S(3) * e1 * e1 + e2 * e2 + S(2) * e1 * e2);
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = -c / tau;
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            double e1d = scalar_traits<S>::to_double(e1),
                   e2d = scalar_traits<S>::to_double(e2);
            if (4 * e1d + e2d == 0) {
                fi.expected.klass = AlgClass::r3_lambda_xR;
                fi.expected.klass_params = {-2.0};
            } else {
                fi.expected.klass = AlgClass::r4_mu_lambda;
                fi.expected.klass_params = {-2.0, -(4 * e1d + e2d) / e2d};
            }
            return fi;
        },
        {P{{"eta1", S(1)}, {"eta2", S(2)}}, P{{"eta1", S(1)}, {"eta2", S(-4)}},
         P{{"eta1", S(-1)}, {"eta2", S(3)}}, P{{"eta1", S(2)}, {"eta2", S(1)}}}});

    // (L.II.iii)
    out.push_back(FamilySpec<S>{
        "R3.L.II.iii",
        {"eta1", "gamma3"},
        {{"eta1", S(1)}, {"gamma3", S(1)}},
        [](const P& p) {
            S e1 = getp(p, "eta1"), g3 = getp(p, "gamma3");
            constraint<S>(!detail::is0(e1) && !detail::is0(g3), "R3.L.II.iii",
                          "eta1*gamma3 != 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.II.iii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, e1);
            a.add_bracket(0, 3, 1, S(1));
            a.add_bracket(0, 3, 2, -g3);
            a.add_bracket(1, 3, 1, e1);
            a.add_bracket(2, 3, 1, g3);
            a.add_bracket(2, 3, 2, e1);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            S c = S(-3) * e1 * e1;
            S tau = S(-12) * e1 * e1;
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = S(-1) / S(4);
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::r4;
            return fi;
        },
        {P{{"eta1", S(1)}, {"gamma3", S(1)}}, P{{"eta1", S(-2)}, {"gamma3", S(3)}},
         P{{"eta1", S(1) / S(2)}, {"gamma3", S(-1)}}}});

    // (L.III): strict soliton normal form
    out.push_back(FamilySpec<S>{
        "R3.L.III",
        {"eta"},
        {{"eta", S(1)}},
        [](const P& p) {
            S eta = getp(p, "eta");
            constraint<S>(!detail::is0(eta), "R3.L.III", "eta != 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.III";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, eta);
            a.add_bracket(1, 3, 1, eta);
            a.add_bracket(1, 3, 2, S(1));
            a.add_bracket(2, 3, 0, S(1));
            a.add_bracket(2, 3, 2, eta);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            S c = S(-3) * eta * eta;
            S tau = S(-12) * eta * eta;
            fi.expected.c = c;
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = c * tau;
            fi.expected.t = S(-1) / S(4);
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::r4;
            fi.expected.loc_symmetric = false;
            return fi;
        },
        {P{{"eta", S(1)}}, P{{"eta", S(-2)}}, P{{"eta", S(1) / S(3)}}}});

    // (L.III) Case 2: steady plane wave
    out.push_back(FamilySpec<S>{
        "R3.L.III.case2",
        {"gamma2"},
        {{"gamma2", S(2)}},
        [](const P& p) {
            S g2 = getp(p, "gamma2");
            constraint<S>(!detail::is0(g2), "R3.L.III.case2", "gamma2 != 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.III.case2";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(1, 3, 2, -(g2 - S(1)));
            a.add_bracket(2, 3, 0, g2 + S(1));
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.soliton_exists = true;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.null_direction_index = 0;  // u1
            double g2d = scalar_traits<S>::to_double(g2);
            fi.expected.klass =
                (g2d == 1 || g2d == -1) ? AlgClass::h3xR : AlgClass::n4;
            return fi;
        },
        {P{{"gamma2", S(2)}}, P{{"gamma2", S(1)}}, P{{"gamma2", S(-1)}},
         P{{"gamma2", S(1) / S(2)}}}});
}

// general (pre-normal-form) R3 families: Einstein/local-symmetry conditions
// and negative or constrained soliton expectations over their grids
template <class S>
void register_r3_general(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using detail::getp;
    using P = Params<S>;

    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // g_R: [e1,e4]=eta1 e1 - g1 e2 - g2 e3, [e2,e4]=g1 e1 + eta2 e2 - g3 e3,
    //      [e3,e4]=g2 e1 + g3 e2 + eta3 e3; orthonormal, e4 timelike
    out.push_back(FamilySpec<S>{
        "R3.g_R",
        {"eta1", "eta2", "eta3", "gamma1", "gamma2", "gamma3"},
        {{"eta1", S(1)},
         {"eta2", S(1)},
         {"eta3", S(3)},
         {"gamma1", S(0)},
         {"gamma2", S(0)},
         {"gamma3", S(0)}},
        [getg](const P& p) {
            S e1 = getg(p, "eta1"), e2 = getg(p, "eta2"), e3 = getg(p, "eta3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            FamilyInstance<S> fi;
            fi.id = "R3.g_R";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 3, 0, e1);
            a.add_bracket(0, 3, 1, -g1);
            a.add_bracket(0, 3, 2, -g2);
            a.add_bracket(1, 3, 0, g1);
            a.add_bracket(1, 3, 1, e2);
            a.add_bracket(1, 3, 2, -g3);
            a.add_bracket(2, 3, 0, g2);
            a.add_bracket(2, 3, 1, g3);
            a.add_bracket(2, 3, 2, e3);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            bool ein = detail::is0(e1 - e2) && detail::is0(e2 - e3);
            bool ls = ein ||
                      (detail::is0(e1 - e2) && !detail::is0(e1) && detail::is0(e3) &&
                       detail::is0(g2) && detail::is0(g3)) ||
                      (detail::is0(e1) && detail::is0(e2) && detail::is0(g2) &&
                       detail::is0(g3) && !detail::is0(e3));
            fi.expected.einstein = ein;
            fi.expected.loc_symmetric = ls;
            return fi;
        },
        {P{{"eta1", S(1)}, {"eta2", S(2)}, {"eta3", S(3)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta1", S(1)}, {"eta2", S(1)}, {"eta3", S(1)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(0)}},
         P{{"eta1", S(2)}, {"eta2", S(2)}, {"eta3", S(0)}, {"gamma1", S(3)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta1", S(0)}, {"eta2", S(0)}, {"eta3", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta1", S(1)}, {"eta2", S(2)}, {"eta3", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(2)}}}});

    // g_L.Ia: same action with e3 timelike
    out.push_back(FamilySpec<S>{
        "R3.L.Ia",
        {"eta1", "eta2", "eta3", "gamma1", "gamma2", "gamma3"},
        {{"eta1", S(1)},
         {"eta2", S(2)},
         {"eta3", S(3)},
         {"gamma1", S(0)},
         {"gamma2", S(0)},
         {"gamma3", S(0)}},
        [getg](const P& p) {
            S e1 = getg(p, "eta1"), e2 = getg(p, "eta2"), e3 = getg(p, "eta3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ia";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, e1);
            a.add_bracket(0, 3, 1, -g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 0, g1);
            a.add_bracket(1, 3, 1, e2);
            a.add_bracket(1, 3, 2, g3);
            a.add_bracket(2, 3, 0, g2);
            a.add_bracket(2, 3, 1, g3);
            a.add_bracket(2, 3, 2, e3);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            bool ein = detail::is0(e1 - e2) && detail::is0(e2 - e3);
            bool ls =
                ein ||
                (detail::is0(e1 - e2) && !detail::is0(e1) && detail::is0(e3) &&
                 detail::is0(g2) && detail::is0(g3)) ||
                (detail::is0(e1 - e3) && !detail::is0(e1) && detail::is0(e2) &&
                 detail::is0(g1) && detail::is0(g3)) ||
                (detail::is0(e1) && detail::is0(e2) && detail::is0(g2) && detail::is0(g3) &&
                 !detail::is0(e3)) ||
                (detail::is0(e1) && detail::is0(e3) && detail::is0(g1) && detail::is0(g3) &&
                 !detail::is0(e2));
            fi.expected.einstein = ein;
            fi.expected.loc_symmetric = ls;
            return fi;
        },
        {P{{"eta1", S(1)}, {"eta2", S(2)}, {"eta3", S(3)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta1", S(2)}, {"eta2", S(2)}, {"eta3", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}},
         P{{"eta1", S(1)}, {"eta2", S(1)}, {"eta3", S(0)}, {"gamma1", S(2)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta1", S(1)}, {"eta2", S(0)}, {"eta3", S(1)}, {"gamma1", S(0)}, {"gamma2", S(2)}, {"gamma3", S(0)}},
         P{{"eta1", S(0)}, {"eta2", S(3)}, {"eta3", S(0)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(0)}},
         P{{"eta1", S(1)}, {"eta2", S(2)}, {"eta3", S(2)}, {"gamma1", S(1)}, {"gamma2", S(2)}, {"gamma3", S(1)}}}});

    // g_L.Ib: complex-conjugate eigenvalue block, e3 timelike
    out.push_back(FamilySpec<S>{
        "R3.L.Ib",
        {"eta", "delta", "nu", "gamma1", "gamma2", "gamma3"},
        {{"eta", S(1)},
         {"delta", S(1)},
         {"nu", S(1)},
         {"gamma1", S(0)},
         {"gamma2", S(0)},
         {"gamma3", S(0)}},
        [getg](const P& p) {
            S eta = getg(p, "eta"), del = getg(p, "delta"), nu = getg(p, "nu");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(nu), "R3.L.Ib", "nu != 0");
            FamilyInstance<S> fi;
            fi.id = "R3.L.Ib";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, eta);
            a.add_bracket(0, 3, 1, -g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 0, g1);
            a.add_bracket(1, 3, 1, del);
            a.add_bracket(1, 3, 2, g3 - nu);
            a.add_bracket(2, 3, 0, g2);
            a.add_bracket(2, 3, 1, g3 + nu);
            a.add_bracket(2, 3, 2, del);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            // Einstein (Ricci-flat) only at eta=-2delta=+-(2/sqrt3)nu with gamma=0
            bool gz = detail::is0(g1) && detail::is0(g2) && detail::is0(g3);
            bool ein = gz && detail::is0(eta + S(2) * del) &&
                       detail::is0(S(3) * eta * eta - S(4) * nu * nu);
            fi.expected.einstein = ein;
            fi.expected.loc_symmetric = ein;  // flat when Einstein; never otherwise
            if (gz) {
                // rescaled soliton data (normal form has nu = 1)
                S c = -eta * eta - S(2) * del * del + S(2) * nu * nu;
                S tau = S(-2) * ((eta + del) * (eta + del) + S(2) * del * del - nu * nu);
                fi.expected.c = c;
                fi.expected.tau = tau;
                fi.expected.soliton_exists = true;
                fi.expected.kind = detail::kind_of(c);
                if (!detail::is0(tau))
                    fi.expected.t = -c / tau;
                else if (!ein)
                    fi.expected.s_critical = true;
            }
            return fi;
        },
        {P{{"eta", S(1)}, {"delta", S(1)}, {"nu", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta", S(1)}, {"delta", S(0)}, {"nu", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta", S(2)}, {"delta", S(-1)}, {"nu", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta", S(1)}, {"delta", S(0)}, {"nu", S(1)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(1)}}}});

    // g_L.II
    out.push_back(FamilySpec<S>{
        "R3.L.II",
        {"eta1", "eta2", "gamma1", "gamma2", "gamma3", "eps"},
        {{"eta1", S(1)},
         {"eta2", S(2)},
         {"gamma1", S(0)},
         {"gamma2", S(0)},
         {"gamma3", S(0)},
         {"eps", S(1)}},
        [getg](const P& p) {
            S e1 = getg(p, "eta1"), e2 = getg(p, "eta2");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S eps = getg(p, "eps");
            constraint<S>(detail::is0(eps * eps - S(1)), "R3.L.II", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "R3.L.II";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, e1 + g1);
            a.add_bracket(0, 3, 1, eps);
            a.add_bracket(0, 3, 2, -g3);
            a.add_bracket(1, 3, 1, e1 - g1);
            a.add_bracket(1, 3, 2, -g2);
            a.add_bracket(2, 3, 0, g2);
            a.add_bracket(2, 3, 1, g3);
            a.add_bracket(2, 3, 2, e2);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            bool ein = detail::is0(e2 - e1) && detail::is0(S(2) * g1 + S(3) * e1) &&
                       detail::is0(g2);
            bool flat = detail::is0(e1) && detail::is0(e2) && detail::is0(g1) && detail::is0(g2);
            bool ls = flat || (detail::is0(e2) && detail::is0(g2) && detail::is0(g3) &&
                               detail::is0(g1 + e1) && !detail::is0(e1));
            fi.expected.einstein = ein || flat;
            fi.expected.loc_symmetric = ls;
            return fi;
        },
        {P{{"eta1", S(1)}, {"eta2", S(2)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"eps", S(1)}},
         P{{"eta1", S(2)}, {"eta2", S(2)}, {"gamma1", S(-3)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"eps", S(1)}},
         P{{"eta1", S(1)}, {"eta2", S(0)}, {"gamma1", S(-1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"eps", S(1)}},
         P{{"eta1", S(0)}, {"eta2", S(0)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(2)}, {"eps", S(1)}},
         P{{"eta1", S(1)}, {"eta2", S(3)}, {"gamma1", S(1)}, {"gamma2", S(2)}, {"gamma3", S(1)}, {"eps", S(-1)}}}});

    // g_L.III
    out.push_back(FamilySpec<S>{
        "R3.L.III.gen",
        {"eta", "gamma1", "gamma2", "gamma3"},
        {{"eta", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S eta = getg(p, "eta");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            FamilyInstance<S> fi;
            fi.id = "R3.L.III.gen";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, eta + g1);
            a.add_bracket(0, 3, 2, -g3);
            a.add_bracket(1, 3, 1, eta - g1);
            a.add_bracket(1, 3, 2, -(g2 - S(1)));
            a.add_bracket(2, 3, 0, g2 + S(1));
            a.add_bracket(2, 3, 1, g3);
            a.add_bracket(2, 3, 2, eta);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            bool ein = detail::is0(g1 - S(3) * eta) && detail::is0(g2) && detail::is0(g3);
            bool ls = detail::is0(eta) && detail::is0(g1) && detail::is0(g3) &&
                      detail::is0(g2 - S(1));
            fi.expected.einstein = ein;
            fi.expected.loc_symmetric = ls;
            return fi;
        },
        {P{{"eta", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta", S(1)}, {"gamma1", S(3)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"eta", S(0)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(0)}},
         P{{"eta", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(2)}}}});

    // g_D: degenerate restriction; never a strict soliton
    out.push_back(FamilySpec<S>{
        "R3.g_D",
        {"gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6", "gamma7", "gamma8"},
        {{"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(0)},
         {"gamma4", S(2)},
         {"gamma5", S(0)},
         {"gamma6", S(1)},
         {"gamma7", S(0)},
         {"gamma8", S(0)}},
        [getg](const P& p) {
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5"), g6 = getg(p, "gamma6");
            S g7 = getg(p, "gamma7"), g8 = getg(p, "gamma8");
            FamilyInstance<S> fi;
            fi.id = "R3.g_D";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, -g2);
            a.add_bracket(0, 3, 2, g3);
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(1, 3, 2, g5);
            a.add_bracket(2, 3, 0, g6);
            a.add_bracket(2, 3, 1, g7);
            a.add_bracket(2, 3, 2, g8);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            bool g67z = detail::is0(g6) && detail::is0(g7);
            bool ein = g67z && detail::is0(g1 * g1 + g4 * g4 - (g1 + g4) * g8);
            fi.expected.einstein = ein;
            bool ls =
                g67z && ((detail::is0(g2) && detail::is0(g8)) ||
                         (detail::is0(g2) && detail::is0(g1) && detail::is0((g4 - g8) * g4) &&
                          !detail::is0(g8)) ||
                         (detail::is0(g2) && detail::is0((g1 - g4) * g4) &&
                          detail::is0(g8 - g1) && !detail::is0(g1)) ||
                         (!detail::is0(g2) && detail::is0(g1 - g4) &&
                          detail::is0((g1 - g8) * g1 * g8)));
            fi.expected.loc_symmetric = ls;
            if (g67z) {
                fi.expected.soliton_exists = true;
                fi.expected.c = S(0);
                fi.expected.kind = SolitonKind::steady;
                fi.expected.tau = S(0);
                if (!ein) {
                    fi.expected.wave = WaveKind::plane_wave;
                    fi.expected.null_direction_index = 2;  // u3
                    fi.expected.ricci_parallel = detail::is0(g8);
                }
            }
            return fi;
        },
        // grid: mixed plane-wave points (g6=g7=0) and negative points
        {P{{"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(2)}, {"gamma5", S(0)}, {"gamma6", S(0)}, {"gamma7", S(0)}, {"gamma8", S(0)}},
         P{{"gamma1", S(1)}, {"gamma2", S(2)}, {"gamma3", S(1)}, {"gamma4", S(-1)}, {"gamma5", S(0)}, {"gamma6", S(0)}, {"gamma7", S(0)}, {"gamma8", S(3)}},
         P{{"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(2)}, {"gamma5", S(0)}, {"gamma6", S(1)}, {"gamma7", S(0)}, {"gamma8", S(0)}},
         P{{"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(2)}, {"gamma4", S(1)}, {"gamma5", S(1)}, {"gamma6", S(0)}, {"gamma7", S(2)}, {"gamma8", S(1)}},
         P{{"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(1)}, {"gamma5", S(0)}, {"gamma6", S(1)}, {"gamma7", S(1)}, {"gamma8", S(2)}}}});
}

template <class S>
void register_h3_families(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using detail::getp;
    using P = Params<S>;
    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // H3.R: Heisenberg extension, Riemannian restriction; never Einstein or
    // locally symmetric; ARS forces the almost-Abelian reduction
    out.push_back(FamilySpec<S>{
        "H3.R",
        {"lambda3", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5"},
        {{"lambda3", S(1)},
         {"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(0)},
         {"gamma4", S(2)},
         {"gamma5", S(0)}},
        [getg](const P& p) {
            S l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5");
            constraint<S>(!detail::is0(l3), "H3.R", "lambda3 != 0");
            FamilyInstance<S> fi;
            fi.id = "H3.R";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 1, 2, l3);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, -g2);
            a.add_bracket(0, 3, 2, g3);
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(1, 3, 2, g5);
            a.add_bracket(2, 3, 2, g1 + g4);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.loc_symmetric = false;
            // ARS requires gamma4=-gamma1 and gamma1^2=gamma2^2 (almost-Abelian)
            if (!(detail::is0(g4 + g1) && detail::is0(g1 * g1 - g2 * g2)))
                fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda3", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(2)}, {"gamma5", S(0)}},
         P{{"lambda3", S(2)}, {"gamma1", S(1)}, {"gamma2", S(2)}, {"gamma3", S(1)}, {"gamma4", S(-1)}, {"gamma5", S(1)}},
         P{{"lambda3", S(1)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(2)}, {"gamma4", S(1)}, {"gamma5", S(0)}}}});

    // H3.L.Ia+: spacelike Heisenberg center analogue; ARS forces reduction
    out.push_back(FamilySpec<S>{
        "H3.L.Ia+",
        {"lambda3", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5"},
        {{"lambda3", S(1)},
         {"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(0)},
         {"gamma4", S(2)},
         {"gamma5", S(0)}},
        [getg](const P& p) {
            S l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5");
            constraint<S>(!detail::is0(l3), "H3.L.Ia+", "lambda3 != 0");
            FamilyInstance<S> fi;
            fi.id = "H3.L.Ia+";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 2, -l3);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, -g2);
            a.add_bracket(0, 3, 2, g3);
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(1, 3, 2, g5);
            a.add_bracket(2, 3, 2, g1 + g4);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.loc_symmetric = false;
            if (!(detail::is0(g4 + g1) && detail::is0(g1 * g1 - g2 * g2)))
                fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda3", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(2)}, {"gamma5", S(0)}},
         P{{"lambda3", S(1)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(0)}, {"gamma5", S(2)}},
         P{{"lambda3", S(3)}, {"gamma1", S(0)}, {"gamma2", S(2)}, {"gamma3", S(0)}, {"gamma4", S(1)}, {"gamma5", S(1)}}}});

    // H3.L.Ia-: general family (lambda2 != 0)
    out.push_back(FamilySpec<S>{
        "H3.L.Ia-",
        {"lambda2", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6"},
        {{"lambda2", S(1)},
         {"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(1)},
         {"gamma4", S(1)},
         {"gamma5", S(0)},
         {"gamma6", S(0)}},
        [getg](const P& p) {
            S l2 = getg(p, "lambda2");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5"), g6 = getg(p, "gamma6");
            constraint<S>(!detail::is0(l2), "H3.L.Ia-", "lambda2 != 0");
            FamilyInstance<S> fi;
            fi.id = "H3.L.Ia-";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2);
            a.add_bracket(0, 3, 2, g3);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(2, 3, 0, g5);
            a.add_bracket(2, 3, 1, g6);
            a.add_bracket(2, 3, 2, -(g1 - g4));
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.loc_symmetric = false;
            return fi;
        },
        {P{{"lambda2", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(1)}, {"gamma5", S(0)}, {"gamma6", S(0)}},
         P{{"lambda2", S(2)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(2)}, {"gamma4", S(1)}, {"gamma5", S(1)}, {"gamma6", S(2)}},
         P{{"lambda2", S(1)}, {"gamma1", S(2)}, {"gamma2", S(2)}, {"gamma3", S(0)}, {"gamma4", S(0)}, {"gamma5", S(3)}, {"gamma6", S(1)}}}});

    // H3.L.Ia-.sol: strict soliton locus (lambda2=1, gamma2=gamma6=0,
    // gamma5=-gamma3, 4*gamma3^2 = 4(g1^2+g4^2-g1 g4)+3, gamma3>0)
    out.push_back(FamilySpec<S>{
        "H3.L.Ia-.sol",
        {"gamma1", "gamma4"},
        {{"gamma1", S(1) / S(2)}, {"gamma4", S(1) / S(2)}},
        [getg](const P& p) {
            S g1 = getg(p, "gamma1"), g4 = getg(p, "gamma4");
            S g3sq = (S(4) * (g1 * g1 + g4 * g4 - g1 * g4) + S(3)) / S(4);
            auto g3 = slab::detail::scalar_sqrt(g3sq, static_cast<const S*>(nullptr));
            constraint<S>(g3.has_value(), "H3.L.Ia-.sol",
                          "gamma3 irrational at these parameters; use float backend");
            FamilyInstance<S> fi;
            fi.id = "H3.L.Ia-.sol";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 2, 1, S(-1));
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 2, *g3);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(2, 3, 0, -*g3);
            a.add_bracket(2, 3, 2, -(g1 - g4));
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.c = S(3) / S(2);
            fi.expected.kind = SolitonKind::shrinking;
            fi.expected.soliton_exists = true;
            S tau = S(-2) * (S(2) * g4 * g4 - S(1));
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = S(-3) * (S(2) * g4 * g4 - S(1));
            if (!detail::is0(tau))
                fi.expected.t = -(S(-3) * (S(2) * g4 * g4 - S(1))) / (tau * tau);
            else
                fi.expected.s_critical = true;
            fi.expected.einstein = false;
            fi.expected.loc_symmetric = false;
            double g4d = scalar_traits<S>::to_double(g4);
            fi.expected.klass = AlgClass::d4p_lambda;
            fi.expected.klass_params = {-g4d / std::sqrt(3 * (g4d * g4d + 1))};
            return fi;
        },
        // rational points need 4(g1^2+g4^2-g1 g4)+3 a perfect square of 2*g3
        {P{{"gamma1", S(1) / S(2)}, {"gamma4", S(1) / S(2)}},
         P{{"gamma1", S(1) / S(2)}, {"gamma4", S(0)}},
         P{{"gamma1", S(-1) / S(8)}, {"gamma4", S(0)}}}});

    // H3.L.II: general family
    out.push_back(FamilySpec<S>{
        "H3.L.II",
        {"eps", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6"},
        {{"eps", S(1)},
         {"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(0)},
         {"gamma4", S(2)},
         {"gamma5", S(0)},
         {"gamma6", S(0)}},
        [getg](const P& p) {
            S eps = getg(p, "eps");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5"), g6 = getg(p, "gamma6");
            constraint<S>(detail::is0(eps * eps - S(1)), "H3.L.II", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "H3.L.II";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 2, 1, -eps);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2);
            a.add_bracket(0, 3, 2, g3);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(2, 3, 0, g5);
            a.add_bracket(2, 3, 1, g6);
            a.add_bracket(2, 3, 2, -(g1 - g4));
            a.g = detail::pon12<S>();
            fi.algebra = a;
            bool ein1 = detail::is0(g1) && detail::is0(g4) && detail::is0(g5) &&
                        detail::is0(g6 * g6 - g3 * g3);
            bool ein2 = detail::is0(g4 - S(3) * g1) && !detail::is0(g1) && detail::is0(g2) &&
                        detail::is0(g5) && detail::is0(g6 + g3);
            fi.expected.einstein = ein1 || ein2;
            bool ls1 = detail::is0(g1) && detail::is0(g4) && detail::is0(g5) &&
                       detail::is0(g3 * (g3 + g6));
            fi.expected.loc_symmetric = ls1 || ein2;
            return fi;
        },
        {P{{"eps", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(2)}, {"gamma5", S(0)}, {"gamma6", S(0)}},
         P{{"eps", S(1)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(2)}, {"gamma4", S(0)}, {"gamma5", S(0)}, {"gamma6", S(-2)}},
         P{{"eps", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(3)}, {"gamma5", S(0)}, {"gamma6", S(-1)}},
         P{{"eps", S(-1)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(1)}, {"gamma5", S(2)}, {"gamma6", S(0)}}}});

    // H3.L.II.sol: strict soliton of the theorem (gamma4=-gamma1!=0, gamma5=0,
    // gamma3=3*gamma6): expanding with c=-4 gamma1^2, t=-1/2, d_{4,2}
    out.push_back(FamilySpec<S>{
        "H3.L.II.sol",
        {"gamma1", "gamma2", "gamma6"},
        {{"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma6", S(1)}},
        [getg](const P& p) {
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g6 = getg(p, "gamma6");
            constraint<S>(!detail::is0(g1), "H3.L.II.sol", "gamma1 != 0");
            FamilyInstance<S> fi;
            fi.id = "H3.L.II.sol";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 2, 1, S(-1));
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2);
            a.add_bracket(0, 3, 2, S(3) * g6);
            a.add_bracket(1, 3, 1, -g1);
            a.add_bracket(2, 3, 1, g6);
            a.add_bracket(2, 3, 2, S(-2) * g1);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            S c = S(-4) * g1 * g1;
            fi.expected.c = c;
            fi.expected.tau = S(-8) * g1 * g1;
            fi.expected.rhonorm2 = c * (S(-8) * g1 * g1);
            fi.expected.t = S(-1) / S(2);
            fi.expected.kind = SolitonKind::expanding;
            fi.expected.soliton_exists = true;
            fi.expected.klass = AlgClass::d4_lambda;
            fi.expected.klass_params = {2.0};
            return fi;
        },
        {P{{"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma6", S(1)}},
         P{{"gamma1", S(-2)}, {"gamma2", S(1)}, {"gamma6", S(0)}},
         P{{"gamma1", S(1) / S(2)}, {"gamma2", S(2)}, {"gamma6", S(-1)}}}});

    // H3.D0: degenerate restriction, null center; always a steady soliton
    // and a plane wave
    out.push_back(FamilySpec<S>{
        "H3.D0",
        {"lambda1", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5"},
        {{"lambda1", S(1)},
         {"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(0)},
         {"gamma4", S(2)},
         {"gamma5", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5");
            constraint<S>(!detail::is0(l1), "H3.D0", "lambda1 != 0");
            FamilyInstance<S> fi;
            fi.id = "H3.D0";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 1, 2, l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, -g2);
            a.add_bracket(0, 3, 2, g3);
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 1, g4);
            a.add_bracket(1, 3, 2, g5);
            a.add_bracket(2, 3, 2, g1 + g4);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.soliton_exists = true;
            fi.expected.tau = S(0);
            bool ein = detail::is0(S(4) * g1 * g4 + l1 * l1);
            fi.expected.einstein = ein;
            if (!ein) {
                fi.expected.wave = WaveKind::plane_wave;
                fi.expected.null_direction_index = 2;  // u3
                fi.expected.ricci_parallel = detail::is0(g1 + g4);
                fi.expected.planewave_type = detail::is0(g1 + g4) ? "i" : "ii";
            }
            bool par = ein || detail::is0(g1 + g4);
            fi.expected.loc_symmetric =
                (detail::is0(g2 - l1 / S(2)) && par) ||
                (!detail::is0(g2 - l1 / S(2)) && detail::is0(g1) && detail::is0(g4));
            return fi;
        },
        {P{{"lambda1", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(2)}, {"gamma5", S(0)}},
         P{{"lambda1", S(1)}, {"gamma1", S(1)}, {"gamma2", S(2)}, {"gamma3", S(1)}, {"gamma4", S(-1)}, {"gamma5", S(0)}},
         P{{"lambda1", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(-1)}, {"gamma5", S(1)}},
         P{{"lambda1", S(2)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(0)}, {"gamma5", S(2)}},
         P{{"lambda1", S(1)}, {"gamma1", S(1) / S(2)}, {"gamma2", S(1) / S(2)}, {"gamma3", S(0)}, {"gamma4", S(-1) / S(2)}, {"gamma5", S(0)}}}});

    // H3.D+: degenerate restriction, spacelike center; ARS forces the
    // almost-Abelian branch gamma1=0, gamma3^2+gamma4*gamma6=0
    out.push_back(FamilySpec<S>{
        "H3.D+",
        {"lambda3", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6"},
        {{"lambda3", S(1)},
         {"gamma1", S(1)},
         {"gamma2", S(0)},
         {"gamma3", S(1)},
         {"gamma4", S(0)},
         {"gamma5", S(0)},
         {"gamma6", S(1)}},
        [getg](const P& p) {
            S l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            S g4 = getg(p, "gamma4"), g5 = getg(p, "gamma5"), g6 = getg(p, "gamma6");
            constraint<S>(!detail::is0(l3), "H3.D+", "lambda3 != 0");
            FamilyInstance<S> fi;
            fi.id = "H3.D+";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(1, 2, 0, l3);
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 1, g3);
            a.add_bracket(1, 3, 2, g4);
            a.add_bracket(2, 3, 0, g5);
            a.add_bracket(2, 3, 1, g6);
            a.add_bracket(2, 3, 2, g1 - g3);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.loc_symmetric = false;
            if (!(detail::is0(g1) && detail::is0(g3 * g3 + g4 * g6)))
                fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda3", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(0)}, {"gamma5", S(0)}, {"gamma6", S(1)}},
         P{{"lambda3", S(2)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(2)}, {"gamma5", S(1)}, {"gamma6", S(0)}},
         P{{"lambda3", S(1)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(1)}, {"gamma5", S(0)}, {"gamma6", S(2)}}}});
}

template <class S>
void register_plane_waves(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using detail::getp;
    using P = Params<S>;
    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // (a): Heisenberg extension with degenerate restriction
    out.push_back(FamilySpec<S>{
        "PW.a",
        {"k1", "k2", "k3", "k4", "k5"},
        {{"k1", S(1)}, {"k2", S(0)}, {"k3", S(0)}, {"k4", S(1)}, {"k5", S(0)}},
        [getg](const P& p) {
            S k1 = getg(p, "k1"), k2 = getg(p, "k2"), k3 = getg(p, "k3");
            S k4 = getg(p, "k4"), k5 = getg(p, "k5");
            constraint<S>(!detail::is0(S(4) * k1 * k4 + S(1)), "PW.a", "4 k1 k4 + 1 != 0");
            FamilyInstance<S> fi;
            fi.id = "PW.a";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 1, 2, S(1));
            a.add_bracket(0, 3, 0, k1);
            a.add_bracket(0, 3, 1, -k2);
            a.add_bracket(0, 3, 2, k3);
            a.add_bracket(1, 3, 0, k2);
            a.add_bracket(1, 3, 1, k4);
            a.add_bracket(1, 3, 2, k5);
            a.add_bracket(2, 3, 2, k1 + k4);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.null_direction_index = 2;
            fi.expected.soliton_exists = true;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.ricci_parallel = detail::is0(k1 + k4);
            fi.expected.planewave_type = detail::is0(k1 + k4) ? "i" : "ii";
            return fi;
        },
        {P{{"k1", S(1)}, {"k2", S(0)}, {"k3", S(0)}, {"k4", S(1)}, {"k5", S(0)}},
         P{{"k1", S(2)}, {"k2", S(1)}, {"k3", S(1)}, {"k4", S(-2)}, {"k5", S(0)}},
         P{{"k1", S(1)}, {"k2", S(1)}, {"k3", S(0)}, {"k4", S(1) / S(2)}, {"k5", S(1)}}}});

    // (b): abelian extension, Lorentzian restriction
    out.push_back(FamilySpec<S>{
        "PW.b",
        {"k"},
        {{"k", S(2)}},
        [getg](const P& p) {
            S k = getg(p, "k");
            constraint<S>(!detail::is0(k), "PW.b", "kappa != 0");
            FamilyInstance<S> fi;
            fi.id = "PW.b";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(1, 3, 2, S(1) - k);
            a.add_bracket(2, 3, 0, k + S(1));
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.null_direction_index = 0;
            fi.expected.soliton_exists = true;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.ricci_parallel = true;
            fi.expected.planewave_type = "i";
            return fi;
        },
        {P{{"k", S(2)}}, P{{"k", S(-1)}}, P{{"k", S(1) / S(2)}}, P{{"k", S(3)}}}});

    // (c): abelian extension, degenerate restriction
    out.push_back(FamilySpec<S>{
        "PW.c",
        {"k1", "k2", "k3", "k4", "k5", "k6"},
        {{"k1", S(1)}, {"k2", S(0)}, {"k3", S(0)}, {"k4", S(2)}, {"k5", S(0)}, {"k6", S(0)}},
        [getg](const P& p) {
            S k1 = getg(p, "k1"), k2 = getg(p, "k2"), k3 = getg(p, "k3");
            S k4 = getg(p, "k4"), k5 = getg(p, "k5"), k6 = getg(p, "k6");
            constraint<S>(!detail::is0(k1 * k1 + k4 * k4 - (k1 + k4) * k6), "PW.c",
                          "k1^2 + k4^2 - (k1+k4) k6 != 0");
            FamilyInstance<S> fi;
            fi.id = "PW.c";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 3, 0, k1);
            a.add_bracket(0, 3, 1, -k2);
            a.add_bracket(0, 3, 2, k3);
            a.add_bracket(1, 3, 0, k2);
            a.add_bracket(1, 3, 1, k4);
            a.add_bracket(1, 3, 2, k5);
            a.add_bracket(2, 3, 2, k6);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.null_direction_index = 2;
            fi.expected.soliton_exists = true;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.ricci_parallel = detail::is0(k6);
            fi.expected.planewave_type = detail::is0(k6) ? "i" : "ii";
            return fi;
        },
        {P{{"k1", S(1)}, {"k2", S(0)}, {"k3", S(0)}, {"k4", S(2)}, {"k5", S(0)}, {"k6", S(0)}},
         P{{"k1", S(1)}, {"k2", S(1)}, {"k3", S(2)}, {"k4", S(-1)}, {"k5", S(0)}, {"k6", S(1)}},
         P{{"k1", S(0)}, {"k2", S(2)}, {"k3", S(1)}, {"k4", S(1)}, {"k5", S(1)}, {"k6", S(3)}}}});

    // (d): Aff(C) presentation; plane wave, locally symmetric, NOT a soliton
    out.push_back(FamilySpec<S>{
        "PW.d",
        {"k1", "k2"},
        {{"k1", S(1)}, {"k2", S(0)}},
        [getg](const P& p) {
            S k1 = getg(p, "k1"), k2 = getg(p, "k2");
            constraint<S>(!detail::is0(k1), "PW.d", "kappa1 != 0");
            FamilyInstance<S> fi;
            fi.id = "PW.d";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 2, 1, S(1));
            a.add_bracket(1, 2, 0, S(-1));
            a.add_bracket(0, 3, 0, k1);
            a.add_bracket(0, 3, 1, k2);
            a.add_bracket(1, 3, 0, -k2);
            a.add_bracket(1, 3, 1, k1);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.soliton_exists = false;
            fi.expected.loc_symmetric = true;
            fi.expected.planewave_type = "i";
            return fi;
        },
        {P{{"k1", S(1)}, {"k2", S(0)}}, P{{"k1", S(2)}, {"k2", S(1)}},
         P{{"k1", S(-1)}, {"k2", S(2)}}, P{{"k1", S(1) / S(2)}, {"k2", S(-1)}}}});

    // Heisenberg x R: the six metric classes
    out.push_back(FamilySpec<S>{
        "H3xR.KT",
        {"alpha", "beta"},
        {{"alpha", S(0)}, {"beta", S(0)}},
        [getg](const P& p) {
            S al = getg(p, "alpha"), be = getg(p, "beta");
            FamilyInstance<S> fi;
            fi.id = "H3xR.KT";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            // [e1,e2]=-(alpha e1 - e4), [e2,e3]=beta(alpha e1 - e4),
            // [e2,e4]=alpha(alpha e1 - e4)
            a.add_bracket(0, 1, 0, -al);
            a.add_bracket(0, 1, 3, S(1));
            a.add_bracket(1, 2, 0, be * al);
            a.add_bracket(1, 2, 3, -be);
            a.add_bracket(1, 3, 0, al * al);
            a.add_bracket(1, 3, 3, -al);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            S c = (S(3) / S(2)) * (al * al - S(1)) * (al * al - be * be - S(1));
            fi.expected.c = c;
            fi.expected.kind = detail::kind_of(c);
            fi.expected.soliton_exists = true;
            double ad = scalar_traits<S>::to_double(al), bd = scalar_traits<S>::to_double(be);
            if (ad == 1 && bd == 0) fi.expected.wave = WaveKind::flat;
            if (ad == 1 && bd == 1) {
                fi.expected.wave = WaveKind::plane_wave;
                fi.expected.loc_symmetric = true;
            }
            if (ad == 2 && std::abs(bd * bd - 3) < 1e-12) {
                fi.expected.wave = WaveKind::plane_wave;
                fi.expected.loc_symmetric = false;
                fi.expected.ricci_parallel = true;
                fi.expected.planewave_type = "i";
            }
            return fi;
        },
        {P{{"alpha", S(0)}, {"beta", S(0)}}, P{{"alpha", S(1)}, {"beta", S(0)}},
         P{{"alpha", S(1)}, {"beta", S(1)}}, P{{"alpha", S(2)}, {"beta", S(0)}},
         P{{"alpha", S(2)}, {"beta", S(2)}}}});
    // the sixth metric class needs beta = sqrt(3); only reachable with floats
    if constexpr (std::is_same_v<S, double>)
        out.back().grid.push_back(P{{"alpha", S(2)}, {"beta", std::sqrt(3.0)}});
}

// forward declarations of the registration chunks defined in catalog2.hpp
template <class S>
void register_3d(std::vector<FamilySpec<S>>& out);
template <class S>
void register_ee_ns(std::vector<FamilySpec<S>>& out);
template <class S>
void register_lirs(std::vector<FamilySpec<S>>& out);
template <class S>
void register_pwx(std::vector<FamilySpec<S>>& out);

template <class S>
const std::vector<FamilySpec<S>>& families() {
    static const std::vector<FamilySpec<S>> reg = [] {
        std::vector<FamilySpec<S>> v;
        register_r3_normal_forms<S>(v);
        register_r3_general<S>(v);
        register_h3_families<S>(v);
        register_plane_waves<S>(v);
        register_3d<S>(v);
        register_ee_ns<S>(v);
        register_lirs<S>(v);
        register_pwx<S>(v);
        return v;
    }();
    return reg;
}

template <class S>
const FamilySpec<S>& family(const std::string& id) {
    for (const auto& f : families<S>())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown catalog family: " + id);
}

template <class S>
FamilyInstance<S> instantiate(const std::string& id, Params<S> params = {}) {
    const auto& f = family<S>(id);
    for (const auto& [k, v] : f.defaults)
        if (!params.count(k)) params[k] = v;
    for (const auto& [k, v] : params) {
        bool known = false;
        for (const auto& n : f.param_names) known |= (n == k);
        if (!known) throw std::invalid_argument(id + ": unknown parameter: " + k);
    }
    return f.build(params);
}

}  // namespace slab::cat

#include "catalog2.hpp"

#endif
