#ifndef SOLITONLAB_CATALOG2_HPP
#define SOLITONLAB_CATALOG2_HPP

// Second half of the catalog registry: three-dimensional families, the
// semi-direct extensions of the Euclidean/Poincare groups (EE.*), direct
// extensions of the non-solvable groups (NS.*), left-invariant Ricci soliton
// families that are not algebraic (LIRS.*), and the per-algebra plane wave
// realizations (PWX.*). Included from catalog.hpp only.

namespace slab::cat {

namespace detail {

// is v a nonzero real multiple of the model triple?
template <class S>
bool proportional3(const S& a1, const S& a2, const S& a3, double m1, double m2, double m3) {
    double v[3] = {scalar_traits<S>::to_double(a1), scalar_traits<S>::to_double(a2),
                   scalar_traits<S>::to_double(a3)};
    double m[3] = {m1, m2, m3};
    double s = 0;
    for (int i = 0; i < 3; ++i)
        if (m[i] != 0) {
            s = v[i] / m[i];
            break;
        }
    if (s == 0) return false;
    for (int i = 0; i < 3; ++i)
        if (std::abs(v[i] - s * m[i]) > 1e-12 * std::max(1.0, std::abs(v[i]))) return false;
    return true;
}

template <class S>
S require_sqrt(const S& x, const std::string& id) {
    auto r = slab::detail::scalar_sqrt(x, static_cast<const S*>(nullptr));
    if (!r)
        throw std::invalid_argument(id +
                                    ": parameter point needs an irrational square root; "
                                    "use the float backend");
    return *r;
}

}  // namespace detail

template <class S>
void register_3d(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using P = Params<S>;
    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // unimodular, diagonalizable structure operator
    out.push_back(FamilySpec<S>{
        "3D.Ia",
        {"lambda1", "lambda2", "lambda3"},
        {{"lambda1", S(1)}, {"lambda2", S(0)}, {"lambda3", S(-1)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2"), l3 = getg(p, "lambda3");
            FamilyInstance<S> fi;
            fi.id = "3D.Ia";
            fi.params = p;
            MetricLieAlgebra<S> a(3, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 2, -l3);
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(1, 2, 0, l1);
            a.g = detail::diag_metric<S>(3, {1, 1, -1});
            fi.algebra = a;
            // non-Einstein soliton models, up to homothety
            if (detail::proportional3(l1, l2, l3, 1, 0, 0) ||
                detail::proportional3(l1, l2, l3, 0, 0, 1)) {
                fi.expected.soliton_exists = true;  // Heisenberg
                fi.expected.kind = SolitonKind::shrinking;
                fi.expected.t = S(-3);
                fi.expected.einstein = false;
            } else if (detail::proportional3(l1, l2, l3, 1, 0, -1)) {
                fi.expected.soliton_exists = true;  // Euclidean group
                fi.expected.kind = SolitonKind::shrinking;
                fi.expected.t = S(-1);
                fi.expected.einstein = false;
            } else if (detail::proportional3(l1, l2, l3, 1, -1, 0)) {
                fi.expected.soliton_exists = true;  // Poincare group
                fi.expected.kind = SolitonKind::shrinking;
                fi.expected.t = S(-1);
                fi.expected.einstein = false;
            }
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(0)}, {"lambda3", S(0)}},
         P{{"lambda1", S(0)}, {"lambda2", S(0)}, {"lambda3", S(2)}},
         P{{"lambda1", S(1)}, {"lambda2", S(0)}, {"lambda3", S(-1)}},
         P{{"lambda1", S(2)}, {"lambda2", S(-2)}, {"lambda3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(2)}, {"lambda3", S(3)}}}});

    // unimodular, complex eigenvalues
    out.push_back(FamilySpec<S>{
        "3D.Ib",
        {"alpha", "beta", "lambda"},
        {{"alpha", S(0)}, {"beta", S(1)}, {"lambda", S(0)}},
        [getg](const P& p) {
            S al = getg(p, "alpha"), be = getg(p, "beta"), la = getg(p, "lambda");
            constraint<S>(!detail::is0(be), "3D.Ib", "beta != 0");
            FamilyInstance<S> fi;
            fi.id = "3D.Ib";
            fi.params = p;
            MetricLieAlgebra<S> a(3, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 1, -be);
            a.add_bracket(0, 1, 2, -al);
            a.add_bracket(0, 2, 1, -al);
            a.add_bracket(0, 2, 2, be);
            a.add_bracket(1, 2, 0, la);
            a.g = detail::diag_metric<S>(3, {1, 1, -1});
            fi.algebra = a;
            if (detail::proportional3(al, be, la, 0, 1, 0)) {
                fi.expected.soliton_exists = true;  // Poincare group
                fi.expected.kind = SolitonKind::expanding;
                fi.expected.t = S(-1);
                fi.expected.einstein = false;
            }
            return fi;
        },
        {P{{"alpha", S(0)}, {"beta", S(1)}, {"lambda", S(0)}},
         P{{"alpha", S(0)}, {"beta", S(-2)}, {"lambda", S(0)}},
         P{{"alpha", S(1)}, {"beta", S(1)}, {"lambda", S(1)}}}});

    // unimodular, double root of the minimal polynomial: no non-Einstein soliton
    out.push_back(FamilySpec<S>{
        "3D.II",
        {"lambda1", "lambda2", "eps"},
        {{"lambda1", S(1)}, {"lambda2", S(1)}, {"eps", S(1)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2"), eps = getg(p, "eps");
            constraint<S>(detail::is0(eps * eps - S(1)), "3D.II", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "3D.II";
            fi.params = p;
            MetricLieAlgebra<S> a(3, "pseudo-orthonormal <u1,u2>=<u3,u3>=1");
            a.add_bracket(0, 1, 2, l2);
            a.add_bracket(0, 2, 0, -l1);
            a.add_bracket(0, 2, 1, -eps);
            a.add_bracket(1, 2, 1, l1);
            a.g = detail::pon12<S>(3);
            fi.algebra = a;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"eps", S(1)}},
         P{{"lambda1", S(0)}, {"lambda2", S(2)}, {"eps", S(1)}},
         P{{"lambda1", S(2)}, {"lambda2", S(-1)}, {"eps", S(-1)}}}});

    // unimodular, triple root: soliton only at lambda = 0 (plane wave)
    out.push_back(FamilySpec<S>{
        "3D.III",
        {"lambda"},
        {{"lambda", S(0)}},
        [getg](const P& p) {
            S la = getg(p, "lambda");
            FamilyInstance<S> fi;
            fi.id = "3D.III";
            fi.params = p;
            MetricLieAlgebra<S> a(3, "pseudo-orthonormal <u1,u2>=<u3,u3>=1");
            a.add_bracket(0, 1, 0, S(1));
            a.add_bracket(0, 1, 2, la);
            a.add_bracket(0, 2, 0, -la);
            a.add_bracket(1, 2, 1, la);
            a.add_bracket(1, 2, 2, S(1));
            a.g = detail::pon12<S>(3);
            fi.algebra = a;
            if (detail::is0(la)) {
                fi.expected.soliton_exists = true;  // Poincare group, plane wave
                fi.expected.c = S(0);
                fi.expected.kind = SolitonKind::steady;
                fi.expected.wave = WaveKind::plane_wave;
                fi.expected.einstein = false;
            }
            return fi;
        },
        {P{{"lambda", S(0)}}, P{{"lambda", S(1)}}, P{{"lambda", S(-2)}}}});

    // non-unimodular semi-direct extensions R^2 x R; soliton iff Einstein or
    // the defining endomorphism is self-adjoint
    auto iv = [getg](const char* id, int kernel_sig) {
        return [getg, id, kernel_sig](const P& p) {
            S al = getg(p, "alpha"), be = getg(p, "beta");
            S ga = getg(p, "gamma"), de = getg(p, "delta");
            constraint<S>(!detail::is0(al + de), id, "alpha + delta != 0");
            FamilyInstance<S> fi;
            fi.id = id;
            fi.params = p;
            MetricLieAlgebra<S> a(3);
            a.add_bracket(0, 2, 0, al);
            a.add_bracket(0, 2, 1, be);
            a.add_bracket(1, 2, 0, ga);
            a.add_bracket(1, 2, 1, de);
            bool sa = false;
            if (kernel_sig < 0) {  // IV.1: Lorentzian kernel
                a.g = detail::diag_metric<S>(3, {-1, 1, 1});
                a.basis_note = "orthonormal, e1 timelike";
                sa = detail::is0(be + ga);
            } else if (kernel_sig > 0) {  // IV.2: Riemannian kernel
                a.g = detail::diag_metric<S>(3, {1, 1, -1});
                a.basis_note = "orthonormal, e3 timelike";
                sa = detail::is0(be - ga);
            } else {  // IV.3: degenerate kernel
                Mat<S> g(3, 3);
                g(0, 0) = S(1);
                g(1, 2) = g(2, 1) = S(1);
                a.g = g;
                a.basis_note = "pseudo-orthonormal <u1,u1>=<u2,u3>=1";
                sa = detail::is0(ga);
            }
            fi.algebra = a;
            if (sa) fi.expected.soliton_exists = true;
            return fi;
        };
    };
    out.push_back(FamilySpec<S>{
        "3D.IV1",
        {"alpha", "beta", "gamma", "delta"},
        {{"alpha", S(1)}, {"beta", S(1)}, {"gamma", S(-1)}, {"delta", S(2)}},
        iv("3D.IV1", -1),
        {P{{"alpha", S(1)}, {"beta", S(1)}, {"gamma", S(-1)}, {"delta", S(2)}},
         P{{"alpha", S(2)}, {"beta", S(0)}, {"gamma", S(0)}, {"delta", S(1)}},
         P{{"alpha", S(1)}, {"beta", S(2)}, {"gamma", S(1)}, {"delta", S(1)}}}});
    out.push_back(FamilySpec<S>{
        "3D.IV2",
        {"alpha", "beta", "gamma", "delta"},
        {{"alpha", S(1)}, {"beta", S(1)}, {"gamma", S(1)}, {"delta", S(2)}},
        iv("3D.IV2", +1),
        {P{{"alpha", S(1)}, {"beta", S(1)}, {"gamma", S(1)}, {"delta", S(2)}},
         P{{"alpha", S(2)}, {"beta", S(0)}, {"gamma", S(0)}, {"delta", S(3)}},
         P{{"alpha", S(1)}, {"beta", S(2)}, {"gamma", S(-1)}, {"delta", S(1)}}}});
    out.push_back(FamilySpec<S>{
        "3D.IV3",
        {"alpha", "beta", "gamma", "delta"},
        {{"alpha", S(1)}, {"beta", S(1)}, {"gamma", S(0)}, {"delta", S(2)}},
        iv("3D.IV3", 0),
        {P{{"alpha", S(1)}, {"beta", S(1)}, {"gamma", S(0)}, {"delta", S(2)}},
         P{{"alpha", S(2)}, {"beta", S(-1)}, {"gamma", S(0)}, {"delta", S(1)}},
         P{{"alpha", S(1)}, {"beta", S(0)}, {"gamma", S(2)}, {"delta", S(1)}}}});
}

template <class S>
void register_ee_ns(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using P = Params<S>;
    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // --- EE.*: semi-direct extensions of E(1,1) / E(2); a non-Einstein
    // soliton forces unimodularity, so non-unimodular grid points are a
    // negative corpus ---

    out.push_back(FamilySpec<S>{
        "EE.R",
        {"lambda1", "lambda2", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(1)}, {"lambda2", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)},
         {"gamma3", S(0)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1) && !detail::is0(l2), "EE.R", "lambda1*lambda2 != 0");
            FamilyInstance<S> fi;
            fi.id = "EE.R";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(1, 2, 0, l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2 * l2);
            a.add_bracket(1, 3, 0, -g2 * l1);
            a.add_bracket(1, 3, 1, g1);
            a.add_bracket(2, 3, 0, g3);
            a.add_bracket(2, 3, 1, g4);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            bool ein = detail::is0(g1) && detail::is0(g3) && detail::is0(g4) &&
                       detail::is0(l1 - l2);
            fi.expected.einstein = ein;
            if (!detail::is0(g1) && !ein) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(-1)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(0)}},
         P{{"lambda1", S(2)}, {"lambda2", S(2)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}}}});

    out.push_back(FamilySpec<S>{
        "EE.L.Ia.s",
        {"lambda2", "lambda3", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda2", S(1)}, {"lambda3", S(2)}, {"gamma1", S(0)}, {"gamma2", S(0)},
         {"gamma3", S(1)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l2 = getg(p, "lambda2"), l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l2) && !detail::is0(l3), "EE.L.Ia.s",
                          "lambda2*lambda3 != 0");
            FamilyInstance<S> fi;
            fi.id = "EE.L.Ia.s";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 2, -l3);
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(0, 3, 1, g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 1, g3);
            a.add_bracket(1, 3, 2, g4 * l3);
            a.add_bracket(2, 3, 1, g4 * l2);
            a.add_bracket(2, 3, 2, g3);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            bool ein = detail::is0(g1) && detail::is0(g2) && detail::is0(g3) &&
                       detail::is0(l2 - l3);
            fi.expected.einstein = ein;
            if (!detail::is0(g3) && !ein) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda2", S(1)}, {"lambda3", S(2)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(0)}},
         P{{"lambda2", S(1)}, {"lambda3", S(-1)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(2)}, {"gamma4", S(1)}},
         P{{"lambda2", S(2)}, {"lambda3", S(2)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}}}});

    out.push_back(FamilySpec<S>{
        "EE.L.Ia.t",
        {"lambda1", "lambda2", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(1)}, {"lambda2", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)},
         {"gamma3", S(0)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1) && !detail::is0(l2), "EE.L.Ia.t",
                          "lambda1*lambda2 != 0");
            FamilyInstance<S> fi;
            fi.id = "EE.L.Ia.t";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(1, 2, 0, l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2 * l2);
            a.add_bracket(1, 3, 0, -g2 * l1);
            a.add_bracket(1, 3, 1, g1);
            a.add_bracket(2, 3, 0, g3);
            a.add_bracket(2, 3, 1, g4);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            bool ein = detail::is0(g1) && detail::is0(g3) && detail::is0(g4) &&
                       detail::is0(l1 - l2);
            fi.expected.einstein = ein;
            if (!detail::is0(g1) && !ein) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}},
         P{{"lambda1", S(-1)}, {"lambda2", S(1)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(1)}}}});

    out.push_back(FamilySpec<S>{
        "EE.L.Ib",
        {"alpha", "beta", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"alpha", S(0)}, {"beta", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)},
         {"gamma3", S(1)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S al = getg(p, "alpha"), be = getg(p, "beta");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(be), "EE.L.Ib", "beta != 0");
            FamilyInstance<S> fi;
            fi.id = "EE.L.Ib";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 1, -be);
            a.add_bracket(0, 1, 2, -al);
            a.add_bracket(0, 2, 1, -al);
            a.add_bracket(0, 2, 2, be);
            a.add_bracket(0, 3, 1, g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 1, S(2) * g3 * be);
            a.add_bracket(1, 3, 2, (g3 - g4) * al);
            a.add_bracket(2, 3, 1, (g3 - g4) * al);
            a.add_bracket(2, 3, 2, S(2) * g4 * be);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            bool ein = detail::is0(al) && detail::is0(g1) && detail::is0(g2) &&
                       detail::is0(g3 - g4) && detail::is0(S(4) * g3 * g3 - S(1));
            fi.expected.einstein = ein;
            if (!detail::is0(g3 + g4) && !ein) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"alpha", S(0)}, {"beta", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(0)}},
         P{{"alpha", S(1)}, {"beta", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(1)}},
         P{{"alpha", S(0)}, {"beta", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(1) / S(2)}, {"gamma4", S(1) / S(2)}}}});

    out.push_back(FamilySpec<S>{
        "EE.L.II.d",
        {"lambda2", "eps", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda2", S(1)}, {"eps", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)},
         {"gamma3", S(1)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l2 = getg(p, "lambda2"), eps = getg(p, "eps");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l2), "EE.L.II.d", "lambda2 != 0");
            constraint<S>(detail::is0(eps * eps - S(1)), "EE.L.II.d", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "EE.L.II.d";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 1, 2, l2);
            a.add_bracket(0, 2, 1, -eps);
            a.add_bracket(0, 3, 1, g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 1, g3);
            a.add_bracket(1, 3, 2, g4 * l2);
            a.add_bracket(2, 3, 1, -eps * g4);
            a.add_bracket(2, 3, 2, g3);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda2", S(1)}, {"eps", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(0)}},
         P{{"lambda2", S(2)}, {"eps", S(-1)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(2)}}}});

    out.push_back(FamilySpec<S>{
        "EE.L.II.s",
        {"lambda1", "eps", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(1)}, {"eps", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)},
         {"gamma3", S(0)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), eps = getg(p, "eps");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1), "EE.L.II.s", "lambda1 != 0");
            constraint<S>(detail::is0(eps * eps - S(1)), "EE.L.II.s", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "EE.L.II.s";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 2, 0, -l1);
            a.add_bracket(0, 2, 1, -eps);
            a.add_bracket(1, 2, 1, l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2);
            a.add_bracket(1, 3, 1, g1 - S(2) * eps * g2 * l1);
            a.add_bracket(2, 3, 0, g3);
            a.add_bracket(2, 3, 1, g4);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"eps", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}},
         P{{"lambda1", S(2)}, {"eps", S(-1)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(2)}}}});

    out.push_back(FamilySpec<S>{
        "EE.L.III",
        {"gamma1", "gamma2", "gamma3", "gamma4"},
        {{"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(1)}},
        [getg](const P& p) {
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            FamilyInstance<S> fi;
            fi.id = "EE.L.III";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 1, 0, S(1));
            a.add_bracket(1, 2, 2, S(1));
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 2, g3);
            a.add_bracket(2, 3, 2, g4);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            bool ein = detail::is0(g1 - S(2) * g4) && detail::is0(g3) &&
                       detail::is0(g2 * g4 + S(2));
            fi.expected.einstein = ein;
            if (!detail::is0(g1 + g4) && !ein) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(1)}},
         P{{"gamma1", S(2)}, {"gamma2", S(-2)}, {"gamma3", S(0)}, {"gamma4", S(1)}},
         P{{"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(2)}}}});

    out.push_back(FamilySpec<S>{
        "EE.deg.R1",
        {"lambda1", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)},
         {"gamma4", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1), "EE.deg.R1", "lambda1 != 0");
            FamilyInstance<S> fi;
            fi.id = "EE.deg.R1";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 2, 1, l1);
            a.add_bracket(1, 2, 0, -l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2);
            a.add_bracket(1, 3, 0, -g2);
            a.add_bracket(1, 3, 1, g1);
            a.add_bracket(2, 3, 0, g3);
            a.add_bracket(2, 3, 1, g4);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            bool ein = detail::is0(g1) && detail::is0(g3) && detail::is0(g4);
            fi.expected.einstein = ein;
            if (!detail::is0(g1) && !ein) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}, {"gamma4", S(0)}},
         P{{"lambda1", S(2)}, {"gamma1", S(2)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(1)}}}});

    out.push_back(FamilySpec<S>{
        "EE.deg.R2",
        {"lambda1", "lambda2", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(2)}, {"lambda2", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)},
         {"gamma3", S(0)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1), "EE.deg.R2", "lambda1 != 0");
            constraint<S>(!detail::is0(l1 * l1 - l2 * l2), "EE.deg.R2",
                          "lambda1^2 != lambda2^2");
            FamilyInstance<S> fi;
            fi.id = "EE.deg.R2";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            S mix = (g1 - g2) * l2 / (S(2) * l1);
            a.add_bracket(0, 2, 0, l1);
            a.add_bracket(0, 2, 1, l2);
            a.add_bracket(1, 2, 0, -l2);
            a.add_bracket(1, 2, 1, -l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, mix);
            a.add_bracket(1, 3, 0, -mix);
            a.add_bracket(1, 3, 1, g2);
            a.add_bracket(2, 3, 0, g3);
            a.add_bracket(2, 3, 1, g4);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            if (!detail::is0(g1 + g2)) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(2)}, {"lambda2", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(1)}, {"gamma4", S(0)}}}});

    out.push_back(FamilySpec<S>{
        "EE.deg.D1",
        {"lambda1", "lambda2", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(1)}, {"lambda2", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)},
         {"gamma3", S(0)}, {"gamma4", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1) && !detail::is0(l2), "EE.deg.D1",
                          "lambda1*lambda2 != 0");
            FamilyInstance<S> fi;
            fi.id = "EE.deg.D1";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 1, 2, l1);
            a.add_bracket(1, 2, 0, l2);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 0, g3);
            a.add_bracket(1, 3, 2, g4);
            a.add_bracket(2, 3, 0, -g2 * l2 / l1);
            a.add_bracket(2, 3, 2, g1);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(0)}},
         P{{"lambda1", S(2)}, {"lambda2", S(-1)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(1)}}}});

    out.push_back(FamilySpec<S>{
        "EE.deg.D2",
        {"lambda1", "lambda2", "lambda3", "gamma1", "gamma2", "gamma3", "gamma4"},
        {{"lambda1", S(1)}, {"lambda2", S(0)}, {"lambda3", S(0)}, {"gamma1", S(1)},
         {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(1)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2"), l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3"),
              g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1), "EE.deg.D2", "lambda1 != 0");
            constraint<S>(!detail::is0(l1 * l1 - l2 * l3), "EE.deg.D2",
                          "lambda1^2 != lambda2*lambda3");
            FamilyInstance<S> fi;
            fi.id = "EE.deg.D2";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 1, 0, l1);
            a.add_bracket(0, 1, 2, l2);
            a.add_bracket(1, 2, 0, l3);
            a.add_bracket(1, 2, 2, l1);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 2, (g1 - g4) * l2 / (S(2) * l1));
            a.add_bracket(1, 3, 0, g2);
            a.add_bracket(1, 3, 2, g3);
            a.add_bracket(2, 3, 0, -(g1 - g4) * l3 / (S(2) * l1));
            a.add_bracket(2, 3, 2, g4);
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            if (!detail::is0(g1 + g4)) fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(0)}, {"lambda3", S(0)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}, {"gamma4", S(1)}},
         P{{"lambda1", S(2)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}, {"gamma4", S(2)}}}});

    // --- NS.*: direct extensions of SL(2,R) and SU(2); non-Einstein solitons
    // are exactly the round product metrics ---

    out.push_back(FamilySpec<S>{
        "NS.R",
        {"lambda1", "lambda2", "lambda3", "gamma1", "gamma2", "gamma3"},
        {{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(0)},
         {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2"), l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(l1) && !detail::is0(l2) && !detail::is0(l3), "NS.R",
                          "lambda1*lambda2*lambda3 != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.R";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e4 timelike");
            a.add_bracket(0, 1, 2, l3);
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(1, 2, 0, l1);
            a.add_bracket(0, 3, 1, g1 * l2);
            a.add_bracket(0, 3, 2, g2 * l3);
            a.add_bracket(1, 3, 0, -g1 * l1);
            a.add_bracket(1, 3, 2, g3 * l3);
            a.add_bracket(2, 3, 0, -g2 * l1);
            a.add_bracket(2, 3, 1, -g3 * l2);
            a.g = detail::diag_metric<S>(4, {1, 1, 1, -1});
            fi.algebra = a;
            fi.expected.einstein = false;
            bool product = detail::is0(g1) && detail::is0(g2) && detail::is0(g3);
            bool round = detail::is0(l1 - l2) && detail::is0(l2 - l3);
            fi.expected.soliton_exists = product && round;
            if (product && round) fi.expected.kind = detail::kind_of(l1 * l1);
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(2)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(-1)}, {"lambda3", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}}}});

    out.push_back(FamilySpec<S>{
        "NS.L.Ia",
        {"lambda1", "lambda2", "lambda3", "gamma1", "gamma2", "gamma3"},
        {{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(0)},
         {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2"), l3 = getg(p, "lambda3");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(l1) && !detail::is0(l2) && !detail::is0(l3), "NS.L.Ia",
                          "lambda1*lambda2*lambda3 != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.L.Ia";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 2, -l3);
            a.add_bracket(0, 2, 1, -l2);
            a.add_bracket(1, 2, 0, l1);
            a.add_bracket(0, 3, 1, g1 * l2);
            a.add_bracket(0, 3, 2, g2 * l3);
            a.add_bracket(1, 3, 0, -g1 * l1);
            a.add_bracket(1, 3, 2, g3 * l3);
            a.add_bracket(2, 3, 0, g2 * l1);
            a.add_bracket(2, 3, 1, g3 * l2);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.einstein = false;
            bool product = detail::is0(g1) && detail::is0(g2) && detail::is0(g3);
            bool round = detail::is0(l1 - l2) && detail::is0(l2 - l3);
            fi.expected.soliton_exists = product && round;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(2)}, {"lambda3", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"lambda3", S(1)}, {"gamma1", S(0)}, {"gamma2", S(1)}, {"gamma3", S(0)}}}});

    out.push_back(FamilySpec<S>{
        "NS.L.Ib",
        {"alpha", "beta", "lambda", "gamma1", "gamma2", "gamma3"},
        {{"alpha", S(0)}, {"beta", S(1)}, {"lambda", S(1)}, {"gamma1", S(0)},
         {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S al = getg(p, "alpha"), be = getg(p, "beta"), la = getg(p, "lambda");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(be) && !detail::is0(la), "NS.L.Ib", "beta*lambda != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.L.Ib";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            S n2 = al * al + be * be;
            a.add_bracket(0, 1, 1, -be);
            a.add_bracket(0, 1, 2, -al);
            a.add_bracket(0, 2, 1, -al);
            a.add_bracket(0, 2, 2, be);
            a.add_bracket(1, 2, 0, la);
            a.add_bracket(0, 3, 1, n2 * g1);
            a.add_bracket(0, 3, 2, n2 * g2);
            a.add_bracket(1, 3, 0, -(g1 * al - g2 * be) * la);
            a.add_bracket(1, 3, 1, g3 * be);
            a.add_bracket(1, 3, 2, g3 * al);
            a.add_bracket(2, 3, 0, (g2 * al + g1 * be) * la);
            a.add_bracket(2, 3, 1, g3 * al);
            a.add_bracket(2, 3, 2, -g3 * be);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"alpha", S(0)}, {"beta", S(1)}, {"lambda", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"alpha", S(1)}, {"beta", S(1)}, {"lambda", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}}}});

    out.push_back(FamilySpec<S>{
        "NS.L.II",
        {"lambda1", "lambda2", "eps", "gamma1", "gamma2", "gamma3"},
        {{"lambda1", S(1)}, {"lambda2", S(1)}, {"eps", S(1)}, {"gamma1", S(0)},
         {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2"), eps = getg(p, "eps");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(l1) && !detail::is0(l2), "NS.L.II",
                          "lambda1*lambda2 != 0");
            constraint<S>(detail::is0(eps * eps - S(1)), "NS.L.II", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "NS.L.II";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 1, 2, l2);
            a.add_bracket(0, 2, 0, -l1);
            a.add_bracket(0, 2, 1, -eps);
            a.add_bracket(1, 2, 1, l1);
            a.add_bracket(0, 3, 0, g1 * l1);
            a.add_bracket(0, 3, 1, eps * g1);
            a.add_bracket(0, 3, 2, g2 * l2);
            a.add_bracket(1, 3, 1, -g1 * l1);
            a.add_bracket(1, 3, 2, g3 * l2);
            a.add_bracket(2, 3, 0, -g3 * l1);
            a.add_bracket(2, 3, 1, -(g2 * l1 + eps * g3));
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(1)}, {"eps", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda1", S(1)}, {"lambda2", S(2)}, {"eps", S(-1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}}}});

    out.push_back(FamilySpec<S>{
        "NS.L.III",
        {"lambda", "gamma1", "gamma2", "gamma3"},
        {{"lambda", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S la = getg(p, "lambda");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(la), "NS.L.III", "lambda != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.L.III";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 1, 0, S(1));
            a.add_bracket(0, 1, 2, la);
            a.add_bracket(0, 2, 0, -la);
            a.add_bracket(1, 2, 1, la);
            a.add_bracket(1, 2, 2, S(1));
            a.add_bracket(0, 3, 0, g1 * la);
            a.add_bracket(0, 3, 2, g2 * la * la);
            a.add_bracket(1, 3, 0, g3);
            a.add_bracket(1, 3, 1, -(g1 - g2) * la);
            a.add_bracket(1, 3, 2, -(g1 - g2 - g3 * la));
            a.add_bracket(2, 3, 0, -g3 * la);
            a.add_bracket(2, 3, 1, -g2 * la * la);
            a.add_bracket(2, 3, 2, -g2 * la);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"lambda", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"lambda", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}}}});

    // degenerate restriction to the non-solvable factor
    out.push_back(FamilySpec<S>{
        "NS.deg.c",
        {"kappa", "beta", "lambda", "gamma1", "gamma2", "gamma3"},
        {{"kappa", S(0)}, {"beta", S(1)}, {"lambda", S(1)}, {"gamma1", S(0)},
         {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S ka = getg(p, "kappa"), be = getg(p, "beta"), la = getg(p, "lambda");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(scalar_traits<S>::to_double(ka * ka) < 1, "NS.deg.c", "kappa^2 < 1");
            constraint<S>(!detail::is0(be) && !detail::is0(la), "NS.deg.c", "beta*lambda != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.deg.c";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "<v1,v1>=<v2,v2>=<v3,v4>=1, <v1,v2>=kappa");
            a.add_bracket(0, 1, 2, S(1));
            a.add_bracket(0, 2, 1, be * la * la);
            a.add_bracket(1, 2, 0, -be);
            a.add_bracket(0, 3, 1, g1 * la * la);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 0, -g1);
            a.add_bracket(1, 3, 2, g3);
            a.add_bracket(2, 3, 0, g2 * be);
            a.add_bracket(2, 3, 1, g3 * be * la * la);
            Mat<S> g(4, 4);
            g(0, 0) = g(1, 1) = S(1);
            g(0, 1) = g(1, 0) = ka;
            g(2, 3) = g(3, 2) = S(1);
            a.g = g;
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"kappa", S(0)}, {"beta", S(1)}, {"lambda", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"kappa", S(1) / S(2)}, {"beta", S(-1)}, {"lambda", S(2)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}}}});

    out.push_back(FamilySpec<S>{
        "NS.deg.r",
        {"kappa", "lambda", "gamma1", "gamma2", "gamma3"},
        {{"kappa", S(0)}, {"lambda", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)},
         {"gamma3", S(0)}},
        [getg](const P& p) {
            S ka = getg(p, "kappa"), la = getg(p, "lambda");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(scalar_traits<S>::to_double(ka * ka) < 1, "NS.deg.r", "kappa^2 < 1");
            constraint<S>(!detail::is0(la), "NS.deg.r", "lambda != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.deg.r";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "<v1,v1>=<v2,v2>=<v3,v4>=1, <v1,v2>=kappa");
            a.add_bracket(0, 1, 2, S(1));
            a.add_bracket(0, 2, 0, la);
            a.add_bracket(1, 2, 1, -la);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 2, g2);
            a.add_bracket(1, 3, 1, -g1);
            a.add_bracket(1, 3, 2, g3);
            a.add_bracket(2, 3, 0, g3 * la);
            a.add_bracket(2, 3, 1, g2 * la);
            Mat<S> g(4, 4);
            g(0, 0) = g(1, 1) = S(1);
            g(0, 1) = g(1, 0) = ka;
            g(2, 3) = g(3, 2) = S(1);
            a.g = g;
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"kappa", S(0)}, {"lambda", S(1)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"kappa", S(1) / S(2)}, {"lambda", S(2)}, {"gamma1", S(1)}, {"gamma2", S(1)}, {"gamma3", S(0)}}}});

    out.push_back(FamilySpec<S>{
        "NS.deg.n",
        {"kappa", "alpha", "beta", "gamma1", "gamma2", "gamma3"},
        {{"kappa", S(0)}, {"alpha", S(1)}, {"beta", S(0)}, {"gamma1", S(0)},
         {"gamma2", S(0)}, {"gamma3", S(0)}},
        [getg](const P& p) {
            S ka = getg(p, "kappa"), al = getg(p, "alpha"), be = getg(p, "beta");
            S g1 = getg(p, "gamma1"), g2 = getg(p, "gamma2"), g3 = getg(p, "gamma3");
            constraint<S>(scalar_traits<S>::to_double(ka * ka) < 1, "NS.deg.n", "kappa^2 < 1");
            constraint<S>(!detail::is0(al), "NS.deg.n", "alpha != 0");
            FamilyInstance<S> fi;
            fi.id = "NS.deg.n";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "<v1,v1>=<v2,v2>=<v3,v4>=1, <v1,v2>=kappa");
            a.add_bracket(0, 1, 0, al);
            a.add_bracket(0, 1, 2, be);
            a.add_bracket(0, 2, 1, -S(1));
            a.add_bracket(1, 2, 2, al);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, g2);
            a.add_bracket(0, 3, 2, be * g1 / al);
            a.add_bracket(1, 3, 0, -al * g3);
            a.add_bracket(1, 3, 2, -(al * g2 + be * g3));
            a.add_bracket(2, 3, 1, g3);
            a.add_bracket(2, 3, 2, -g1);
            Mat<S> g(4, 4);
            g(0, 0) = g(1, 1) = S(1);
            g(0, 1) = g(1, 0) = ka;
            g(2, 3) = g(3, 2) = S(1);
            a.g = g;
            fi.algebra = a;
            fi.expected.einstein = false;
            fi.expected.loc_symmetric = false;
            fi.expected.soliton_exists = false;
            return fi;
        },
        {P{{"kappa", S(0)}, {"alpha", S(1)}, {"beta", S(0)}, {"gamma1", S(0)}, {"gamma2", S(0)}, {"gamma3", S(0)}},
         P{{"kappa", S(1) / S(2)}, {"alpha", S(2)}, {"beta", S(1)}, {"gamma1", S(1)}, {"gamma2", S(0)}, {"gamma3", S(1)}}}});
}

template <class S>
void register_lirs(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using P = Params<S>;
    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // (i): steady solitons, both left-invariant and algebraic
    out.push_back(FamilySpec<S>{
        "LIRS.i",
        {"alpha", "eps"},
        {{"alpha", S(0)}, {"eps", S(1)}},
        [getg](const P& p) {
            S al = getg(p, "alpha"), eps = getg(p, "eps");
            constraint<S>(detail::is0(eps * eps - S(1)), "LIRS.i", "eps^2 = 1");
            double ad = scalar_traits<S>::to_double(al);
            constraint<S>(ad >= 0 && ad * ad <= 2, "LIRS.i", "0 <= alpha <= sqrt(2)");
            if (ad == 0)
                constraint<S>(scalar_traits<S>::to_double(eps) == 1, "LIRS.i",
                              "eps = 1 when alpha = 0");
            S la = eps * detail::require_sqrt<S>(S(1) - al * al / S(2), "LIRS.i");
            FamilyInstance<S> fi;
            fi.id = "LIRS.i";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 3, 0, al);
            a.add_bracket(1, 3, 1, la);
            a.add_bracket(1, 3, 2, S(-1));
            a.add_bracket(2, 3, 1, S(1));
            a.add_bracket(2, 3, 2, la);
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.soliton_exists = true;
            fi.expected.lirs_exists = true;
            S tau = S(-2) * ((al + la) * (al + la) + S(2) * la * la - S(1));
            fi.expected.tau = tau;
            fi.expected.rhonorm2 = S(0);
            if (!detail::is0(tau)) fi.expected.t = S(0);
            double ld = scalar_traits<S>::to_double(la);
            if (ad == 0) {
                fi.expected.klass = AlgClass::r3p_lambda_xR;
                fi.expected.klass_params = {-1.0};
            } else {
                fi.expected.klass = AlgClass::r4p_mu_lambda;
                fi.expected.klass_params = {-ad, -ld};
            }
            return fi;
        },
        {P{{"alpha", S(0)}, {"eps", S(1)}},
         P{{"alpha", S(4) / S(3)}, {"eps", S(1)}},
         P{{"alpha", S(4) / S(3)}, {"eps", S(-1)}},
         P{{"alpha", S(8) / S(9)}, {"eps", S(1)}}}});

    // (ii): left-invariant steady solitons that are not algebraic; S-critical
    // Brinkmann waves with Ric^2 != 0, Ric^3 = 0
    out.push_back(FamilySpec<S>{
        "LIRS.ii",
        {"alpha"},
        {{"alpha", S(1)}},
        [getg](const P& p) {
            S al = getg(p, "alpha");
            constraint<S>(scalar_traits<S>::to_double(al) > 0, "LIRS.ii", "alpha > 0");
            FamilyInstance<S> fi;
            fi.id = "LIRS.ii";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, al);
            a.add_bracket(1, 3, 1, -al);
            a.add_bracket(1, 3, 2, S(1));
            a.add_bracket(2, 3, 0, S(1));
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.soliton_exists = false;
            fi.expected.lirs_exists = true;
            fi.expected.lirs_c = S(0);
            fi.expected.tau = S(0);
            fi.expected.rhonorm2 = S(0);
            fi.expected.s_critical = true;
            fi.expected.wave = WaveKind::brinkmann_only;
            return fi;
        },
        {P{{"alpha", S(1)}}, P{{"alpha", S(2)}}, P{{"alpha", S(1) / S(2)}}}});

    // (iii): steady left-invariant soliton on a direct product of affine
    // groups; not algebraic and not critical for any quadratic functional
    out.push_back(FamilySpec<S>{
        "LIRS.iii",
        {},
        {},
        [](const P&) {
            FamilyInstance<S> fi;
            fi.id = "LIRS.iii";
            MetricLieAlgebra<S> a(4, "orthonormal, e3 timelike");
            a.add_bracket(0, 1, 1, S(-1));
            a.add_bracket(1, 3, 1, S(1));
            a.add_bracket(0, 2, 2, S(1));
            a.add_bracket(2, 3, 2, S(1));
            a.add_bracket(0, 3, 2, S(2));
            a.g = detail::diag_metric<S>(4, {1, 1, -1, 1});
            fi.algebra = a;
            fi.expected.soliton_exists = false;
            fi.expected.lirs_exists = true;
            fi.expected.lirs_c = S(0);
            fi.expected.ft_critical = false;
            return fi;
        },
        {P{}}});

    // (iv): expanding left-invariant solitons, not algebraic, F[t]-critical
    out.push_back(FamilySpec<S>{
        "LIRS.iv",
        {"alpha", "beta"},
        {{"alpha", S(1)}, {"beta", S(1)}},
        [getg](const P& p) {
            S al = getg(p, "alpha"), be = getg(p, "beta");
            constraint<S>(scalar_traits<S>::to_double(al) > 0, "LIRS.iv", "alpha > 0");
            S ab = al * be;
            constraint<S>(!detail::is0(ab + S(2)) && !detail::is0(ab + S(1)) &&
                              !detail::is0(ab + S(1) / S(2)),
                          "LIRS.iv", "alpha*beta not in {-2,-1,-1/2}");
            FamilyInstance<S> fi;
            fi.id = "LIRS.iv";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 1, 0, S(1));
            a.add_bracket(0, 3, 0, S(-2) * al * (ab + S(1)));
            a.add_bracket(1, 2, 2, S(1));
            a.add_bracket(1, 3, 0, be);
            a.add_bracket(2, 3, 2, al);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.soliton_exists = false;
            fi.expected.lirs_exists = true;
            fi.expected.ft_critical = true;
            fi.expected.t = -(S(2) * ab * ab + S(4) * ab + S(3)) /
                            (S(2) * (S(3) * ab * ab + S(4) * ab + S(2)));
            return fi;
        },
        {P{{"alpha", S(1)}, {"beta", S(1)}}, P{{"alpha", S(2)}, {"beta", S(0)}},
         P{{"alpha", S(1)}, {"beta", S(-3)}}}});

    // (v): expanding left-invariant solitons on Aff(R) x Aff(R), F[-1]-critical
    out.push_back(FamilySpec<S>{
        "LIRS.v",
        {"lambda1", "lambda2", "gamma1", "gamma4"},
        {{"lambda1", S(1)}, {"lambda2", S(0)}, {"gamma1", S(1)}, {"gamma4", S(1)}},
        [getg](const P& p) {
            S l1 = getg(p, "lambda1"), l2 = getg(p, "lambda2");
            S g1 = getg(p, "gamma1"), g4 = getg(p, "gamma4");
            constraint<S>(!detail::is0(l1), "LIRS.v", "lambda1 != 0");
            constraint<S>(!detail::is0(g1 + g4), "LIRS.v", "gamma1 + gamma4 != 0");
            FamilyInstance<S> fi;
            fi.id = "LIRS.v";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
            a.add_bracket(0, 1, 0, l1);
            a.add_bracket(0, 1, 2, l2);
            a.add_bracket(1, 2, 2, l1);
            a.add_bracket(2, 3, 2, g4);
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 2, (g1 - g4) * l2 / (S(2) * l1));
            a.add_bracket(1, 3, 0, -l2 / S(2));
            a.add_bracket(1, 3, 2,
                          -(S(3) * l2 * l2 + S(4) * g1 * g1 + S(8) * g1 * g4) / (S(8) * l1));
            a.g = detail::pon34<S>();
            fi.algebra = a;
            fi.expected.soliton_exists = false;
            fi.expected.lirs_exists = true;
            fi.expected.ft_critical = true;
            fi.expected.t = S(-1);
            return fi;
        },
        {P{{"lambda1", S(1)}, {"lambda2", S(0)}, {"gamma1", S(1)}, {"gamma4", S(1)}},
         P{{"lambda1", S(2)}, {"lambda2", S(1)}, {"gamma1", S(1)}, {"gamma4", S(2)}}}});

    // nilpotent plane wave; both a steady algebraic and left-invariant soliton
    out.push_back(FamilySpec<S>{
        "LIRS.pw1",
        {"gamma3"},
        {{"gamma3", S(1)}},
        [getg](const P& p) {
            S g3 = getg(p, "gamma3");
            constraint<S>(!detail::is0(g3), "LIRS.pw1", "gamma3 != 0");
            FamilyInstance<S> fi;
            fi.id = "LIRS.pw1";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 2, 1, S(1));
            a.add_bracket(0, 3, 2, g3);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.soliton_exists = true;
            fi.expected.lirs_exists = true;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.ricci_parallel = true;
            fi.expected.planewave_type = "i";
            fi.expected.klass = AlgClass::n4;
            return fi;
        },
        {P{{"gamma3", S(1)}}, P{{"gamma3", S(-2)}}, P{{"gamma3", S(1) / S(2)}}}});

    // plane wave on E(1,1) x R with non-parallel Ricci tensor
    out.push_back(FamilySpec<S>{
        "LIRS.pw2",
        {"gamma3"},
        {{"gamma3", S(1)}},
        [getg](const P& p) {
            S g3 = getg(p, "gamma3");
            FamilyInstance<S> fi;
            fi.id = "LIRS.pw2";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 1, 0, S(1));
            a.add_bracket(1, 2, 2, S(1));
            a.add_bracket(1, 3, 2, g3);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.c = S(0);
            fi.expected.kind = SolitonKind::steady;
            fi.expected.soliton_exists = true;
            fi.expected.lirs_exists = true;
            fi.expected.wave = WaveKind::plane_wave;
            fi.expected.ricci_parallel = false;
            fi.expected.planewave_type = "ii";
            return fi;
        },
        {P{{"gamma3", S(1)}}, P{{"gamma3", S(2)}}}});

    // pp-wave (not a plane wave) left-invariant steady soliton on e(1,1) x R;
    // not algebraic, not F[t]-critical for any t
    out.push_back(FamilySpec<S>{
        "LIRS.pp",
        {"gamma1", "eps"},
        {{"gamma1", S(1)}, {"eps", S(1)}},
        [getg](const P& p) {
            S g1 = getg(p, "gamma1"), eps = getg(p, "eps");
            constraint<S>(!detail::is0(g1), "LIRS.pp", "gamma1 != 0");
            constraint<S>(detail::is0(eps * eps - S(1)), "LIRS.pp", "eps^2 = 1");
            FamilyInstance<S> fi;
            fi.id = "LIRS.pp";
            fi.params = p;
            MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u2>=<u3,u3>=<u4,u4>=1");
            a.add_bracket(0, 3, 0, g1);
            a.add_bracket(0, 3, 1, eps);
            a.add_bracket(1, 3, 1, -g1);
            a.g = detail::pon12<S>();
            fi.algebra = a;
            fi.expected.soliton_exists = false;
            fi.expected.lirs_exists = true;
            fi.expected.lirs_c = S(0);
            fi.expected.wave = WaveKind::pp_wave_only;
            fi.expected.ft_critical = false;
            return fi;
        },
        {P{{"gamma1", S(1)}, {"eps", S(1)}}, P{{"gamma1", S(-2)}, {"eps", S(1)}},
         P{{"gamma1", S(1) / S(2)}, {"eps", S(-1)}}}});
}

template <class S>
void register_pwx(std::vector<FamilySpec<S>>& out) {
    using detail::constraint;
    using P = Params<S>;
    auto getg = [](const P& p, const char* k) { return detail::getp<S>(p, k); };

    // builder helpers for the two extension shapes; xi = (g1,...,g5,g8)
    auto abelian_ext = [](const std::string& id, const P& params, std::array<S, 6> xi,
                          AlgClass klass, std::vector<double> kp) {
        FamilyInstance<S> fi;
        fi.id = id;
        fi.params = params;
        MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
        a.add_bracket(0, 3, 0, xi[0]);
        a.add_bracket(0, 3, 1, -xi[1]);
        a.add_bracket(1, 3, 0, xi[1]);
        a.add_bracket(0, 3, 2, xi[2]);
        a.add_bracket(1, 3, 1, xi[3]);
        a.add_bracket(1, 3, 2, xi[4]);
        a.add_bracket(2, 3, 2, xi[5]);
        a.g = detail::pon34<S>();
        fi.algebra = a;
        fi.expected.c = S(0);
        fi.expected.kind = SolitonKind::steady;
        fi.expected.soliton_exists = true;
        fi.expected.wave = WaveKind::plane_wave;
        fi.expected.null_direction_index = 2;
        fi.expected.ricci_parallel = detail::is0(xi[5]);
        fi.expected.planewave_type = detail::is0(xi[5]) ? "i" : "ii";
        fi.expected.einstein = false;
        fi.expected.klass = klass;
        fi.expected.klass_params = std::move(kp);
        return fi;
    };
    auto heisenberg_ext = [](const std::string& id, const P& params, std::array<S, 5> xi,
                             AlgClass klass, std::vector<double> kp) {
        FamilyInstance<S> fi;
        fi.id = id;
        fi.params = params;
        MetricLieAlgebra<S> a(4, "pseudo-orthonormal <u1,u1>=<u2,u2>=<u3,u4>=1");
        a.add_bracket(0, 1, 2, S(1));
        a.add_bracket(0, 3, 0, xi[0]);
        a.add_bracket(0, 3, 1, -xi[1]);
        a.add_bracket(1, 3, 0, xi[1]);
        a.add_bracket(0, 3, 2, xi[2]);
        a.add_bracket(1, 3, 1, xi[3]);
        a.add_bracket(1, 3, 2, xi[4]);
        a.add_bracket(2, 3, 2, xi[0] + xi[3]);
        a.g = detail::pon34<S>();
        fi.algebra = a;
        fi.expected.c = S(0);
        fi.expected.kind = SolitonKind::steady;
        fi.expected.soliton_exists = true;
        fi.expected.wave = WaveKind::plane_wave;
        fi.expected.null_direction_index = 2;
        fi.expected.ricci_parallel = detail::is0(xi[0] + xi[3]);
        fi.expected.planewave_type = detail::is0(xi[0] + xi[3]) ? "i" : "ii";
        fi.expected.einstein = false;
        fi.expected.klass = klass;
        fi.expected.klass_params = std::move(kp);
        return fi;
    };

    out.push_back(FamilySpec<S>{
        "PWX.R.r3xR",
        {},
        {},
        [abelian_ext](const P& p) {
            return abelian_ext("PWX.R.r3xR", p, {S(-2), S(-1), S(1), S(0), S(0), S(0)},
                               AlgClass::r3xR, {});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r3l",
        {"lambda"},
        {{"lambda", S(2)}},
        [abelian_ext, getg](const P& p) {
            S la = getg(p, "lambda");
            constraint<S>(!detail::is0(la), "PWX.R.r3l", "lambda != 0");
            return abelian_ext("PWX.R.r3l", p, {S(-1), S(0), S(0), -la, S(0), S(0)},
                               AlgClass::r3_lambda_xR, {scalar_traits<S>::to_double(la)});
        },
        {P{{"lambda", S(2)}}, P{{"lambda", S(-1)}}, P{{"lambda", S(1) / S(2)}}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r3pl",
        {"lambda"},
        {{"lambda", S(1)}},
        [abelian_ext, getg](const P& p) {
            S la = getg(p, "lambda");
            constraint<S>(!detail::is0(la), "PWX.R.r3pl", "lambda != 0");
            S r2 = detail::require_sqrt<S>(S(2), "PWX.R.r3pl");
            return abelian_ext("PWX.R.r3pl", p, {S(1) - la, r2, S(0), -la - S(1), S(0), S(0)},
                               AlgClass::r3p_lambda_xR, {scalar_traits<S>::to_double(la)});
        },
        {P{{"lambda", S(1)}}, P{{"lambda", S(-2)}}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r4",
        {},
        {},
        [abelian_ext](const P& p) {
            return abelian_ext("PWX.R.r4", p, {S(-2), S(-1), S(1), S(0), S(0), S(-1)},
                               AlgClass::r4, {});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r4l",
        {"lambda"},
        {{"lambda", S(2)}},
        [abelian_ext, getg](const P& p) {
            S la = getg(p, "lambda");
            constraint<S>(!detail::is0(la - S(1)), "PWX.R.r4l", "lambda != 1");
            return abelian_ext("PWX.R.r4l", p, {-la, S(0), S(-1), S(-1), S(0), -la},
                               AlgClass::r4_lambda, {scalar_traits<S>::to_double(la)});
        },
        {P{{"lambda", S(2)}}, P{{"lambda", S(0)}}, P{{"lambda", S(-1)}}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r41",
        {},
        {},
        [abelian_ext](const P& p) {
            return abelian_ext("PWX.R.r41", p, {S(-2), S(1), S(0), S(0), S(0), S(-1)},
                               AlgClass::r4_lambda, {1.0});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r4ml",
        {"mu", "lambda"},
        {{"mu", S(2)}, {"lambda", S(3)}},
        [abelian_ext, getg](const P& p) {
            S mu = getg(p, "mu"), la = getg(p, "lambda");
            constraint<S>(!(detail::is0(mu - S(1)) && detail::is0(la - S(1))), "PWX.R.r4ml",
                          "(mu, lambda) != (1, 1)");
            std::array<S, 6> xi;
            if (!detail::is0(mu * mu - la * mu - la + S(1)))
                xi = {S(-1), S(0), S(0), -mu, S(0), -la};
            else
                xi = {-mu, S(0), S(0), -la, S(0), S(-1)};
            return abelian_ext("PWX.R.r4ml", p, xi, AlgClass::r4_mu_lambda,
                               {scalar_traits<S>::to_double(mu), scalar_traits<S>::to_double(la)});
        },
        {P{{"mu", S(2)}, {"lambda", S(3)}}, P{{"mu", S(-1)}, {"lambda", S(2)}},
         P{{"mu", S(3)}, {"lambda", S(5)}}}});
    out.push_back(FamilySpec<S>{
        "PWX.R.r4pml",
        {"mu", "lambda"},
        {{"mu", S(1)}, {"lambda", S(-1)}},
        [abelian_ext, getg](const P& p) {
            S mu = getg(p, "mu"), la = getg(p, "lambda");
            constraint<S>(!detail::is0(mu), "PWX.R.r4pml", "mu != 0");
            S r = detail::require_sqrt<S>((la + mu) * (la + mu) + S(1), "PWX.R.r4pml");
            return abelian_ext("PWX.R.r4pml", p, {-mu - S(2) * la, r, S(0), mu, S(0), -mu},
                               AlgClass::r4p_mu_lambda,
                               {scalar_traits<S>::to_double(mu), scalar_traits<S>::to_double(la)});
        },
        {P{{"mu", S(1)}, {"lambda", S(-1)}}, P{{"mu", S(-2)}, {"lambda", S(2)}}}});

    out.push_back(FamilySpec<S>{
        "PWX.H.n4",
        {},
        {},
        [heisenberg_ext](const P& p) {
            return heisenberg_ext("PWX.H.n4", p, {S(1), S(-1), S(0), S(-1), S(0)},
                                  AlgClass::n4, {});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.H.h3xR",
        {},
        {},
        [heisenberg_ext](const P& p) {
            return heisenberg_ext("PWX.H.h3xR", p, {S(0), S(0), S(0), S(0), S(0)},
                                  AlgClass::h3xR, {});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.H.d4",
        {},
        {},
        [heisenberg_ext](const P& p) {
            return heisenberg_ext("PWX.H.d4", p, {S(-1), S(0), S(0), S(1), S(0)}, AlgClass::d4,
                                  {});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.H.h4",
        {},
        {},
        [heisenberg_ext](const P& p) {
            return heisenberg_ext("PWX.H.h4", p, {S(-2), S(1), S(0), S(0), S(0)}, AlgClass::h4,
                                  {});
        },
        {P{}}});
    out.push_back(FamilySpec<S>{
        "PWX.H.d4l",
        {"lambda"},
        {{"lambda", S(2)}},
        [heisenberg_ext, getg](const P& p) {
            S la = getg(p, "lambda");
            // Einstein locus 4 lambda(1-lambda) + 1 = 0 has irrational roots; guard anyway
            constraint<S>(!detail::is0(S(4) * la * (S(1) - la) + S(1)), "PWX.H.d4l",
                          "4 lambda (1 - lambda) != -1");
            return heisenberg_ext("PWX.H.d4l", p, {-la, S(0), S(0), la - S(1), S(0)},
                                  AlgClass::d4_lambda, {scalar_traits<S>::to_double(la)});
        },
        {P{{"lambda", S(2)}}, P{{"lambda", S(-1)}}, P{{"lambda", S(1) / S(2)}}}});
    out.push_back(FamilySpec<S>{
        "PWX.H.d4pl",
        {"lambda"},
        {{"lambda", S(1)}},
        [heisenberg_ext, getg](const P& p) {
            S la = getg(p, "lambda");
            return heisenberg_ext("PWX.H.d4pl", p, {-la, S(-1), S(0), -la, S(0)},
                                  AlgClass::d4p_lambda, {scalar_traits<S>::to_double(la)});
        },
        {P{{"lambda", S(1)}}, P{{"lambda", S(-2)}}, P{{"lambda", S(1) / S(2)}}}});
}

}  // namespace slab::cat

#endif
