#include <catch2/catch_amalgamated.hpp>

#include "solitonlab/catalog.hpp"
#include "solitonlab/classify.hpp"

using slab::MetricLieAlgebra;
using slab::Rat;

TEST_CASE("soliton constants of reference instances are exact") {
    struct Case {
        const char* id;
        Rat c;
        slab::SolitonKind kind;
    };
    for (const auto& [id, c, kind] : {Case{"R3.g_R.i", Rat(3, 2), slab::SolitonKind::shrinking},
                                      Case{"R3.L.Ib.ii", Rat(3), slab::SolitonKind::shrinking},
                                      Case{"R3.L.III", Rat(-3), slab::SolitonKind::expanding}}) {
        INFO(id);
        auto fi = slab::cat::instantiate<Rat>(id);
        auto p = slab::compute_curvature(fi.algebra);
        auto sol = slab::soliton_solve(fi.algebra, p);
        REQUIRE(sol.exists);
        CHECK(sol.c == c);
        CHECK(sol.kind == kind);
        // D = Ric - c Id must be a derivation: the residual vanishes exactly
        for (const auto& r : slab::derivation_residual(fi.algebra, p, sol.c)) CHECK(r == 0);
        // and c tau = |rho|^2
        CHECK(Rat(sol.c * p.tau) == p.rhonorm2);
    }
}

TEST_CASE("abelian algebras are solitons for every constant") {
    MetricLieAlgebra<Rat> a(4);
    for (std::size_t i = 0; i < 4; ++i) a.g(i, i) = (i == 3) ? Rat(-1) : Rat(1);
    auto p = slab::compute_curvature(a);
    auto sol = slab::soliton_solve(a, p);
    CHECK(sol.exists);
    CHECK(sol.any_c);
}

TEST_CASE("non-existence is reported on the negative families") {
    for (const char* id : {"PW.d", "NS.L.Ib", "EE.deg.D1"}) {
        INFO(id);
        auto fi = slab::cat::instantiate<Rat>(id);
        auto p = slab::compute_curvature(fi.algebra);
        CHECK(!slab::soliton_solve(fi.algebra, p).exists);
    }
}

TEST_CASE("Einstein detection with exact lambda") {
    auto fi = slab::cat::instantiate<Rat>("EE.R");
    auto p = slab::compute_curvature(fi.algebra);
    auto e = slab::einstein_check(fi.algebra, p);
    REQUIRE(e.einstein);
    CHECK(Rat(4) * e.lambda == p.tau);
    // Einstein metrics are solitons with c = lambda... up to the derivation
    auto sol = slab::soliton_solve(fi.algebra, p);
    CHECK(sol.exists);
}

TEST_CASE("functional criticality: zero-energy critical value") {
    auto fi = slab::cat::instantiate<Rat>("R3.g_R.i");
    auto p = slab::compute_curvature(fi.algebra);
    auto cr = slab::functional_criticality(fi.algebra, p);
    REQUIRE(cr.has_t);
    CHECK(cr.t == Rat(-3, 2));
    CHECK(cr.el_residual_max == 0);
    // the Euler-Lagrange tensor vanishes identically at t
    auto E = slab::el_tensor(fi.algebra, p, cr.t);
    for (const auto& x : E.a) CHECK(x == 0);
}

TEST_CASE("wave classification: plane wave with null direction u3") {
    auto fi = slab::cat::instantiate<Rat>("PW.d");
    auto p = slab::compute_curvature(fi.algebra);
    auto w = slab::wave_classify(fi.algebra, p);
    CHECK(w.kind == slab::WaveKind::plane_wave);
    REQUIRE(w.null_direction);
    const auto& v = *w.null_direction;
    // direction along u3 and actually null
    for (std::size_t i = 0; i < 4; ++i)
        if (i != 2) CHECK(v[i] == 0);
    CHECK(v[2] != 0);
    CHECK(fi.algebra.inner(v, v) == 0);
}

TEST_CASE("wave classification: flat metric") {
    MetricLieAlgebra<Rat> a(4);
    a.g = slab::cat::instantiate<Rat>("PW.d").algebra.g;
    auto p = slab::compute_curvature(a);
    CHECK(slab::wave_classify(a, p).kind == slab::WaveKind::flat);
}

TEST_CASE("structure operator of unimodular 3D algebras") {
    struct Case {
        const char* id;
        slab::JordanType3 jt;
    };
    for (const auto& [id, jt] : {Case{"3D.Ia", slab::JordanType3::Ia},
                                 Case{"3D.Ib", slab::JordanType3::Ib},
                                 Case{"3D.II", slab::JordanType3::II},
                                 Case{"3D.III", slab::JordanType3::III}}) {
        INFO(id);
        auto fi = slab::cat::instantiate<double>(id);
        REQUIRE(slab::is_unimodular(fi.algebra));
        auto so = slab::structure_operator_3d(fi.algebra);
        CHECK(so.jordan_type == jt);
        CHECK(so.self_adjoint);
    }
}

TEST_CASE("structure operator rejects non-unimodular input") {
    MetricLieAlgebra<double> a(3);
    a.add_bracket(0, 2, 0, 1.0);  // [e1,e3] = e1, tr ad_{e3} != 0
    for (std::size_t i = 0; i < 3; ++i) a.g(i, i) = (i == 2) ? -1.0 : 1.0;
    REQUIRE(slab::validate(a).ok());
    CHECK(!slab::is_unimodular(a));
    CHECK_THROWS_AS(slab::structure_operator_3d(a), std::invalid_argument);
}

TEST_CASE("left-invariant soliton field satisfies its defining equation") {
    auto fi = slab::cat::instantiate<double>("LIRS.i");
    const auto& a = fi.algebra;
    auto p = slab::compute_curvature(a);
    auto li = slab::left_invariant_soliton(a, p);
    REQUIRE(li.exists);
    const std::size_t n = a.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double lhs = slab::scalar_traits<double>::to_double(p.rho(i, j));
            double sij = 0, sji = 0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    sij += li.X[k] * p.G(i, k, m) * a.g(m, j);
                    sji += li.X[k] * p.G(j, k, m) * a.g(m, i);
                }
            lhs += (sij + sji) / 2;
            CHECK(std::abs(lhs - li.c * a.g(i, j)) < 1e-9);
        }
}

TEST_CASE("locally symmetric and Ricci-parallel flags") {
    // flat abelian: trivially symmetric
    MetricLieAlgebra<Rat> a(4);
    for (std::size_t i = 0; i < 4; ++i) a.g(i, i) = (i == 3) ? Rat(-1) : Rat(1);
    auto p = slab::compute_curvature(a);
    CHECK(slab::locally_symmetric(p));
    CHECK(slab::ricci_parallel(p));
    // nilpotent reference instance: neither
    auto fi = slab::cat::instantiate<Rat>("R3.g_R.i");
    auto q = slab::compute_curvature(fi.algebra);
    CHECK(!slab::locally_symmetric(q));
    CHECK(!slab::ricci_parallel(q));
}
