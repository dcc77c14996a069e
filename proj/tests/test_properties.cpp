// Invariance properties of the soliton analysis plus report plumbing.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "solitonlab/catalog.hpp"
#include "solitonlab/report.hpp"

using slab::Mat;
using slab::MetricLieAlgebra;
using slab::Rat;

namespace {

// random invertible rational matrix: identity plus a few elementary ops
Mat<Rat> random_basis_change(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    Mat<Rat> M(n, n);
    for (std::size_t i = 0; i < n; ++i) M(i, i) = Rat(1);
    for (int ops = 0; ops < 6; ++ops) {
        int i = idx(rng), j = idx(rng);
        if (i == j) {
            int v = num(rng);
            if (v != 0) M(i, i) = M(i, i) * Rat(v, den(rng));
        } else {
            M(i, j) += Rat(num(rng), den(rng));
        }
    }
    return M;
}

}  // namespace

TEST_CASE("soliton constant is invariant under change of basis") {
    std::mt19937 rng(42);
    for (const char* id : {"R3.g_R.i", "R3.L.Ib.ii", "R3.L.III", "H3.D0"}) {
        INFO(id);
        auto fi = slab::cat::instantiate<Rat>(id);
        auto p0 = slab::compute_curvature(fi.algebra);
        auto s0 = slab::soliton_solve(fi.algebra, p0);
        for (int rep = 0; rep < 3; ++rep) {
            auto M = random_basis_change(fi.algebra.n, rng);
            MetricLieAlgebra<Rat> b;
            try {
                b = slab::change_basis(fi.algebra, M);
            } catch (const std::exception&) {
                continue;  // singular draw
            }
            REQUIRE(slab::validate(b).ok());
            auto p = slab::compute_curvature(b);
            auto s = slab::soliton_solve(b, p);
            REQUIRE(s.exists == s0.exists);
            if (s0.exists && !s0.any_c) CHECK(s.c == s0.c);
            CHECK(p.tau == p0.tau);
            CHECK(p.rhonorm2 == p0.rhonorm2);
        }
    }
}

TEST_CASE("soliton constant scales as lambda^-2 under metric scaling") {
    for (const char* id : {"R3.g_R.i", "R3.L.III"}) {
        INFO(id);
        auto fi = slab::cat::instantiate<Rat>(id);
        auto p0 = slab::compute_curvature(fi.algebra);
        auto s0 = slab::soliton_solve(fi.algebra, p0);
        REQUIRE(s0.exists);
        for (Rat lam : {Rat(2), Rat(1, 3), Rat(5, 2)}) {
            auto b = fi.algebra;
            for (auto& x : b.g.a) x *= lam * lam;  // g -> lambda^2 g
            auto p = slab::compute_curvature(b);
            auto s = slab::soliton_solve(b, p);
            REQUIRE(s.exists);
            CHECK(Rat(s.c * lam * lam) == s0.c);
            CHECK(Rat(p.tau * lam * lam) == p0.tau);
        }
    }
}

TEST_CASE("criticality parameter t is scale invariant") {
    auto fi = slab::cat::instantiate<Rat>("R3.g_R.i");
    auto cr0 = slab::functional_criticality(fi.algebra, slab::compute_curvature(fi.algebra));
    REQUIRE(cr0.has_t);
    auto b = fi.algebra;
    for (auto& x : b.g.a) x *= Rat(9);
    auto cr = slab::functional_criticality(b, slab::compute_curvature(b));
    REQUIRE(cr.has_t);
    CHECK(cr.t == cr0.t);
}

TEST_CASE("classification report round-trips its input block") {
    auto fi = slab::cat::instantiate<Rat>("R3.L.Ib.ii");
    auto rep = slab::classification_report(fi.algebra);
    CHECK(rep["schema"] == slab::report_schema);
    CHECK(rep["validation"]["jacobi"] == true);
    CHECK(rep["soliton"]["exists"] == true);
    auto back = slab::from_json<Rat>(rep["input"]);
    auto rep2 = slab::classification_report(back);
    CHECK(rep2["input_hash"] == rep["input_hash"]);
    CHECK(rep2["soliton"]["c"] == rep["soliton"]["c"]);
}

TEST_CASE("report marks invalid input and stops early") {
    MetricLieAlgebra<Rat> a(3);
    a.add_bracket(0, 1, 2, Rat(1));
    a.add_bracket(0, 2, 1, Rat(1));
    a.add_bracket(1, 2, 1, Rat(1));
    for (std::size_t i = 0; i < 3; ++i) a.g(i, i) = Rat(1);
    auto rep = slab::classification_report(a);
    CHECK(rep["validation"]["jacobi"] == false);
    CHECK(rep["validation"].contains("jacobi_fail"));
    CHECK(!rep.contains("soliton"));
}

TEST_CASE("full curvature dump carries its conventions header") {
    auto fi = slab::cat::instantiate<Rat>("R3.g_R.i");
    auto rep = slab::classification_report(fi.algebra, slab::scalar_traits<Rat>::default_tol(),
                                           /*full_curvature=*/true);
    CHECK(rep["curvature"].contains("conventions"));
    CHECK(rep["curvature"]["riemann"].size() == 4 * 4 * 4 * 4);
}
