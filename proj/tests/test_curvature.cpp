// Exact structural identities of the curvature package, checked on a mix
// of catalog instances with the rational backend.

#include <catch2/catch_amalgamated.hpp>

#include "solitonlab/catalog.hpp"
#include "solitonlab/curvature.hpp"

using slab::MetricLieAlgebra;
using slab::Rat;

namespace {

const std::vector<std::string> sample_ids = {
    "R3.g_R.i", "R3.L.Ib", "R3.L.II", "R3.g_D", "H3.R", "PW.d", "3D.IV1", "EE.R",
};

template <class F>
void for_samples(F&& f) {
    for (const auto& id : sample_ids) {
        auto fi = slab::cat::instantiate<Rat>(id);
        INFO(id);
        f(fi.algebra, slab::compute_curvature(fi.algebra));
    }
}

}  // namespace

TEST_CASE("connection is torsion-free and metric-compatible") {
    for_samples([](const MetricLieAlgebra<Rat>& a, const slab::CurvaturePackage<Rat>& p) {
        const std::size_t n = a.n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    // nabla_i e_j - nabla_j e_i = [e_i, e_j]
                    REQUIRE(p.G(i, j, k) - p.G(j, i, k) == a.c(i, j, k));
                    // <nabla_i e_j, e_k> + <e_j, nabla_i e_k> = 0
                    Rat s(0);
                    for (std::size_t m = 0; m < n; ++m)
                        s += p.G(i, j, m) * a.g(m, k) + p.G(i, k, m) * a.g(m, j);
                    REQUIRE(s == 0);
                }
    });
}

TEST_CASE("Riemann tensor symmetries and first Bianchi identity") {
    for_samples([](const MetricLieAlgebra<Rat>& a, const slab::CurvaturePackage<Rat>& p) {
        const std::size_t n = a.n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t l = 0; l < n; ++l) {
                        REQUIRE(p.Rlow(i, j, k, l) == -p.Rlow(j, i, k, l));
                        REQUIRE(p.Rlow(i, j, k, l) == -p.Rlow(i, j, l, k));
                        REQUIRE(p.Rlow(i, j, k, l) == p.Rlow(k, l, i, j));
                        REQUIRE(p.R(i, j, k, l) + p.R(j, k, i, l) + p.R(k, i, j, l) == 0);
                    }
                }
    });
}

TEST_CASE("second Bianchi identity holds for the covariant derivative") {
    for_samples([](const MetricLieAlgebra<Rat>& a, const slab::CurvaturePackage<Rat>& p) {
        const std::size_t n = a.n;
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l)
                            REQUIRE(p.dR(m, i, j, k, l) + p.dR(i, j, m, k, l) +
                                        p.dR(j, m, i, k, l) ==
                                    0);
    });
}

TEST_CASE("Ricci data is consistent") {
    for_samples([](const MetricLieAlgebra<Rat>& a, const slab::CurvaturePackage<Rat>& p) {
        const std::size_t n = a.n;
        // rho symmetric, rho(i,j) = sum_k R(k,i,j,k), Ric = g^{-1} rho
        Rat tau(0), rn2(0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE(p.rho(i, j) == p.rho(j, i));
                Rat s(0);
                for (std::size_t k = 0; k < n; ++k) s += p.R(k, i, j, k);
                REQUIRE(p.rho(i, j) == s);
                Rat ric(0);
                for (std::size_t k = 0; k < n; ++k) ric += p.ginv(i, k) * p.rho(k, j);
                REQUIRE(p.Ric(i, j) == ric);
                rn2 += p.Ric(i, j) * p.Ric(j, i);
            }
            tau += p.Ric(i, i);
        }
        REQUIRE(p.tau == tau);
        REQUIRE(p.rhonorm2 == rn2);
    });
}

TEST_CASE("calibration: the nilpotent reference instance has tau = +1") {
    auto fi = slab::cat::instantiate<Rat>("R3.g_R.i");
    auto p = slab::compute_curvature(fi.algebra);
    CHECK(p.tau == Rat(1));
    CHECK(p.rhonorm2 == Rat(3, 2));
}

TEST_CASE("curvature of a flat metric vanishes") {
    // abelian algebra with any metric is flat
    MetricLieAlgebra<Rat> a(3);
    for (std::size_t i = 0; i < 3; ++i) a.g(i, i) = (i == 0) ? Rat(-2) : Rat(3);
    auto p = slab::compute_curvature(a);
    for (const auto& x : p.Riem) CHECK(x == 0);
    CHECK(p.tau == 0);
}
