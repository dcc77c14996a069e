#include <catch2/catch_amalgamated.hpp>

#include "solitonlab/catalog.hpp"
#include "solitonlab/flow.hpp"

TEST_CASE("flow rejects bad arguments") {
    auto fi = slab::cat::instantiate<double>("R3.g_R.i");
    CHECK_THROWS_AS(slab::integrate(fi.algebra, 0.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(slab::integrate(fi.algebra, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("Einstein metrics evolve homothetically under the flow") {
    auto fi = slab::cat::instantiate<double>("EE.R");
    auto p = slab::compute_curvature(fi.algebra);
    auto e = slab::einstein_check(fi.algebra, p);
    REQUIRE(e.einstein);
    double T = 0.1;
    auto tr = slab::integrate(fi.algebra, T, 1e-3);
    REQUIRE(!tr.degenerated);
    // g(t) = (1 - 2 lambda t) g(0) for the Ricci flow of an Einstein metric
    double worst = 0;
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        double f = 1.0 - 2.0 * e.lambda * tr.times[k];
        const auto& g = tr.metrics[k];
        for (std::size_t i = 0; i < g.rows; ++i)
            for (std::size_t j = 0; j < g.cols; ++j)
                worst = std::max(worst, std::abs(g(i, j) - f * fi.algebra.g(i, j)));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("soliton scalar-curvature law along the flow") {
    auto fi = slab::cat::instantiate<double>("R3.g_R.i");
    auto p = slab::compute_curvature(fi.algebra);
    auto sol = slab::soliton_solve(fi.algebra, p);
    REQUIRE(sol.exists);
    CHECK(sol.c == Catch::Approx(1.5));
    auto tr = slab::integrate(fi.algebra, 0.2, 1e-3);
    REQUIRE(!tr.degenerated);
    // tau(t) (1 - 2 c t) stays equal to tau(0)
    CHECK(slab::self_similarity_check(tr, sol.c) < 1e-5);
    // a wrong constant breaks the law decisively
    CHECK(slab::self_similarity_check(tr, 0.0) > 1e-2);
}

TEST_CASE("step-size refinement shows fourth-order convergence") {
    auto fi = slab::cat::instantiate<double>("R3.g_R.i");
    const double T = 0.2;
    auto ref = slab::integrate(fi.algebra, T, 1e-4);
    auto err_at = [&](double h) {
        auto tr = slab::integrate(fi.algebra, T, h);
        const auto& g = tr.metrics.back();
        const auto& gr = ref.metrics.back();
        double e = 0;
        for (std::size_t i = 0; i < g.rows; ++i)
            for (std::size_t j = 0; j < g.cols; ++j) e = std::max(e, std::abs(g(i, j) - gr(i, j)));
        return e;
    };
    double e1 = err_at(4e-2), e2 = err_at(2e-2), e3 = err_at(1e-2);
    CHECK(e1 / e2 > 10.0);
    CHECK(e2 / e3 > 10.0);
    CHECK(e1 / e2 < 24.0);
    CHECK(e2 / e3 < 24.0);
}

TEST_CASE("flow aborts when the metric degenerates") {
    // expanding direction with mixed signature can pinch; use a plane wave
    // metric flowed far: if no degeneration happens the flag stays false,
    // so instead force it with a huge horizon on a shrinking direction
    auto fi = slab::cat::instantiate<double>("EE.R");
    auto p = slab::compute_curvature(fi.algebra);
    auto e = slab::einstein_check(fi.algebra, p);
    REQUIRE(e.einstein);
    if (e.lambda > 0) {
        // g(t) hits zero at t = 1/(2 lambda)
        auto tr = slab::integrate(fi.algebra, 1.0 / e.lambda, 1e-3);
        CHECK(tr.degenerated);
    }
}
