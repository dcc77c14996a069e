#include <catch2/catch_amalgamated.hpp>

#include "solitonlab/algebra.hpp"
#include "solitonlab/catalog.hpp"

using slab::Mat;
using slab::MetricLieAlgebra;
using slab::Rat;
using slab::Vec;

namespace {

MetricLieAlgebra<Rat> heisenberg3() {
    MetricLieAlgebra<Rat> a(3, "orthonormal, e3 timelike");
    a.add_bracket(0, 1, 2, Rat(1));
    for (std::size_t i = 0; i < 3; ++i) a.g(i, i) = (i == 2) ? Rat(-1) : Rat(1);
    return a;
}

}  // namespace

TEST_CASE("add_bracket stores the antisymmetric companion") {
    auto a = heisenberg3();
    CHECK(a.c(0, 1, 2) == Rat(1));
    CHECK(a.c(1, 0, 2) == Rat(-1));
    Vec<Rat> e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)};
    auto b = a.bracket(e1, e2);
    CHECK(b[2] == Rat(1));
    auto br = a.bracket(e2, e1);
    CHECK(br[2] == Rat(-1));
}

TEST_CASE("validation accepts a Lie algebra and reports the signature") {
    auto a = heisenberg3();
    auto vr = slab::validate(a);
    REQUIRE(vr.ok());
    CHECK(vr.sig.plus == 2);
    CHECK(vr.sig.minus == 1);
    CHECK(vr.sig.zero == 0);
}

TEST_CASE("validation pinpoints a Jacobi failure") {
    MetricLieAlgebra<Rat> a(3);
    // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e2 is not a Lie algebra
    a.add_bracket(0, 1, 2, Rat(1));
    a.add_bracket(0, 2, 1, Rat(1));
    a.add_bracket(1, 2, 1, Rat(1));
    for (std::size_t i = 0; i < 3; ++i) a.g(i, i) = Rat(1);
    auto vr = slab::validate(a);
    REQUIRE(!vr.jacobi);
    REQUIRE(!vr.ok());
    // the reported quadruple really violates the identity
    auto [i, j, k, l] = std::tuple{vr.jacobi_fail[0], vr.jacobi_fail[1], vr.jacobi_fail[2],
                                   vr.jacobi_fail[3]};
    Rat s(0);
    for (std::size_t m = 0; m < 3; ++m)
        s += a.c(i, j, m) * a.c(m, k, l) + a.c(j, k, m) * a.c(m, i, l) +
             a.c(k, i, m) * a.c(m, j, l);
    CHECK(s != 0);
}

TEST_CASE("degenerate metric is rejected") {
    auto a = heisenberg3();
    a.g(2, 2) = Rat(0);
    auto vr = slab::validate(a);
    CHECK(!vr.metric_nondegenerate);
    CHECK(!vr.ok());
}

TEST_CASE("JSON round trip preserves the algebra on both backends") {
    auto fi = slab::cat::instantiate<Rat>("R3.L.Ib");
    auto j = slab::to_json(fi.algebra);
    CHECK(j["scalar"] == "rational");
    auto back = slab::from_json<Rat>(j);
    CHECK(back.n == fi.algebra.n);
    CHECK(back.cc == fi.algebra.cc);
    CHECK(back.g.a == fi.algebra.g.a);
    CHECK(slab::to_json(back).dump() == j.dump());

    auto fd = slab::cat::instantiate<double>("R3.L.Ib");
    auto jd = slab::to_json(fd.algebra);
    CHECK(jd["scalar"] == "float");
    auto backd = slab::from_json<double>(jd);
    CHECK(backd.cc == fd.algebra.cc);
}

TEST_CASE("change_basis transforms brackets and metric consistently") {
    auto a = heisenberg3();
    Mat<Rat> M(3, 3);
    // e1 -> 2 e1, e2 -> e2 + e1, e3 -> -e3
    M(0, 0) = Rat(2);
    M(0, 1) = Rat(1);
    M(1, 1) = Rat(1);
    M(2, 2) = Rat(-1);
    auto b = slab::change_basis(a, M);
    REQUIRE(slab::validate(b).ok());
    // [2e1, e2 + e1] = 2 e3 = -2 b3
    CHECK(b.c(0, 1, 2) == Rat(-2));
    // metric: <b1,b1> = 4, <b1,b2> = 2, <b3,b3> = -1
    CHECK(b.g(0, 0) == Rat(4));
    CHECK(b.g(0, 1) == Rat(2));
    CHECK(b.g(2, 2) == Rat(-1));
    // inverse change restores the original
    Mat<Rat> Minv(3, 3);
    Minv(0, 0) = Rat(1, 2);
    Minv(0, 1) = Rat(-1, 2);
    Minv(1, 1) = Rat(1);
    Minv(2, 2) = Rat(-1);
    auto c = slab::change_basis(b, Minv);
    CHECK(c.cc == a.cc);
    CHECK(c.g.a == a.g.a);
}

TEST_CASE("unimodularity detection") {
    CHECK(slab::is_unimodular(heisenberg3()));
    auto fi = slab::cat::instantiate<Rat>("R3.g_R.i");
    CHECK(!slab::is_unimodular(fi.algebra));
}
