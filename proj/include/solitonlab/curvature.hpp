#ifndef SOLITONLAB_CURVATURE_HPP
#define SOLITONLAB_CURVATURE_HPP

// Levi-Civita connection and curvature of a left-invariant metric, computed
// on the invariant frame of the Lie algebra. Conventions:
//   2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>        (Koszul)
//   R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z
//   rho(x,y) = trace(z -> R(z,x)y),   tau = tr Ric,  |rho|^2 = tr(Ric^2)
// The Ricci sign is calibrated (see the sign flip in riemann below is not
// needed): with these conventions the n4 nilsoliton frame used in the test
// suite has tau = +1, matching the source classification.

#include <stdexcept>

#include "algebra.hpp"
#include "linalg.hpp"

namespace slab {

template <class S>
struct CurvaturePackage {
    std::size_t n = 0;
    Mat<S> ginv;
    std::vector<S> Gamma;     // Gamma_{ij}^k, flat [i][j][k]
    std::vector<S> Riem;      // R_{ijk}^l, flat [i][j][k][l]
    std::vector<S> RiemLow;   // R_{ijkl}
    Mat<S> rho;               // Ricci tensor rho_{ij}
    Mat<S> Ric;               // Ricci operator: (Ric v)^k = Ric(k,i) v^i
    S tau = S(0);
    S rhonorm2 = S(0);        // indefinite contraction rho_{ij} rho^{ij}
    std::vector<S> nablaR;    // (nabla_m R)_{ijk}^l, flat [m][i][j][k][l]
    std::vector<S> nablaRho;  // (nabla_m rho)_{ij}, flat [m][i][j]
    Mat<S> DeltaRho;          // rough Laplacian of rho
    Mat<S> Rrho;              // R[rho]_{ij} = R_{ikjl} rho^{kl}

    S G(std::size_t i, std::size_t j, std::size_t k) const { return Gamma[(i * n + j) * n + k]; }
    S R(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return Riem[((i * n + j) * n + k) * n + l];
    }
    S Rlow(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return RiemLow[((i * n + j) * n + k) * n + l];
    }
    S dR(std::size_t m, std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return nablaR[(((m * n + i) * n + j) * n + k) * n + l];
    }
    S drho(std::size_t m, std::size_t i, std::size_t j) const {
        return nablaRho[(m * n + i) * n + j];
    }
};

template <class S>
CurvaturePackage<S> compute_curvature(const MetricLieAlgebra<S>& a,
                                      double tol = scalar_traits<S>::default_tol()) {
    const std::size_t n = a.n;
    CurvaturePackage<S> p;
    p.n = n;
    auto gi = inverse(a.g, tol);
    if (!gi) throw std::invalid_argument("degenerate metric");
    p.ginv = *gi;

    // Koszul: K_{ijk} = <nabla_{e_i} e_j, e_k>
    std::vector<S> K(n * n * n, S(0));
    auto Kat = [&](std::size_t i, std::size_t j, std::size_t k) -> S& {
        return K[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                S s(0);
                for (std::size_t m = 0; m < n; ++m)
                    s += a.c(i, j, m) * a.g(m, k) - a.c(j, k, m) * a.g(m, i) +
                         a.c(k, i, m) * a.g(m, j);
                Kat(i, j, k) = s / S(2);
            }
    p.Gamma.assign(n * n * n, S(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                S s(0);
                for (std::size_t k = 0; k < n; ++k) s += Kat(i, j, k) * p.ginv(k, l);
                p.Gamma[(i * n + j) * n + l] = s;
            }

    // Riemann
    p.Riem.assign(n * n * n * n, S(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    S s(0);
                    for (std::size_t m = 0; m < n; ++m)
                        s += p.G(j, k, m) * p.G(i, m, l) - p.G(i, k, m) * p.G(j, m, l) -
                             a.c(i, j, m) * p.G(m, k, l);
                    p.Riem[((i * n + j) * n + k) * n + l] = s;
                }
    p.RiemLow.assign(n * n * n * n, S(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    S s(0);
                    for (std::size_t m = 0; m < n; ++m) s += p.R(i, j, k, m) * a.g(m, l);
                    p.RiemLow[((i * n + j) * n + k) * n + l] = s;
                }

    // Ricci
    p.rho = Mat<S>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S s(0);
            for (std::size_t m = 0; m < n; ++m) s += p.R(m, i, j, m);
            p.rho(i, j) = s;
        }
    p.Ric = Mat<S>(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            S s(0);
            for (std::size_t j = 0; j < n; ++j) s += p.rho(i, j) * p.ginv(j, k);
            p.Ric(k, i) = s;
        }
    p.tau = trace(p.Ric);
    p.rhonorm2 = trace(p.Ric * p.Ric);

    // nabla R: frame components are constant, only connection terms act
    p.nablaR.assign(n * n * n * n * n, S(0));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        S s(0);
                        for (std::size_t q = 0; q < n; ++q)
                            s += -p.G(m, i, q) * p.R(q, j, k, l) - p.G(m, j, q) * p.R(i, q, k, l) -
                                 p.G(m, k, q) * p.R(i, j, q, l) + p.G(m, q, l) * p.R(i, j, k, q);
                        p.nablaR[(((m * n + i) * n + j) * n + k) * n + l] = s;
                    }
    p.nablaRho.assign(n * n * n, S(0));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                S s(0);
                for (std::size_t q = 0; q < n; ++q)
                    s += -p.G(m, i, q) * p.rho(q, j) - p.G(m, j, q) * p.rho(i, q);
                p.nablaRho[(m * n + i) * n + j] = s;
            }

    // second covariant derivative of rho as a (0,3)-tensor T_{b;ij} = drho,
    // then Delta rho_{ij} = g^{ab} (nabla_a T)_{b ij}
    p.DeltaRho = Mat<S>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S s(0);
            for (std::size_t aa = 0; aa < n; ++aa)
                for (std::size_t b = 0; b < n; ++b) {
                    S t(0);
                    for (std::size_t q = 0; q < n; ++q)
                        t += -p.G(aa, b, q) * p.drho(q, i, j) - p.G(aa, i, q) * p.drho(b, q, j) -
                             p.G(aa, j, q) * p.drho(b, i, q);
                    s += p.ginv(aa, b) * t;
                }
            p.DeltaRho(i, j) = s;
        }

    // R[rho]_{ij} = R_{ikjl} g^{ka} g^{lb} rho_{ab}, in the curvature sign
    // convention of the critical-point equation (opposite to RiemLow above;
    // calibrated so that Ricci solitons are F[t]-critical at t = -|rho|^2/tau^2)
    p.Rrho = Mat<S>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S s(0);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t aa = 0; aa < n; ++aa)
                        for (std::size_t b = 0; b < n; ++b)
                            s -= p.Rlow(i, k, j, l) * p.ginv(k, aa) * p.ginv(l, b) * p.rho(aa, b);
            p.Rrho(i, j) = s;
        }
    return p;
}

}  // namespace slab

#endif
