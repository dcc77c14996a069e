#ifndef SOLITONLAB_FLOW_HPP
#define SOLITONLAB_FLOW_HPP

// Ricci flow dg/dt = -2 rho(g(t)) with the bracket structure held fixed
// (metric-flow picture); classical fixed-step 4th-order integration. The
// self-similarity diagnostic tests the scalar-curvature law
// tau(t) (1 - 2 c t) = tau(0) satisfied by homothetically evolving metrics.

#include <ostream>

#include "curvature.hpp"

namespace slab {

struct FlowTrajectory {
    std::vector<double> times;
    std::vector<Mat<double>> metrics;
    std::vector<double> taus;
    std::vector<SignatureCounts> signatures;
    double step = 0;
    bool degenerated = false;  // aborted on signature change / near-degeneracy
};

namespace detail {

inline Mat<double> ricci_of(MetricLieAlgebra<double>& a, const Mat<double>& g, double tol) {
    a.g = g;
    return compute_curvature(a, tol).rho;
}

inline bool same_sig(const SignatureCounts& x, const SignatureCounts& y) {
    return x.plus == y.plus && x.minus == y.minus && x.zero == y.zero;
}

}  // namespace detail

inline FlowTrajectory integrate(const MetricLieAlgebra<double>& a0, double T, double h,
                                double tol = 1e-9) {
    if (h <= 0 || T <= 0) throw std::invalid_argument("flow: need T > 0 and h > 0");
    MetricLieAlgebra<double> a = a0;  // brackets fixed, metric evolves
    FlowTrajectory tr;
    tr.step = h;
    Mat<double> g = a0.g;
    SignatureCounts sig0 = signature(g, tol);
    double t = 0;
    auto record = [&](double tt, const Mat<double>& gg) {
        tr.times.push_back(tt);
        tr.metrics.push_back(gg);
        a.g = gg;
        tr.taus.push_back(compute_curvature(a, tol).tau);
        tr.signatures.push_back(signature(gg, tol));
    };
    record(t, g);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(T / h - 1e-12));
    for (std::size_t s = 0; s < steps; ++s) {
        double hs = std::min(h, T - t);
        Mat<double> k1 = (-2.0) * detail::ricci_of(a, g, tol);
        Mat<double> k2 = (-2.0) * detail::ricci_of(a, g + (hs / 2) * k1, tol);
        Mat<double> k3 = (-2.0) * detail::ricci_of(a, g + (hs / 2) * k2, tol);
        Mat<double> k4 = (-2.0) * detail::ricci_of(a, g + hs * k3, tol);
        Mat<double> gn = g + (hs / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        double tn = t + hs;
        SignatureCounts sig = signature(gn, tol);
        if (!detail::same_sig(sig, sig0) || std::abs(det(gn, tol)) < tol) {
            tr.degenerated = true;  // keep the partial trajectory
            return tr;
        }
        g = gn;
        t = tn;
        record(t, g);
    }
    return tr;
}

// max over samples of |tau(t) (1 - 2 c t) - tau(0)| / max(1, |tau(0)|)
inline double self_similarity_check(const FlowTrajectory& tr, double c) {
    if (tr.taus.empty()) return 0;
    double tau0 = tr.taus.front();
    double dev = 0;
    for (std::size_t i = 0; i < tr.taus.size(); ++i)
        dev = std::max(dev, std::abs(tr.taus[i] * (1 - 2 * c * tr.times[i]) - tau0));
    return dev / std::max(1.0, std::abs(tau0));
}

// CSV columns: t, tau, g_11 .. g_nn (row-major)
inline void write_csv(const FlowTrajectory& tr, std::ostream& os) {
    if (tr.metrics.empty()) return;
    const std::size_t n = tr.metrics.front().rows;
    os << "t,tau";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) os << ",g_" << (i + 1) << (j + 1);
    os << "\n";
    auto prev = os.precision(12);
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        os << tr.times[k] << "," << tr.taus[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) os << "," << tr.metrics[k](i, j);
        os << "\n";
    }
    os.precision(prev);
}

}  // namespace slab

#endif
