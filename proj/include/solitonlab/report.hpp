#ifndef SOLITONLAB_REPORT_HPP
#define SOLITONLAB_REPORT_HPP

// JSON reports: the full curvature package (with an explicit conventions
// header, so dumps are interpretable without reading the source) and the
// classification report bundling every verdict with a hash of the input.

#include <string>

#include "classify.hpp"
#include "fingerprint.hpp"

namespace slab {

inline constexpr const char* report_schema = "solitonlab/report-1";

// FNV-1a over the canonical (sorted-key) dump; stable across runs.
inline std::string input_hash(const json& j) {
    const std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline const char* soliton_kind_name(SolitonKind k) {
    switch (k) {
        case SolitonKind::shrinking: return "shrinking";
        case SolitonKind::steady: return "steady";
        default: return "expanding";
    }
}

namespace detail {

template <class S>
json mat_to_json(const Mat<S>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class S>
json vec_to_json(const Vec<S>& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(scalar_to_json(v[i]));
    return a;
}

template <class S>
json flat_to_json(const std::vector<S>& v) {
    json a = json::array();
    for (const S& x : v) a.push_back(scalar_to_json(x));
    return a;
}

}  // namespace detail

template <class S>
json curvature_to_json(const CurvaturePackage<S>& p) {
    json j;
    j["conventions"] = {
        {"koszul", "2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>"},
        {"riemann", "R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z; "
                    "Riem flat index order [i][j][k][l] = l-component of R(e_i,e_j)e_k"},
        {"ricci", "rho(x,y) = trace(z -> R(z,x)y); tau = tr Ric; rhonorm2 = tr(Ric^2)"},
        {"layout", "flat arrays are row-major over the bracketed index order"},
    };
    j["n"] = p.n;
    j["tau"] = detail::scalar_to_json(p.tau);
    j["rhonorm2"] = detail::scalar_to_json(p.rhonorm2);
    j["ginv"] = detail::mat_to_json(p.ginv);
    j["gamma"] = detail::flat_to_json(p.Gamma);      // [i][j][k]
    j["riemann"] = detail::flat_to_json(p.Riem);     // [i][j][k][l]
    j["riemann_low"] = detail::flat_to_json(p.RiemLow);
    j["rho"] = detail::mat_to_json(p.rho);
    j["ric"] = detail::mat_to_json(p.Ric);
    j["nabla_riemann"] = detail::flat_to_json(p.nablaR);   // [m][i][j][k][l]
    j["nabla_rho"] = detail::flat_to_json(p.nablaRho);     // [m][i][j]
    j["delta_rho"] = detail::mat_to_json(p.DeltaRho);
    return j;
}

// All verdicts for one algebra. The "input" block round-trips through
// from_json, so analysis output can be fed back in as an algebra spec.
template <class S>
json classification_report(const MetricLieAlgebra<S>& a,
                           double tol = scalar_traits<S>::default_tol(),
                           bool full_curvature = false) {
    json input = to_json(a);
    json j;
    j["schema"] = report_schema;
    j["input"] = input;
    j["input_hash"] = input_hash(input);
    auto vr = validate(a, tol);
    j["validation"] = {{"antisymmetric", vr.antisymmetric},
                       {"jacobi", vr.jacobi},
                       {"metric_symmetric", vr.metric_symmetric},
                       {"metric_nondegenerate", vr.metric_nondegenerate},
                       {"signature", {vr.sig.plus, vr.sig.minus, vr.sig.zero}}};
    if (!vr.jacobi) j["validation"]["jacobi_fail"] = {vr.jacobi_fail[0] + 1, vr.jacobi_fail[1] + 1,
                                                      vr.jacobi_fail[2] + 1, vr.jacobi_fail[3] + 1};
    if (!vr.ok()) return j;

    auto p = compute_curvature(a, tol);
    if (full_curvature)
        j["curvature"] = curvature_to_json(p);
    else
        j["curvature"] = {{"tau", detail::scalar_to_json(p.tau)},
                          {"rhonorm2", detail::scalar_to_json(p.rhonorm2)},
                          {"rho", detail::mat_to_json(p.rho)}};

    auto ein = einstein_check(a, p, tol);
    j["einstein"] = {{"einstein", ein.einstein}};
    if (ein.einstein) j["einstein"]["lambda"] = detail::scalar_to_json(ein.lambda);

    auto sol = soliton_solve(a, p, tol);
    j["soliton"] = {{"exists", sol.exists}, {"any_c", sol.any_c}};
    if (sol.exists) {
        j["soliton"]["c"] = detail::scalar_to_json(sol.c);
        j["soliton"]["kind"] = soliton_kind_name(sol.kind);
        j["soliton"]["derivation"] = detail::mat_to_json(sol.D);
    }

    auto li = left_invariant_soliton(a, p, tol);
    j["left_invariant_soliton"] = {{"exists", li.exists}, {"solution_dim", li.solution_dim}};
    if (li.exists) {
        j["left_invariant_soliton"]["c"] = detail::scalar_to_json(li.c);
        j["left_invariant_soliton"]["X"] = detail::vec_to_json(li.X);
    }

    j["locally_symmetric"] = locally_symmetric(p, tol);
    j["ricci_parallel"] = ricci_parallel(p, tol);

    auto crit = functional_criticality(a, p, tol);
    j["criticality"] = {{"tau_zero", crit.tau_zero},
                        {"s_critical", crit.s_critical},
                        {"ft_critical", crit.has_t},
                        {"any_t", crit.any_t},
                        {"el_residual_max", detail::scalar_to_json(crit.el_residual_max)}};
    if (crit.has_t && !crit.any_t) j["criticality"]["t"] = detail::scalar_to_json(crit.t);

    if (a.n == 4) {
        auto w = wave_classify(a, p, tol);
        j["wave"] = {{"kind", wave_kind_name(w.kind)}, {"ricci_parallel", w.ricci_parallel}};
        if (w.null_direction) j["wave"]["null_direction"] = detail::vec_to_json(*w.null_direction);
        if (!w.planewave_type.empty()) j["wave"]["planewave_type"] = w.planewave_type;
    }

    if (a.n == 3 && is_unimodular(a, tol)) {
        try {
            auto so = structure_operator_3d(a, tol);
            const char* jt = so.jordan_type == JordanType3::Ia   ? "Ia"
                             : so.jordan_type == JordanType3::Ib ? "Ib"
                             : so.jordan_type == JordanType3::II ? "II"
                                                                 : "III";
            j["structure_operator"] = {{"L", detail::mat_to_json(so.L)},
                                       {"jordan_type", jt},
                                       {"self_adjoint", so.self_adjoint}};
        } catch (const std::invalid_argument&) {
            // normalization needs an irrational root on this backend; omit
        }
    }

    auto fp = fingerprint(a, tol);
    json fj = {{"solvable", fp.solvable},
               {"nilpotent", fp.nilpotent},
               {"unimodular", fp.unimodular},
               {"derived_dims", fp.derived_dims},
               {"lcs_dims", fp.lcs_dims},
               {"class", alg_class_name(fp.klass)},
               {"label", fp.label}};
    if (fp.nilradical_known) fj["nilradical_dim"] = fp.nilradical_dim;
    j["fingerprint"] = fj;
    return j;
}

}  // namespace slab

#endif
