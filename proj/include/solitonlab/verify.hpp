#ifndef SOLITONLAB_VERIFY_HPP
#define SOLITONLAB_VERIFY_HPP

// Expected-vs-actual checks for catalog instances: every field recorded in
// Expected<S> is compared against a fresh computation. Used by the CLI
// `verify` command and by the acceptance suite.

#include <sstream>

#include "catalog.hpp"
#include "classify.hpp"
#include "fingerprint.hpp"

namespace slab::cat {

namespace detail {

template <class S>
bool veq(const S& a, const S& b, double tol) {
    if constexpr (scalar_traits<S>::exact)
        return a == b;
    else
        return scalar_traits<S>::eq(a, b, tol);
}

}  // namespace detail

// Returns one message per failed check; empty means the instance passes.
template <class S>
std::vector<std::string> check_instance(const FamilyInstance<S>& fi,
                                        double tol = 1e-7) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& m) { bad.push_back(m); };
    auto num = [](const S& x) { return to_string(x); };

    const auto& a = fi.algebra;
    const auto& ex = fi.expected;
    auto vr = validate(a);
    if (!vr.ok()) {
        std::ostringstream os;
        os << "validation failed";
        if (!vr.jacobi)
            os << " (jacobi at " << vr.jacobi_fail[0] + 1 << "," << vr.jacobi_fail[1] + 1 << ","
               << vr.jacobi_fail[2] + 1 << "," << vr.jacobi_fail[3] + 1 << ")";
        fail(os.str());
        return bad;
    }
    auto p = compute_curvature(a);
    if (ex.tau && !detail::veq(p.tau, *ex.tau, tol))
        fail("tau = " + num(p.tau) + ", expected " + num(*ex.tau));
    if (ex.rhonorm2 && !detail::veq(p.rhonorm2, *ex.rhonorm2, tol))
        fail("|rho|^2 = " + num(p.rhonorm2) + ", expected " + num(*ex.rhonorm2));

    auto ein = einstein_check(a, p);
    if (ex.einstein && ein.einstein != *ex.einstein)
        fail(std::string("einstein = ") + (ein.einstein ? "true" : "false"));

    auto sol = soliton_solve(a, p);
    if (ex.soliton_exists && sol.exists != *ex.soliton_exists)
        fail(std::string("soliton exists = ") + (sol.exists ? "true" : "false"));
    if (ex.c) {
        if (!sol.exists)
            fail("no soliton, expected c = " + num(*ex.c));
        else if (!detail::veq(sol.c, *ex.c, tol))
            fail("c = " + num(sol.c) + ", expected " + num(*ex.c));
    }
    if (ex.kind && sol.exists) {
        auto k = detail::kind_of(sol.c);
        if (k != *ex.kind) fail("soliton kind mismatch");
    }
    // c tau = |rho|^2 on every successful soliton
    if (sol.exists && !sol.any_c && !detail::veq(S(sol.c * p.tau), p.rhonorm2, tol))
        fail("c*tau != |rho|^2: " + num(S(sol.c * p.tau)) + " vs " + num(p.rhonorm2));

    if (ex.loc_symmetric && locally_symmetric(p) != *ex.loc_symmetric)
        fail("locally_symmetric mismatch");
    if (ex.ricci_parallel && ricci_parallel(p) != *ex.ricci_parallel)
        fail("ricci_parallel mismatch");

    auto crit = functional_criticality(a, p);
    if (ex.s_critical && crit.s_critical != *ex.s_critical) fail("s_critical mismatch");
    if (ex.t) {
        if (!crit.has_t)
            fail("no critical t, expected " + num(*ex.t));
        else if (!detail::veq(crit.t, *ex.t, tol))
            fail("t = " + num(crit.t) + ", expected " + num(*ex.t));
    }
    if (ex.ft_critical && crit.has_t != *ex.ft_critical) fail("F[t]-criticality mismatch");

    if (a.n == 4) {
        auto w = wave_classify(a, p);
        if (ex.wave && w.kind != *ex.wave)
            fail(std::string("wave = ") + wave_kind_name(w.kind) + ", expected " +
                 wave_kind_name(*ex.wave));
        if (!ex.planewave_type.empty() && w.planewave_type != ex.planewave_type)
            fail("plane-wave type '" + w.planewave_type + "', expected '" + ex.planewave_type +
                 "'");
        if (ex.null_direction_index) {
            if (!w.null_direction)
                fail("no null direction found");
            else {
                const auto& v = *w.null_direction;
                double mx = 0;
                for (std::size_t i = 0; i < 4; ++i)
                    mx = std::max(mx, std::abs(scalar_traits<S>::to_double(v[i])));
                for (std::size_t i = 0; i < 4; ++i)
                    if (i != *ex.null_direction_index &&
                        std::abs(scalar_traits<S>::to_double(v[i])) > 1e-7 * mx)
                        fail("null direction not along u" +
                             std::to_string(*ex.null_direction_index + 1));
            }
        }
        if (ex.klass) {
            auto fp = fingerprint(a);
            if (!matches_label(fp, *ex.klass, ex.klass_params))
                fail("algebra class '" + fp.label + "', expected " + alg_class_name(*ex.klass));
        }
    }

    if (a.n == 3 && is_unimodular(a)) {
        try {
            auto so = structure_operator_3d(a);
            if (!so.self_adjoint) fail("structure operator not self-adjoint on unimodular");
        } catch (const std::invalid_argument&) {
            // normalization needs a square root this backend lacks
        }
    }

    auto li = left_invariant_soliton(a, p);
    if (ex.lirs_exists && li.exists != *ex.lirs_exists)
        fail(std::string("left-invariant soliton exists = ") + (li.exists ? "true" : "false"));
    if (ex.lirs_c) {
        if (!li.exists)
            fail("no left-invariant soliton, expected c = " + num(*ex.lirs_c));
        else if (!detail::veq(li.c, *ex.lirs_c, tol))
            fail("left-invariant soliton c = " + num(li.c) + ", expected " + num(*ex.lirs_c));
    }
    if (ein.einstein && !sol.exists) fail("Einstein metric without a soliton verdict");
    return bad;
}

struct VerifyOutcome {
    std::string instance;       // family id + parameter values
    std::vector<std::string> failures;
    bool skipped = false;       // constraint/surd made the point unreachable
    std::string skip_reason;
};

template <class S>
std::string instance_key(const std::string& id, const std::map<std::string, S>& params) {
    std::string k = id;
    for (const auto& [name, v] : params) k += " " + name + "=" + to_string(v);
    return k;
}

// Runs every grid point of one family.
template <class S>
std::vector<VerifyOutcome> verify_family(const FamilySpec<S>& f, double tol = 1e-7) {
    std::vector<VerifyOutcome> out;
    for (const auto& gp : f.grid) {
        VerifyOutcome o;
        o.instance = instance_key(f.id, gp);
        try {
            auto fi = instantiate<S>(f.id, gp);
            o.failures = check_instance(fi, tol);
        } catch (const std::invalid_argument& e) {
            o.skipped = true;
            o.skip_reason = e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace slab::cat

#endif
