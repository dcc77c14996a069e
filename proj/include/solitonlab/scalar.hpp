#ifndef SOLITONLAB_SCALAR_HPP
#define SOLITONLAB_SCALAR_HPP

// Scalar backends. Everything downstream is templated on S, which is either
// Rat (exact rational arithmetic, exact equality) or double (tolerance-based
// equality). Comparisons go through scalar_traits so generic code never
// writes a == b directly.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace slab {

using Rat = boost::multiprecision::cpp_rational;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;
    static bool eq(const Rat& a, const Rat& b, double /*tol*/ = 0) { return a == b; }
    static bool is_zero(const Rat& a, double /*tol*/ = 0) { return a == 0; }
    static double to_double(const Rat& a) { return a.template convert_to<double>(); }
    static Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }
    static double default_tol() { return 0.0; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double default_tol() { return 1e-9; }
    // |a-b| <= tol*max(1,|a|,|b|)
    static bool eq(double a, double b, double tol = default_tol()) {
        return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
    }
    static bool is_zero(double a, double tol = default_tol()) { return eq(a, 0.0, tol); }
    static double to_double(double a) { return a; }
    static double abs(double a) { return std::fabs(a); }
};

// Parses "p/q", "p", or a decimal literal into the scalar type.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
                s.find('E') != std::string::npos)
                throw std::invalid_argument("decimal literal in rational context: " + s);
            return Rat(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

inline std::string to_string(const Rat& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

inline std::string to_string(double a) {
    std::ostringstream os;
    os.precision(17);
    os << a;
    return os.str();
}

}  // namespace slab

#endif
