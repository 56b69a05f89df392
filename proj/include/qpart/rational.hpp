#ifndef QPART_RATIONAL_HPP
#define QPART_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qpart/errors.hpp"

namespace qpart {

// Exact arithmetic scalars. cpp_rational keeps gcd(num, den) = 1 and den > 0
// canonically, so structural equality is value equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Serialized form is always "num/den", den > 0, even for integers ("3/1").
inline std::string rat_to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Human-facing form drops the "/1".
inline std::string rat_to_pretty(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rational rat_parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("cannot parse rational '" + s + "': " + e.what());
    }
}

} // namespace qpart

#endif // QPART_RATIONAL_HPP
