#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bipair {

/// Exact rational scalar. Everything in the engine except the CP^1 residual
/// check is computed in this type; there is no floating point anywhere else.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::invalid_argument("to_int: not an integer: " + r.str());
    return numerator(r);
}

inline long to_long(const Rat& r) { return static_cast<long>(to_int(r)); }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat out(1);
    for (long i = 0; i < k; ++i) out *= Rat(n - i, i + 1);
    return out;
}

/// Parses "p", "-p", "p/q" (no whitespace).
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace bipair
