#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gx {

// Exact arithmetic throughout: unbounded integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Floor division with sign convention floor(a/b), b > 0 expected by callers.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - b * floor_div(a, b); }

// Canonical representative of x + Z in [0, 1).
inline Rat mod1(const Rat& x) {
    Int n = rat_num(x), d = rat_den(x);
    return Rat(mod_floor(n, d), d);
}

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

std::string rat_to_string(const Rat& x);

// Accepts "p/q" or a plain integer string; throws std::invalid_argument otherwise.
Rat parse_rational(const std::string& s);

}  // namespace gx
