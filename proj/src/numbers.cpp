#include "gx/numbers.hpp"

namespace gx {

std::string rat_to_string(const Rat& x) {
    Int n = rat_num(x), d = rat_den(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

}  // namespace gx
