#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sympl {

// Exact rational scalar. All linear algebra and polynomial arithmetic in this
// library is tolerance-free; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "3/4", "-2", "0". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// "3/4" or "-2" (denominator 1 is omitted).
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

} // namespace sympl
