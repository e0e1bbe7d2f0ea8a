#pragma once

#include <gmpxx.h>

#include <string>

#include "coordcheck/errors.hpp"

namespace coordcheck {

// Exact rational number. GMP keeps the value canonical: reduced to lowest
// terms, denominator > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b" with optional sign.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw Error("malformed rational literal: " + text);
    if (q.get_den() == 0) throw Error("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

// Canonical text: "a" when the denominator is 1, otherwise "a/b".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace coordcheck
