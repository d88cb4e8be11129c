#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>

#include "planesep/errors.hpp"

namespace planesep {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Parse "p", "-p", or "p/q" into a canonical rational (lowest terms, q > 0).
/// The mpq string constructor does not canonicalize, so we go through integers.
inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);  // two-argument ctor canonicalizes
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// The rational with smallest denominator in the closed interval [a, b]
/// (ties by smallest numerator magnitude), via the Stern-Brocot descent.
inline Rat simplest_in(const Rat& a, const Rat& b) {
    if (a > b) throw error("simplest_in: empty interval");
    if (a <= 0 && 0 <= b) return Rat(0);
    if (a > 0) {
        Int ca = rat_ceil(a);
        if (Rat(ca) <= b) return Rat(ca);
        Int fl = rat_floor(a);  // fl < a <= b < fl+1
        Rat sub = simplest_in(Rat(1) / (b - Rat(fl)), Rat(1) / (a - Rat(fl)));
        return Rat(fl) + Rat(1) / sub;
    }
    return -simplest_in(-b, -a);
}

/// A rational strictly between a and b with small denominator.
inline Rat simplest_between(const Rat& a, const Rat& b) {
    if (!(a < b)) throw error("simplest_between: empty interval");
    // Shrink to an open-interval-safe closed subinterval.
    Rat lo = a + (b - a) / 4;
    Rat hi = b - (b - a) / 4;
    return simplest_in(lo, hi);
}

}  // namespace planesep
