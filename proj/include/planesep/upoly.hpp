#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "planesep/rational.hpp"

namespace planesep {

/// Dense univariate polynomial over Q, coefficients low degree first,
/// no trailing zeros. The zero polynomial has an empty coefficient list.
struct UPoly {
    std::vector<Rat> c;

    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rat& r) {
        UPoly p;
        if (r != 0) p.c.push_back(r);
        return p;
    }
    static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lc() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    bool operator==(const UPoly& o) const { return c == o.c; }
};

inline UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

inline UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

inline UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

inline UPoly operator*(const UPoly& a, const Rat& s) {
    if (s == 0) return UPoly();
    UPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

inline UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (size_t i = 1; i < p.c.size(); ++i) r.c.push_back(p.c[i] * Rat(static_cast<long>(i)));
    r.trim();
    return r;
}

/// Field division: p = q*quot + rem with deg rem < deg q.
inline std::pair<UPoly, UPoly> udivrem(const UPoly& p, const UPoly& q) {
    if (q.is_zero()) throw degenerate_input_error("udivrem: division by zero polynomial");
    UPoly rem = p, quot;
    if (p.deg() >= q.deg()) quot.c.assign(p.deg() - q.deg() + 1, Rat(0));
    while (!rem.is_zero() && rem.deg() >= q.deg()) {
        int k = rem.deg() - q.deg();
        Rat f = rem.lc() / q.lc();
        quot.c[k] = f;
        for (int i = 0; i <= q.deg(); ++i) rem.c[i + k] -= f * q.c[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

/// Scale by a positive rational so coefficients are coprime integers;
/// preserves signs (used by Sturm chains).
inline UPoly uprimitive_signed(const UPoly& p) {
    if (p.is_zero()) return p;
    Int num_gcd(0), den_lcm(1);
    for (const auto& x : p.c) {
        num_gcd = gcd(num_gcd, Int(abs(numerator(x))));
        den_lcm = lcm(den_lcm, Int(denominator(x)));
    }
    if (num_gcd == 0) return p;
    Rat s = Rat(den_lcm, num_gcd);
    return p * s;
}

/// Primitive integer coefficients with positive leading coefficient.
inline UPoly unormalize(const UPoly& p) {
    UPoly r = uprimitive_signed(p);
    if (!r.is_zero() && r.lc() < 0) r = -r;
    return r;
}

inline UPoly ugcd(const UPoly& a, const UPoly& b) {
    UPoly x = unormalize(a), y = unormalize(b);
    while (!y.is_zero()) {
        UPoly r = udivrem(x, y).second;
        x = y;
        y = uprimitive_signed(r);
    }
    if (x.is_zero()) return x;
    // monic
    return x * (Rat(1) / x.lc());
}

inline bool usquarefree(const UPoly& p) { return ugcd(p, uderiv(p)).deg() <= 0; }

inline UPoly usquarefree_part(const UPoly& p) {
    if (p.is_zero()) throw degenerate_input_error("squarefree part of zero");
    if (p.deg() == 0) return UPoly::constant(Rat(1));
    UPoly g = ugcd(p, uderiv(p));
    if (g.deg() <= 0) return unormalize(p);
    return unormalize(udivrem(p, g).first);
}

/// Yun's algorithm: returns (factor, multiplicity) pairs with p ~ prod f_i^{m_i},
/// each factor squarefree, pairwise coprime, nonconstant.
inline std::vector<std::pair<UPoly, int>> uyun(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (p.deg() <= 0) return out;
    UPoly d = uderiv(p);
    UPoly a = ugcd(p, d);
    UPoly b = udivrem(p, a).first;
    UPoly c = udivrem(d, a).first;
    int i = 1;
    while (b.deg() > 0) {
        UPoly z = c - uderiv(b);
        UPoly f = ugcd(b, z);
        if (f.deg() > 0) out.emplace_back(unormalize(f), i);
        b = udivrem(b, f).first;
        c = udivrem(z, f).first;
        ++i;
    }
    return out;
}

/// Sturm chain of p (signs preserved by positive primitive scaling).
inline std::vector<UPoly> usturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    chain.push_back(uprimitive_signed(p));
    UPoly d = uderiv(p);
    if (!d.is_zero()) chain.push_back(uprimitive_signed(d));
    while (chain.size() >= 2 && chain.back().deg() >= 0) {
        UPoly r = udivrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(uprimitive_signed(-r));
    }
    return chain;
}

inline int usign_variations_at(const std::vector<UPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/// Number of distinct real roots of squarefree-ish p in (a, b]; requires p(a) != 0.
inline int ucount_roots(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
    return usign_variations_at(chain, a) - usign_variations_at(chain, b);
}

/// Cauchy bound: all real roots lie in (-B, B).
inline Rat ucauchy_bound(const UPoly& p) {
    if (p.deg() < 0) throw degenerate_input_error("root bound of zero polynomial");
    Rat m(0);
    for (int i = 0; i < p.deg(); ++i) m = std::max(m, rat_abs(p.c[i] / p.lc()));
    return m + 1;
}

}  // namespace planesep
