#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "planesep/upoly.hpp"

namespace planesep {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed by exponent vectors (one entry per variable, lex order
/// with vars[0] most significant); zero coefficients are never stored.
struct Poly {
    std::vector<std::string> vars;
    std::map<std::vector<int>, Rat> terms;

    Poly() = default;
    explicit Poly(std::vector<std::string> vs) : vars(std::move(vs)) {}

    static Poly constant(const std::vector<std::string>& vs, const Rat& r) {
        Poly p(vs);
        if (r != 0) p.terms.emplace(std::vector<int>(vs.size(), 0), r);
        return p;
    }

    static Poly variable(const std::vector<std::string>& vs, const std::string& name) {
        Poly p(vs);
        std::vector<int> e(vs.size(), 0);
        for (size_t i = 0; i < vs.size(); ++i)
            if (vs[i] == name) {
                e[i] = 1;
                p.terms.emplace(std::move(e), Rat(1));
                return p;
            }
        throw arity_error("unknown variable " + name);
    }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw arity_error("unknown variable " + name);
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        if (terms.empty()) return true;
        if (terms.size() > 1) return false;
        for (int e : terms.begin()->first)
            if (e) return false;
        return true;
    }

    Rat constant_value() const {
        if (terms.empty()) return Rat(0);
        return terms.begin()->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int deg_wrt(int v) const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e[v]);
        return d;
    }

    void add_term(std::vector<int> e, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    /// Leading term in the canonical (lex) order.
    std::pair<std::vector<int>, Rat> leading() const {
        if (terms.empty()) throw degenerate_input_error("leading term of zero");
        auto it = terms.rbegin();
        return {it->first, it->second};
    }

    Rat eval(const std::vector<Rat>& pt) const {
        if (pt.size() != vars.size()) throw arity_error("eval: point arity mismatch");
        Rat acc(0);
        for (const auto& [e, c] : terms) {
            Rat t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) t *= rat_pow(pt[i], static_cast<unsigned>(e[i]));
            acc += t;
        }
        return acc;
    }

    bool operator==(const Poly& o) const { return vars == o.vars && terms == o.terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const {
        if (terms != o.terms) return terms < o.terms;
        return vars < o.vars;
    }
};

inline void check_context(const Poly& a, const Poly& b) {
    if (a.vars != b.vars) throw arity_error("operands do not share a variable context");
}

inline Poly operator+(const Poly& a, const Poly& b) {
    check_context(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly operator*(const Poly& a, const Poly& b) {
    check_context(a, b);
    Poly r(a.vars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

inline Poly operator*(const Poly& a, const Rat& s) {
    Poly r(a.vars);
    if (s == 0) return r;
    r = a;
    for (auto& [e, c] : r.terms) c *= s;
    return r;
}

inline Poly poly_pow(const Poly& a, int n) {
    Poly r = Poly::constant(a.vars, Rat(1));
    Poly b = a;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

inline Poly derivative(const Poly& p, int v) {
    Poly r(p.vars);
    for (const auto& [e, c] : p.terms) {
        if (e[v] == 0) continue;
        std::vector<int> e2 = e;
        e2[v] -= 1;
        r.add_term(std::move(e2), c * Rat(e[v]));
    }
    return r;
}

inline Poly derivative(const Poly& p, const std::string& var) { return derivative(p, p.var_index(var)); }

/// Exact division; throws nondivisible_error when q does not divide p.
inline Poly exact_divide(const Poly& p, const Poly& q) {
    check_context(p, q);
    if (q.is_zero()) throw nondivisible_error("division by zero polynomial");
    Poly rem = p, quot(p.vars);
    auto [lq, cq] = q.leading();
    while (!rem.is_zero()) {
        auto [lr, cr] = rem.leading();
        std::vector<int> e(lr.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = lr[i] - lq[i];
            if (e[i] < 0) throw nondivisible_error("exact_divide: not divisible");
        }
        Rat f = cr / cq;
        Poly t(p.vars);
        t.terms.emplace(e, f);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

/// Substitute `value` (same context) for variable v.
inline Poly substitute(const Poly& p, int v, const Poly& value) {
    check_context(p, value);
    Poly r(p.vars);
    // group by exponent of v
    std::map<int, Poly> by_exp;
    for (const auto& [e, c] : p.terms) {
        std::vector<int> e2 = e;
        int k = e2[v];
        e2[v] = 0;
        auto it = by_exp.find(k);
        if (it == by_exp.end()) it = by_exp.emplace(k, Poly(p.vars)).first;
        it->second.add_term(std::move(e2), c);
    }
    Poly vp = Poly::constant(p.vars, Rat(1));
    int last = 0;
    for (auto& [k, coeff] : by_exp) {
        for (; last < k; ++last) vp = vp * value;
        r = r + coeff * vp;
    }
    return r;
}

inline Poly substitute(const Poly& p, const std::string& var, const Poly& value) {
    return substitute(p, p.var_index(var), value);
}

/// Coefficients of p viewed as a polynomial in variable v; entry k is a Poly
/// (same context, with v-degree zero) multiplying v^k.
inline std::vector<Poly> coeffs_wrt(const Poly& p, int v) {
    std::vector<Poly> out(static_cast<size_t>(std::max(0, p.deg_wrt(v) + 1)), Poly(p.vars));
    for (const auto& [e, c] : p.terms) {
        std::vector<int> e2 = e;
        int k = e2[v];
        e2[v] = 0;
        out[k].add_term(std::move(e2), c);
    }
    return out;
}

inline Poly from_coeffs_wrt(const std::vector<Poly>& cs, int v, const std::vector<std::string>& vars) {
    Poly r(vars);
    for (size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms) {
            std::vector<int> e2 = e;
            e2[v] += static_cast<int>(k);
            r.add_term(std::move(e2), c);
        }
    }
    return r;
}

/// Convert to a dense univariate polynomial in variable v; all other
/// variables must be absent.
inline UPoly to_upoly(const Poly& p, int v) {
    UPoly u;
    u.c.assign(static_cast<size_t>(std::max(0, p.deg_wrt(v) + 1)), Rat(0));
    for (const auto& [e, c] : p.terms) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != v && e[i] != 0)
                throw arity_error("to_upoly: polynomial is not univariate in the requested variable");
        u.c[e[v]] = c;
    }
    u.trim();
    return u;
}

inline Poly from_upoly(const UPoly& u, int v, const std::vector<std::string>& vars) {
    Poly r(vars);
    for (size_t k = 0; k < u.c.size(); ++k) {
        if (u.c[k] == 0) continue;
        std::vector<int> e(vars.size(), 0);
        e[v] = static_cast<int>(k);
        r.add_term(std::move(e), u.c[k]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// gcd / squarefree / resultant
// ---------------------------------------------------------------------------

/// Scale to coprime integer coefficients, sign preserved.
inline Poly primitive_signed(const Poly& p) {
    if (p.is_zero()) return p;
    Int num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : p.terms) {
        num_gcd = gcd(num_gcd, Int(abs(numerator(c))));
        den_lcm = lcm(den_lcm, Int(denominator(c)));
    }
    return p * Rat(den_lcm, num_gcd);
}

/// Primitive integer coefficients, positive leading (lex) coefficient.
inline Poly normalize_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Poly r = primitive_signed(p);
    if (r.leading().second < 0) r = -r;
    return r;
}

/// Leading-coefficient-1 normalization in the canonical term order.
inline Poly normalize_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.leading().second);
}

inline std::vector<int> effective_vars(const Poly& p) {
    std::vector<int> out;
    for (size_t v = 0; v < p.vars.size(); ++v)
        if (p.deg_wrt(static_cast<int>(v)) > 0) out.push_back(static_cast<int>(v));
    return out;
}

/// Pseudo-remainder of a by b with respect to variable v.
inline Poly prem(const Poly& a, const Poly& b, int v) {
    int db = b.deg_wrt(v);
    if (db < 0) throw degenerate_input_error("prem: zero divisor");
    Poly lb = coeffs_wrt(b, v)[db];
    Poly r = a;
    int guard = a.deg_wrt(v) - db + 1;
    while (!r.is_zero() && r.deg_wrt(v) >= db && guard-- > 0) {
        int dr = r.deg_wrt(v);
        Poly lr = coeffs_wrt(r, v)[dr];
        std::vector<int> shift(a.vars.size(), 0);
        shift[v] = dr - db;
        Poly m(a.vars);
        m.terms.emplace(shift, Rat(1));
        r = r * lb - b * (m * lr);
    }
    return r;
}

Poly pgcd(const Poly& a, const Poly& b);  // forward

/// Content of p with respect to variable v: gcd of its v-coefficients.
inline Poly content_wrt(const Poly& p, int v) {
    Poly g(p.vars);
    for (const auto& c : coeffs_wrt(p, v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : pgcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

/// Monic-normalized multivariate gcd (primitive PRS).
inline Poly pgcd(const Poly& a, const Poly& b) {
    check_context(a, b);
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars, Rat(1));
    auto ea = effective_vars(a), eb = effective_vars(b);
    // main variable: last variable effective in either operand
    int v = std::max(ea.back(), eb.back());
    if (a.deg_wrt(v) == 0 || b.deg_wrt(v) == 0) {
        // v appears in only one operand; gcd divides the contents
        Poly ca = a.deg_wrt(v) == 0 ? a : content_wrt(a, v);
        Poly cb = b.deg_wrt(v) == 0 ? b : content_wrt(b, v);
        return pgcd(ca, cb);
    }
    if (ea.size() == 1 && eb.size() == 1 && ea[0] == v && eb[0] == v) {
        UPoly g = ugcd(to_upoly(a, v), to_upoly(b, v));
        return normalize_monic(from_upoly(g, v, a.vars));
    }
    Poly ca = content_wrt(a, v), cb = content_wrt(b, v);
    Poly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    Poly gc = pgcd(ca, cb);
    if (pa.deg_wrt(v) < pb.deg_wrt(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else if (r.deg_wrt(v) == 0) {
            // nonzero remainder free of v: the primitive parts are coprime in v
            pa = Poly::constant(a.vars, Rat(1));
            pb = Poly(a.vars);
        } else {
            pb = exact_divide(r, content_wrt(r, v));
        }
    }
    if (!pa.is_constant()) pa = exact_divide(pa, content_wrt(pa, v));
    return normalize_monic(gc * pa);
}

/// Product of the distinct irreducible factors of p (normalized primitive).
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw degenerate_input_error("squarefree part of zero polynomial");
    if (p.is_constant()) return Poly::constant(p.vars, Rat(1));
    Poly d(p.vars);
    for (int v : effective_vars(p)) {
        Poly pv = derivative(p, v);
        d = d.is_zero() ? pv : pgcd(d, pv);
    }
    Poly g = pgcd(p, d);
    if (g.is_constant()) return normalize_primitive(p);
    return normalize_primitive(exact_divide(normalize_monic(p), g));
}

inline bool is_squarefree(const Poly& p) {
    if (p.is_zero() || p.is_constant()) return false;
    Poly d(p.vars);
    for (int v : effective_vars(p)) {
        Poly pv = derivative(p, v);
        d = d.is_zero() ? pv : pgcd(d, pv);
    }
    return pgcd(p, d).is_constant();
}

/// Classical resultant eliminating variable v (Sylvester determinant via
/// fraction-free Bareiss elimination).
inline Poly resultant(const Poly& p, const Poly& q, int v) {
    check_context(p, q);
    if (p.is_zero() || q.is_zero()) throw degenerate_input_error("resultant of zero polynomial");
    int m = p.deg_wrt(v), n = q.deg_wrt(v);
    if (m <= 0 && n <= 0) throw arity_error("resultant: variable absent from both inputs");
    auto cp = coeffs_wrt(p, v);
    auto cq = coeffs_wrt(q, v);
    if (m == 0) return poly_pow(cp[0], n);
    if (n == 0) return poly_pow(cq[0], m);
    int N = m + n;
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(p.vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = cp[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = cq[n - j];
    int sgn = 1;
    Poly prev = Poly::constant(p.vars, Rat(1));
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int r = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) {
                    r = i;
                    break;
                }
            if (r < 0) return Poly(p.vars);  // singular: resultant is 0
            std::swap(M[k], M[r]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                Poly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = t.is_zero() ? t : exact_divide(t, prev);
            }
            M[i][k] = Poly(p.vars);
        }
        prev = M[k][k];
    }
    Poly det = M[N - 1][N - 1];
    return sgn < 0 ? -det : det;
}

inline Poly resultant(const Poly& p, const Poly& q, const std::string& var) {
    return resultant(p, q, p.var_index(var));
}

inline Poly discriminant_wrt(const Poly& p, int v) { return resultant(p, derivative(p, v), v); }

/// Homogenize with a fresh variable appended to the context.
inline Poly homogenize(const Poly& p, const std::string& wname) {
    std::vector<std::string> vs = p.vars;
    vs.push_back(wname);
    Poly r(vs);
    int d = std::max(0, p.total_degree());
    for (const auto& [e, c] : p.terms) {
        std::vector<int> e2 = e;
        int s = 0;
        for (int x : e) s += x;
        e2.push_back(d - s);
        r.add_term(std::move(e2), c);
    }
    return r;
}

/// Substitute 1 for the named variable and drop it from the context.
inline Poly dehomogenize(const Poly& p, const std::string& wname) {
    int v = p.var_index(wname);
    std::vector<std::string> vs;
    for (size_t i = 0; i < p.vars.size(); ++i)
        if (static_cast<int>(i) != v) vs.push_back(p.vars[i]);
    Poly r(vs);
    for (const auto& [e, c] : p.terms) {
        std::vector<int> e2;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != v) e2.push_back(e[i]);
        r.add_term(std::move(e2), c);
    }
    return r;
}

/// Reinterpret on a fresh variable list of the same arity.
inline Poly rename_vars(const Poly& p, const std::vector<std::string>& vs) {
    if (vs.size() != p.vars.size()) throw arity_error("rename_vars: arity mismatch");
    Poly r(vs);
    r.terms = p.terms;
    return r;
}

inline std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest lex term first
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        for (int x : e)
            if (x) any_var = true;
        if (!any_var || a != 1) os << rat_str(a);
        bool star = !any_var || a != 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (star) os << "*";
            os << p.vars[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

}  // namespace planesep
