#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planesep/upoly.hpp"

namespace planesep {

/// Interval evaluation of p over [lo, hi] by naive monomial bounds.
inline std::pair<Rat, Rat> uival_eval(const UPoly& p, const Rat& lo, const Rat& hi) {
    Rat rl(0), rh(0), pl(1), ph(1);  // bounds of x^i over the interval
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i > 0) {
            Rat a = pl * lo, b = pl * hi, c = ph * lo, d = ph * hi;
            pl = std::min(std::min(a, b), std::min(c, d));
            ph = std::max(std::max(a, b), std::max(c, d));
        }
        const Rat& k = p.c[i];
        if (k >= 0) {
            rl += k * pl;
            rh += k * ph;
        } else {
            rl += k * ph;
            rh += k * pl;
        }
    }
    return {rl, rh};
}

/// One real algebraic number: the unique root of the squarefree polynomial
/// `q` in [lo, hi]. If lo == hi the number is rational and q may be ignored.
/// Endpoints are never roots unless lo == hi.
class RealAlg {
  public:
    RealAlg(UPoly q, Rat lo, Rat hi) : q_(unormalize(q)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    static RealAlg rational(const Rat& r) { return RealAlg(UPoly({-r, Rat(1)}), r, r); }

    const UPoly& poly() const { return q_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }

    /// Halve the interval, keeping the invariant.
    void refine() const {
        if (is_exact()) return;
        Rat m = (lo_ + hi_) / 2;
        if (q_.eval(m) == 0) {
            lo_ = hi_ = m;
            return;
        }
        if (sign(q_.eval(lo_)) != sign(q_.eval(m)))
            hi_ = m;
        else
            lo_ = m;
    }

    void refine_below(const Rat& width) const {
        while (!is_exact() && hi_ - lo_ >= width) refine();
    }

    /// Exact sign of p at this number.
    int sign_of(const UPoly& p) const {
        if (p.is_zero()) return 0;
        if (is_exact()) return sign(p.eval(lo_));
        UPoly g = ugcd(p, q_);
        if (g.deg() >= 1) {
            // The only root of q_ in the interval is this number, so g has a
            // root there iff p vanishes here.
            auto chain = usturm_chain(g);
            if (ucount_roots(chain, lo_, hi_) > 0) return 0;
        }
        for (;;) {
            auto [a, b] = uival_eval(p, lo_, hi_);
            if (a > 0) return 1;
            if (b < 0) return -1;
            refine();
            if (is_exact()) return sign(p.eval(lo_));
        }
    }

    /// If this number is rational, return it.
    std::optional<Rat> to_rational() const {
        if (is_exact()) return lo_;
        if (q_.deg() == 1) {
            Rat r = -q_.c[0] / q_.c[1];
            lo_ = hi_ = r;
            return r;
        }
        // A rational root of the primitive integer polynomial q_ has
        // denominator dividing lc(q_). Shrink until at most one rational with
        // such a denominator fits, then test the simplest candidate.
        Rat d = rat_abs(q_.lc());
        Rat width = Rat(1) / (d * d);
        refine_below(width);
        if (is_exact()) return lo_;
        Rat cand = simplest_in(lo_, hi_);
        if (denominator(cand) <= numerator(d) && q_.eval(cand) == 0) {
            lo_ = hi_ = cand;
            return cand;
        }
        return std::nullopt;
    }

    int compare(const Rat& r) const {
        if (is_exact()) return lo_ < r ? -1 : (lo_ == r ? 0 : 1);
        // sign of (this - r) = sign of q evaluated appropriately: use sign_of on (x - r)
        return sign_of(UPoly({-r, Rat(1)}));
    }

    int compare(const RealAlg& o) const {
        for (;;) {
            if (hi_ < o.lo_) return -1;
            if (o.hi_ < lo_) return 1;
            if (is_exact() && o.is_exact()) return lo_ < o.lo_ ? -1 : (lo_ == o.lo_ ? 0 : 1);
            if (is_exact()) return -o.compare(lo_);
            if (o.is_exact()) return compare(o.lo_);
            // Overlapping open intervals: equal iff gcd has a root in the overlap.
            UPoly g = ugcd(q_, o.q_);
            if (g.deg() >= 1) {
                Rat a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
                auto chain = usturm_chain(g);
                // Endpoints of the overlap are endpoints of one of the two
                // isolating intervals, hence not roots of q_ or o.q_; g divides
                // both so they are not roots of g either.
                if (a < b && ucount_roots(chain, a, b) > 0) {
                    // That root is simultaneously in both isolating intervals,
                    // so it is both numbers.
                    return 0;
                }
            }
            refine();
            o.refine();
        }
    }

    double to_double() const {
        refine_below(Rat(1, 1 << 24));
        return (lo_.convert_to<double>() + hi_.convert_to<double>()) / 2;
    }

  private:
    UPoly q_;
    mutable Rat lo_, hi_;
};

/// Real roots of p with multiplicities, ordered increasingly.
struct RootWithMult {
    RealAlg root;
    int multiplicity;
};

/// Recursive bisection; invariant: p(a) != 0 and p(b) != 0, so the Sturm count
/// over (a, b] equals the count over the open interval.
inline void uisolate_squarefree_rec(const UPoly& p, const std::vector<UPoly>& chain, const Rat& a,
                                    const Rat& b, std::vector<RealAlg>& out) {
    int n = ucount_roots(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(p, a, b);
        return;
    }
    // Split at a non-root point: among deg+1 candidates at least one misses
    // every root.
    Rat m;
    for (int k = 1; k <= p.deg() + 1; ++k) {
        m = a + (b - a) * Rat(k, p.deg() + 2);
        if (p.eval(m) != 0) break;
    }
    uisolate_squarefree_rec(p, chain, a, m, out);
    uisolate_squarefree_rec(p, chain, m, b, out);
}

/// Isolating intervals for the distinct real roots of squarefree p, increasing.
inline std::vector<RealAlg> uisolate_squarefree(const UPoly& p) {
    std::vector<RealAlg> out;
    if (p.deg() <= 0) return out;
    Rat B = ucauchy_bound(p) + 1;
    auto chain = usturm_chain(p);
    uisolate_squarefree_rec(p, chain, -B, B, out);
    return out;
}

/// Distinct real roots of arbitrary nonzero p, with multiplicities, increasing.
inline std::vector<RootWithMult> uisolate_roots(const UPoly& p) {
    if (p.is_zero()) throw degenerate_input_error("root isolation of zero polynomial");
    std::vector<RootWithMult> out;
    for (const auto& [f, m] : uyun(p)) {
        for (auto& r : uisolate_squarefree(f)) out.push_back({r, m});
    }
    std::sort(out.begin(), out.end(),
              [](const RootWithMult& a, const RootWithMult& b) { return a.root.compare(b.root) < 0; });
    // Make isolating intervals pairwise disjoint (roots of distinct Yun factors
    // are distinct, so refinement separates them).
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (!(out[i].root.hi() < out[i + 1].root.lo())) {
            out[i].root.refine();
            out[i + 1].root.refine();
        }
    }
    return out;
}

/// Merge root lists of several polynomials into one increasing list of
/// distinct numbers with disjoint intervals.
inline std::vector<RealAlg> merge_roots(const std::vector<std::vector<RealAlg>>& lists) {
    std::vector<RealAlg> all;
    for (const auto& l : lists)
        for (const auto& r : l) all.push_back(r);
    std::sort(all.begin(), all.end(), [](const RealAlg& a, const RealAlg& b) { return a.compare(b) < 0; });
    std::vector<RealAlg> out;
    for (const auto& r : all) {
        if (out.empty() || out.back().compare(r) != 0) out.push_back(r);
    }
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (!(out[i].hi() < out[i + 1].lo())) {
            out[i].refine();
            out[i + 1].refine();
        }
    }
    return out;
}

}  // namespace planesep
