#ifndef QCOH_ROOTS_HPP
#define QCOH_ROOTS_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "qcoh/polynomial.hpp"

namespace qcoh {

// Certified enclosure of one distinct real root. lo == hi means the root is
// the exact rational lo; otherwise the root lies in (lo, hi] and no other
// root of the target polynomial does.
struct RootInterval {
    Rational lo, hi;
    int multiplicity = 1;

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return is_exact() ? x == lo : lo < x && x <= hi; }
};

// Sturm chain of the square-free part of p.
class SturmChain {
   public:
    explicit SturmChain(const Polynomial& p) {
        if (p.is_zero()) throw InvalidInputError("Sturm chain of zero polynomial");
        Polynomial f = p.square_free_part();
        chain_.push_back(f);
        Polynomial d = f.derivative();
        if (!d.is_zero()) chain_.push_back(d);
        while (chain_.size() >= 2) {
            const Polynomial& a = chain_[chain_.size() - 2];
            const Polynomial& b = chain_.back();
            Polynomial r = a.divmod(b).second;
            if (r.is_zero()) break;
            chain_.push_back(Rational(-1) * r);
        }
    }

    const Polynomial& square_free() const { return chain_.front(); }

    // Sign variations at x; zero signs are skipped, which yields the usual
    // half-open (a, b] counting semantics.
    int variations(const Rational& x) const {
        int v = 0, last = 0;
        for (const auto& f : chain_) {
            int s = sgn(f.eval(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    // Sign variations at +inf / -inf, read off the leading coefficients.
    int variations_at_infinity(int direction) const {
        int v = 0, last = 0;
        for (const auto& f : chain_) {
            int s = sgn(f.leading());
            if (direction < 0 && f.degree() % 2 == 1) s = -s;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    // Number of distinct real roots in (lo, hi]; an absent bound is infinite.
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
        int vlo = lo ? variations(*lo) : variations_at_infinity(-1);
        int vhi = hi ? variations(*hi) : variations_at_infinity(+1);
        return vlo - vhi;
    }

   private:
    std::vector<Polynomial> chain_;
};

// Distinct real roots of p in (lo, hi]; an absent bound is infinite.
inline int sturm_count(const Polynomial& p, std::optional<Rational> lo = std::nullopt,
                       std::optional<Rational> hi = std::nullopt) {
    if (p.is_zero()) throw InvalidInputError("sturm_count of zero polynomial");
    if (lo && hi && !(*lo < *hi)) throw InvalidInputError("sturm_count needs lo < hi");
    return SturmChain(p).count(lo, hi);
}

// Cauchy bound: all real roots lie in (-B, B).
inline Rational root_bound(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInputError("root bound of zero polynomial");
    Rational b(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational t = abs(p[i] / p.leading());
        if (t > b) b = t;
    }
    return b + 1;
}

// Bisects the enclosure until its width is below eps. The chain must belong
// to a polynomial for which iv contains exactly one distinct root.
inline void refine_interval(const SturmChain& chain, RootInterval& iv, const Rational& eps) {
    if (sgn(eps) <= 0) throw InvalidInputError("refinement width must be positive");
    while (!iv.is_exact() && !(iv.width() < eps)) {
        if (sgn(chain.square_free().eval(iv.hi)) == 0) {
            iv.lo = iv.hi;
            return;
        }
        Rational mid = iv.midpoint();
        if (sgn(chain.square_free().eval(mid)) == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (chain.count(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

inline void refine_interval(const Polynomial& p, RootInterval& iv, const Rational& eps) {
    SturmChain chain(p);
    refine_interval(chain, iv, eps);
}

namespace detail {

inline void isolate_square_free(const SturmChain& chain, const Rational& lo, const Rational& hi,
                                int count, int multiplicity, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        RootInterval iv{lo, hi, multiplicity};
        refine_interval(chain, iv, iv.width() / 4);  // tighten a little up front
        out.push_back(iv);
        return;
    }
    Rational mid = (lo + hi) / 2;
    int left = chain.count(lo, mid);
    isolate_square_free(chain, lo, mid, left, multiplicity, out);
    isolate_square_free(chain, mid, hi, count - left, multiplicity, out);
}

}  // namespace detail

// Pairwise-disjoint isolating intervals for the distinct real roots of p,
// with multiplicities from the Yun square-free decomposition, sorted by root.
inline std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInputError("isolate_real_roots of zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    std::vector<Polynomial> factors = p.square_free_decomposition();
    std::vector<SturmChain> chains;
    std::vector<std::size_t> owner;  // chain index per interval
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        SturmChain chain(factors[i]);
        Rational b = root_bound(factors[i]);
        std::vector<RootInterval> mine;
        detail::isolate_square_free(chain, -b, b, chain.count(-b, b), int(i) + 1, mine);
        for (auto& iv : mine) {
            out.push_back(iv);
            owner.push_back(chains.size());
        }
        chains.push_back(std::move(chain));
    }
    // Roots of distinct Yun factors are distinct; refine with each
    // interval's own chain until the enclosures are pairwise disjoint.
    auto order = [&] {
        std::vector<std::size_t> idx(out.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return out[a].lo < out[b].lo; });
        return idx;
    };
    bool again = true;
    while (again) {
        again = false;
        std::vector<std::size_t> idx = order();
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
            RootInterval& a = out[idx[k]];
            RootInterval& b = out[idx[k + 1]];
            if (a.hi <= b.lo) continue;  // root_a <= a.hi <= b.lo < root_b
            if (!a.is_exact()) refine_interval(chains[owner[idx[k]]], a, a.width() / 4);
            if (!b.is_exact()) refine_interval(chains[owner[idx[k + 1]]], b, b.width() / 4);
            again = true;
        }
    }
    std::vector<std::size_t> idx = order();
    std::vector<RootInterval> sorted;
    sorted.reserve(out.size());
    for (std::size_t i : idx) sorted.push_back(out[i]);
    return sorted;
}

}  // namespace qcoh

#endif
