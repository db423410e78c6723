#ifndef QCOH_SPECTRA_HPP
#define QCOH_SPECTRA_HPP

#include <gmp.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "qcoh/matrix.hpp"
#include "qcoh/quadext.hpp"
#include "qcoh/roots.hpp"

namespace qcoh {

enum class VerdictStatus { certified_true, certified_false, inconclusive };

inline std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::certified_true: return "certified_true";
        case VerdictStatus::certified_false: return "certified_false";
        default: return "inconclusive";
    }
}

struct EvidenceItem {
    std::string kind;    // e.g. "positive-power", "sturm-count", "exact-sign"
    std::string detail;  // human-readable payload
    bool exact = true;   // false for floating-point estimates
};

// Three-valued certified outcome. Certified statuses always carry at least
// one exact evidence item; inconclusive carries the reason.
struct SpectralVerdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    std::vector<EvidenceItem> evidence;

    void add(std::string kind, std::string detail, bool exact = true) {
        evidence.push_back({std::move(kind), std::move(detail), exact});
    }
    bool has_exact_evidence() const {
        for (const auto& e : evidence)
            if (e.exact) return true;
        return false;
    }
};

// How a RadiusBound was certified.
enum class RadiusProvenance {
    perron_odd_power,  // some odd power is entrywise positive
    binomial,          // char poly is x^m (x^n - c), all top-modulus roots known
    all_real,          // every eigenvalue is real
    uncertified        // only a coarse enclosure is known
};

struct RadiusBound {
    std::optional<QuadExt> exact;  // present when the radius lies in Q[sqrt(d)]
    RootInterval interval;         // always contains the spectral radius
    bool is_simple = false;
    RadiusProvenance provenance = RadiusProvenance::uncertified;
    int perron_power = 0;  // the odd k for the Perron path

    bool certified() const { return provenance != RadiusProvenance::uncertified; }
};

namespace detail {

// Decomposes p as x^m * (x^n - c) with n >= 1; empty otherwise.
struct Binomial {
    int zero_multiplicity;
    int n;
    Rational c;
};

inline std::optional<Binomial> as_shifted_binomial(const Polynomial& p) {
    int m = 0;
    while (m <= p.degree() && p[m] == 0) ++m;
    if (m > p.degree() || p.degree() == m) return std::nullopt;
    // remaining coefficients must be exactly -c at x^m and 1 at x^deg
    for (int i = m + 1; i < p.degree(); ++i)
        if (p[i] != 0) return std::nullopt;
    if (p.leading() != 1) return std::nullopt;
    return Binomial{m, p.degree() - m, -p[m]};
}

// c^(1/n) as an element of a quadratic field, when it is one.
inline std::optional<QuadExt> nth_root_quadext(const Rational& c, int n) {
    if (sgn(c) <= 0 || n < 1) return std::nullopt;
    if (n == 1) return QuadExt(c);
    Integer num_root, den_root;
    if (mpz_root(num_root.get_mpz_t(), c.get_num().get_mpz_t(), n) != 0 &&
        mpz_root(den_root.get_mpz_t(), c.get_den().get_mpz_t(), n) != 0)
        return QuadExt(Rational(num_root) / Rational(den_root));
    if (n % 2 == 0) {
        // c^(1/n) = (c^(2/n))^(1/2); recurse on the half exponent.
        auto half = nth_root_quadext(c, n / 2);
        if (half && half->is_rational()) return sqrt_rational(half->a());
    }
    return std::nullopt;
}

inline double interval_mid_double(const RootInterval& iv) { return iv.midpoint().get_d(); }

}  // namespace detail

// Certified localization of the spectral radius of m.
//
// Perron path: an odd entrywise-positive power k certifies that the radius
// is the largest real root of char_poly(m), simple, and strictly dominant.
// Binomial path: char polys of the form x^m (x^n - c) have every nonzero
// eigenvalue of modulus c^(1/n).
// All-real path: when real-root multiplicities exhaust the degree, the
// radius is the largest of |r_min|, r_max.
inline RadiusBound spectral_radius(const ExactMatrix& m, int k_max = 64) {
    if (!m.is_square()) throw DimensionError("spectral_radius requires a square matrix");
    Polynomial p = char_poly(m);
    std::vector<RootInterval> roots = isolate_real_roots(p);
    RadiusBound rb;

    auto attach_exact_if_point = [&](const RootInterval& iv) {
        if (iv.is_exact()) rb.exact = QuadExt(iv.lo);
    };

    // Tighten a genuine isolating interval of p well past any separation
    // arising from the shipped degree-9 integer polynomials.
    auto tighten = [&](RootInterval& iv) {
        if (!iv.is_exact()) refine_interval(p, iv, Rational(1) / (Integer(1) << 48));
    };

    if (auto k = min_positive_power(m, k_max, /*odd_only=*/true)) {
        rb.interval = roots.back();  // positive matrix powers force a real top root
        rb.is_simple = rb.interval.multiplicity == 1;
        rb.provenance = RadiusProvenance::perron_odd_power;
        rb.perron_power = *k;
        tighten(rb.interval);
        attach_exact_if_point(rb.interval);
        return rb;
    }

    if (auto bin = detail::as_shifted_binomial(p); bin && sgn(bin->c) > 0) {
        // Every nonzero eigenvalue solves x^n = c, so all have modulus
        // c^(1/n), which is also the largest (simple) real root.
        for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
            if (it->is_exact() && it->lo == 0) continue;
            if (sgn(it->lo) >= 0 || sgn(it->hi) > 0) {
                rb.interval = *it;
                break;
            }
        }
        rb.is_simple = true;
        rb.provenance = RadiusProvenance::binomial;
        tighten(rb.interval);
        if (auto ex = detail::nth_root_quadext(bin->c, bin->n)) rb.exact = *ex;
        return rb;
    }

    int real_with_mult = 0;
    for (const auto& r : roots) real_with_mult += r.multiplicity;
    if (real_with_mult == p.degree() && !roots.empty()) {
        // All eigenvalues real: radius is max(|lowest|, highest).
        SturmChain chain(p);
        RootInterval lo = roots.front(), hi = roots.back();
        // Refine until the moduli are comparable or both ends are exact.
        for (int budget = 0; budget < 256; ++budget) {
            Rational lo_abs_min = std::min(abs(lo.lo), abs(lo.hi));
            Rational lo_abs_max = std::max(abs(lo.lo), abs(lo.hi));
            Rational hi_abs_min = std::min(abs(hi.lo), abs(hi.hi));
            Rational hi_abs_max = std::max(abs(hi.lo), abs(hi.hi));
            if (hi_abs_min >= lo_abs_max || (hi.is_exact() && lo.is_exact())) break;
            if (lo_abs_min >= hi_abs_max) break;
            if (!lo.is_exact()) refine_interval(chain, lo, lo.width() / 4);
            if (!hi.is_exact()) refine_interval(chain, hi, hi.width() / 4);
        }
        const RootInterval* top = &hi;
        int mult = hi.multiplicity;
        if (lo.is_exact() && hi.is_exact()) {
            if (abs(lo.lo) > abs(hi.lo)) {
                top = &lo;
                mult = lo.multiplicity;
            } else if (-lo.lo == hi.lo) {
                mult = std::max(lo.multiplicity, hi.multiplicity);
            }
        } else if (std::min(abs(lo.lo), abs(lo.hi)) > std::max(abs(hi.lo), abs(hi.hi))) {
            top = &lo;
            mult = lo.multiplicity;
        }
        if (top == &lo) {
            rb.interval = RootInterval{abs(lo.hi), abs(lo.lo), mult};
            if (lo.is_exact()) rb.interval = RootInterval{abs(lo.lo), abs(lo.lo), mult};
        } else {
            rb.interval = *top;
            rb.interval.multiplicity = mult;
        }
        rb.is_simple = mult == 1;
        rb.provenance = RadiusProvenance::all_real;
        attach_exact_if_point(rb.interval);
        return rb;
    }

    // No certification path applies: coarse Cauchy enclosure only.
    rb.interval = RootInterval{Rational(0), root_bound(p), 1};
    rb.is_simple = false;
    rb.provenance = RadiusProvenance::uncertified;
    return rb;
}

// Conjecture O certification.
//
// True path: the smallest odd k <= k_max with m^k entrywise positive makes
// Perron's theorem apply to m^k; exactly one eigenvalue lambda of m has
// lambda^k = rho(m^k), it is real (conjugates come in pairs) and positive
// (k odd), hence rho(m) is a simple strictly dominant eigenvalue — both
// parts of the conjecture, for any Fano index.
// Binomial path: char poly x^m (x^n - c) with c > 0 has the n-th roots of c
// as its top-modulus eigenvalues; part (2) holds iff n divides the index.
// False path: no nonnegative real eigenvalue at all while the spectrum is
// nonzero means rho is not in the spectrum.
inline SpectralVerdict check_conjecture_o(const ExactMatrix& m, int fano_index, int k_max = 64) {
    if (!m.is_square()) throw DimensionError("check_conjecture_o requires a square matrix");
    if (fano_index < 1) throw InvalidInputError("Fano index must be >= 1");
    SpectralVerdict v;
    Polynomial p = char_poly(m);

    if (auto k = min_positive_power(m, k_max, /*odd_only=*/true)) {
        v.status = VerdictStatus::certified_true;
        v.add("positive-power", "M^" + std::to_string(*k) + " is entrywise positive, k odd");
        std::vector<RootInterval> roots = isolate_real_roots(p);
        const RootInterval& top = roots.back();
        v.add("root-isolation", "largest real root in [" + format_rational(top.lo) + ", " +
                                    format_rational(top.hi) + "], multiplicity " +
                                    std::to_string(top.multiplicity));
        v.add("numeric-estimate", "rho ~ " + std::to_string(detail::interval_mid_double(top)),
              /*exact=*/false);
        return v;
    }

    if (auto bin = detail::as_shifted_binomial(p); bin && sgn(bin->c) > 0) {
        v.add("exact-factorization", "char poly = x^" + std::to_string(bin->zero_multiplicity) +
                                         " * (x^" + std::to_string(bin->n) + " - " +
                                         format_rational(bin->c) + ")");
        if (fano_index % bin->n == 0) {
            v.status = VerdictStatus::certified_true;
            v.add("exact-sign", "all top-modulus eigenvalues satisfy lambda^" +
                                    std::to_string(bin->n) + " = rho^" + std::to_string(bin->n) +
                                    ", and n | s");
        } else {
            v.status = VerdictStatus::certified_false;
            v.add("exact-sign", "top-modulus eigenvalues are the " + std::to_string(bin->n) +
                                    "-th roots of " + format_rational(bin->c) +
                                    "; lambda^s != rho^s for s = " + std::to_string(fano_index));
        }
        return v;
    }

    if (p.degree() > 0 && sturm_count(p) == 0) {
        // rho is real and nonnegative; with no real eigenvalue at all it
        // cannot lie in the spectrum. (p = x^n has the real root 0, so a
        // nilpotent operator never lands here.)
        v.status = VerdictStatus::certified_false;
        v.add("sturm-count", "the operator has no real eigenvalue, so rho is not an eigenvalue");
        return v;
    }

    if (auto ke = min_positive_power(m, k_max, /*odd_only=*/false)) {
        v.status = VerdictStatus::inconclusive;
        v.add("positive-power", "only an even power M^" + std::to_string(*ke) +
                                    " is positive within budget; this certifies part (1) "
                                    "only up to sign");
        return v;
    }
    v.status = VerdictStatus::inconclusive;
    v.add("no-certificate", "no odd positive power up to k_max = " + std::to_string(k_max) +
                                " and no exact factorization path applies");
    return v;
}

// Galkin's lower bound: rho >= dim X + 1, equality only for projective space.
inline SpectralVerdict check_galkin(const ExactMatrix& m, int dim_x, int k_max = 64) {
    SpectralVerdict v;
    Polynomial p = char_poly(m);
    Rational t(dim_x + 1);

    int beyond = sturm_count(p, t, std::nullopt);
    if (beyond >= 1) {
        // A real eigenvalue exceeds dim+1, so rho does too.
        v.status = VerdictStatus::certified_true;
        v.add("sturm-count", std::to_string(beyond) + " real eigenvalue(s) in (" +
                                 format_rational(t) + ", +inf): rho > dim X + 1 strictly");
        return v;
    }

    RadiusBound rb = spectral_radius(m, k_max);
    if (!rb.certified()) {
        v.status = VerdictStatus::inconclusive;
        v.add("no-certificate", "spectral radius could not be certified");
        return v;
    }
    if (p.eval(t) == 0 && beyond == 0) {
        // dim+1 is an exact eigenvalue and nothing exceeds it; with a
        // certified radius the radius equals dim+1.
        bool radius_is_t = rb.exact ? (*rb.exact == QuadExt(t)) : rb.interval.contains(t);
        if (radius_is_t) {
            v.status = VerdictStatus::certified_true;
            v.add("equality", "rho = dim X + 1 = " + format_rational(t) + " exactly");
            v.add("exact-sign", "char poly vanishes at " + format_rational(t) +
                                    " and no eigenvalue exceeds it");
            return v;
        }
    }
    // Certified radius strictly below the bound.
    if (rb.exact) {
        if ((*rb.exact - QuadExt(t)).sign() < 0) {
            v.status = VerdictStatus::certified_false;
            v.add("exact-sign", "rho = " + rb.exact->str() + " < " + format_rational(t));
            return v;
        }
    } else if (rb.interval.hi < t) {
        v.status = VerdictStatus::certified_false;
        v.add("root-isolation", "rho <= " + format_rational(rb.interval.hi) + " < " +
                                    format_rational(t));
        return v;
    }
    v.status = VerdictStatus::inconclusive;
    v.add("no-certificate", "radius enclosure does not separate from dim X + 1");
    return v;
}

// Does rho(m) strictly exceed the threshold?
inline SpectralVerdict compare_radius_exceeds(const ExactMatrix& m, const QuadExt& threshold,
                                              int k_max = 64) {
    SpectralVerdict v;
    Polynomial p = char_poly(m);
    QuadExt val = p.eval(threshold);
    if (val.sign() < 0) {
        // Monic and negative at the threshold forces a real root beyond it.
        v.status = VerdictStatus::certified_true;
        v.add("exact-sign",
              "char_poly(" + threshold.str() + ") = " + val.str() + " < 0, so a real "
              "eigenvalue exceeds the threshold and rho exceeds it too");
        return v;
    }
    v.add("exact-sign", "char_poly(" + threshold.str() + ") = " + val.str() + " >= 0");

    RadiusBound rb = spectral_radius(m, k_max);
    if (!rb.certified()) {
        v.status = VerdictStatus::inconclusive;
        v.add("no-certificate", "spectral radius could not be certified");
        return v;
    }
    if (rb.exact) {
        int s = (*rb.exact - threshold).sign();
        v.status = s > 0 ? VerdictStatus::certified_true : VerdictStatus::certified_false;
        v.add("exact-sign", "rho = " + rb.exact->str() + (s > 0 ? " > " : " <= ") +
                                threshold.str());
        return v;
    }
    // Refine the radius interval against the threshold down to width 2^-64.
    // Refinement needs the enclosure to isolate an actual root of p; the
    // negative-dominant all-real case yields a reflected modulus interval
    // instead, which the count below rejects.
    SturmChain chain(p);
    RootInterval iv = rb.interval;
    if (!iv.is_exact() && chain.count(iv.lo, iv.hi) != 1) {
        v.status = VerdictStatus::inconclusive;
        v.add("no-certificate", "radius enclosure is not an isolating interval");
        return v;
    }
    Rational budget = Rational(1) / (Integer(1) << 64);
    while (true) {
        if ((QuadExt(iv.lo) - threshold).sign() >= 0) {
            v.status = VerdictStatus::certified_true;
            v.add("root-isolation", "rho > " + format_rational(iv.lo) + " >= threshold");
            return v;
        }
        if ((QuadExt(iv.hi) - threshold).sign() < 0) {
            v.status = VerdictStatus::certified_false;
            v.add("root-isolation", "rho <= " + format_rational(iv.hi) + " < threshold");
            return v;
        }
        if (iv.is_exact() || iv.width() < budget) break;
        refine_interval(chain, iv, iv.width() / 4);
    }
    if (iv.is_exact()) {
        int s = (QuadExt(iv.lo) - threshold).sign();
        v.status = s > 0 ? VerdictStatus::certified_true : VerdictStatus::certified_false;
        v.add("exact-sign", "rho = " + format_rational(iv.lo));
        return v;
    }
    v.status = VerdictStatus::inconclusive;
    v.add("no-certificate", "refinement budget exhausted without separation");
    return v;
}

// Rietsch's closed formula n sin(k pi / n) / sin(pi / n) for the spectral
// radius of quantum multiplication by the hyperplane class on Gr(k, n),
// exact in a quadratic field when possible, otherwise a certified interval
// from correctly-rounded transcendental evaluation.
inline RadiusBound rietsch_radius_gr(int k, int n) {
    if (!(1 <= k && k < n)) throw InvalidInputError("rietsch_radius_gr requires 1 <= k < n");
    RadiusBound rb;
    rb.is_simple = true;
    rb.provenance = RadiusProvenance::binomial;

    int kk = std::min(k, n - k);  // sin(k pi/n) = sin((n-k) pi/n)
    if (kk == 1) {
        rb.exact = QuadExt(Rational(n));
    } else if (kk == 2) {
        // ratio = 2 cos(pi/n); quadratic for n in {4, 5, 6}.
        if (n == 4) rb.exact = QuadExt(Rational(0), Rational(n), 2);
        if (n == 5) rb.exact = QuadExt(Rational(n) / 2, Rational(n) / 2, 5);
        if (n == 6) rb.exact = QuadExt(Rational(0), Rational(n), 3);
    }

    // Certified enclosure via MPFR with directed rounding.
    auto sin_bounds = [&](long num, long den, Rational& lo, Rational& hi) {
        // bounds for sin(num*pi/den), 0 < num/den < 1
        mpfr_t pi_lo, pi_hi, x, s;
        mpfr_inits2(192, pi_lo, pi_hi, x, s, (mpfr_ptr) nullptr);
        mpq_class out;
        // increasing on (0, 1/2], decreasing on [1/2, 1): pick roundings.
        bool rising = 2 * num <= den;
        // lower bound
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        mpfr_mul_si(x, rising ? pi_lo : pi_hi, num, rising ? MPFR_RNDD : MPFR_RNDU);
        mpfr_div_si(x, x, den, rising ? MPFR_RNDD : MPFR_RNDU);
        mpfr_sin(s, x, MPFR_RNDD);
        mpfr_get_q(out.get_mpq_t(), s);
        lo = out;
        // upper bound
        mpfr_mul_si(x, rising ? pi_hi : pi_lo, num, rising ? MPFR_RNDU : MPFR_RNDD);
        mpfr_div_si(x, x, den, rising ? MPFR_RNDU : MPFR_RNDD);
        mpfr_sin(s, x, MPFR_RNDU);
        mpfr_get_q(out.get_mpq_t(), s);
        hi = out;
        if (hi > 1) hi = 1;
        mpfr_clears(pi_lo, pi_hi, x, s, (mpfr_ptr) nullptr);
    };
    Rational num_lo, num_hi, den_lo, den_hi;
    sin_bounds(k, n, num_lo, num_hi);
    sin_bounds(1, n, den_lo, den_hi);
    rb.interval = RootInterval{Rational(n) * num_lo / den_hi, Rational(n) * num_hi / den_lo, 1};
    if (rb.exact && rb.exact->is_rational())
        rb.interval = RootInterval{rb.exact->a(), rb.exact->a(), 1};
    return rb;
}

}  // namespace qcoh

#endif
