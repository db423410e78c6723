#ifndef QCOH_QUADEXT_HPP
#define QCOH_QUADEXT_HPP

#include <cctype>
#include <cmath>
#include <optional>
#include <string>

#include "qcoh/rational.hpp"

namespace qcoh {

// Element a + b*sqrt(d) of the real quadratic field Q[sqrt(d)], d a positive
// square-free integer. Arithmetic never leaves the field: mixing two values
// with different radicands is an error unless one of them is rational
// (b == 0), in which case the radicand is irrelevant.
class QuadExt {
   public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(Rational rational) : a_(std::move(rational)), b_(0), d_(1) {}
    QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d <= 0) throw InvalidInputError("radicand must be positive");
        if (!square_free(d)) throw InvalidInputError("radicand must be square-free");
        if (b_ == 0) d_ = 1;
        if (d_ == 1) {  // sqrt(1) = 1
            a_ += b_;
            b_ = 0;
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long d = merge_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        long d = merge_radicand(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long d = merge_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (!x.is_rational() && !y.is_rational() && x.d_ != y.d_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Exact sign, via rational comparisons of a^2 and b^2 d.
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // a and b*sqrt(d) compete; compare squares.
        int cmp = ::cmp(a_ * a_, b_ * b_ * d_);  // |a| vs |b|sqrt(d)
        if (cmp == 0) return 0;
        return cmp > 0 ? sa : sb;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(double(d_)); }

    std::string str() const {
        if (b_ == 0) return format_rational(a_);
        std::string s;
        if (a_ != 0) s = format_rational(a_) + (sgn(b_) > 0 ? " + " : " - ");
        else if (sgn(b_) < 0) s = "-";
        Rational babs = abs(b_);
        if (babs != 1) s += format_rational(babs) + "*";
        return s + "sqrt(" + std::to_string(d_) + ")";
    }

    static bool square_free(long d) {
        for (long p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0) return false;
        return true;
    }

   private:
    static long merge_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.is_rational()) return y.d_;
        if (y.is_rational()) return x.d_;
        if (x.d_ != y.d_)
            throw InvalidInputError("mixed radicands: sqrt(" + std::to_string(x.d_) +
                                    ") vs sqrt(" + std::to_string(y.d_) + ")");
        return x.d_;
    }

    Rational a_, b_;
    long d_;
};

// sqrt(r) for a nonnegative rational, as b*sqrt(d) with d square-free.
// Empty when the square-free kernel does not fit in a long.
inline std::optional<QuadExt> sqrt_rational(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return QuadExt(Rational(0));
    // sqrt(p/q) = sqrt(p*q)/q
    Integer m = r.get_num() * r.get_den();
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (rem == 0) return QuadExt(Rational(root) / r.get_den());
    // Strip the largest square divisor by trial division.
    Integer sq = 1, core = m;
    for (Integer p = 2; p * p <= core; ++p) {
        Integer pp = p * p;
        while (mpz_divisible_p(core.get_mpz_t(), pp.get_mpz_t())) {
            core /= pp;
            sq *= p;
        }
    }
    if (!core.fits_slong_p()) return std::nullopt;
    return QuadExt(Rational(0), Rational(sq) / r.get_den(), core.get_si());
}

// Parses "<rational>", "<rational>*sqrt(<int>)", "sqrt(<int>)", and +/-
// sums of such terms sharing one radicand, e.g. "4*sqrt(2)" or "3 - 1/2*sqrt(5)".
inline QuadExt parse_quadext(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_term = [&](int sign_mult) -> QuadExt {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        Rational coeff(1);
        bool have_coeff = pos > start;
        if (have_coeff) coeff = parse_rational(text.substr(start, pos - start));
        skip_ws();
        if (pos < text.size() && (text[pos] == '*' || text.compare(pos, 5, "sqrt(") == 0)) {
            if (text[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (text.compare(pos, 5, "sqrt(") != 0)
                throw ParseError("expected sqrt( at position " + std::to_string(pos));
            pos += 5;
            std::size_t close = text.find(')', pos);
            if (close == std::string::npos) throw ParseError("unterminated sqrt(");
            long d = 0;
            try {
                d = std::stol(text.substr(pos, close - pos));
            } catch (...) {
                throw ParseError("bad radicand in sqrt(...)");
            }
            pos = close + 1;
            return QuadExt(Rational(0), sign_mult * coeff, d);
        }
        if (!have_coeff)
            throw ParseError("expected a term at position " + std::to_string(start));
        return QuadExt(sign_mult * coeff);
    };

    skip_ws();
    int sign_mult = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign_mult = -1;
        ++pos;
    }
    QuadExt result = parse_term(sign_mult);
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] == '+')
            sign_mult = 1;
        else if (text[pos] == '-')
            sign_mult = -1;
        else
            throw ParseError("unexpected character at position " + std::to_string(pos));
        ++pos;
        result = result + parse_term(sign_mult);
        skip_ws();
    }
    return result;
}

}  // namespace qcoh

#endif
