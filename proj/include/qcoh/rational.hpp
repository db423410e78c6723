#ifndef QCOH_RATIONAL_HPP
#define QCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "qcoh/errors.hpp"

namespace qcoh {

// Arbitrary-precision rational. mpq_class keeps values canonical (lowest
// terms, positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sgn(const Rational& r) { return ::sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Parses "p", "-p", or "p/q". Rejects anything else, including floats.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Bit size of the larger of numerator and denominator.
inline std::size_t rational_bits(const Rational& r) {
    std::size_t nb = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
}

}  // namespace qcoh

#endif
