#ifndef QCOH_POLYNOMIAL_HPP
#define QCOH_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qcoh/quadext.hpp"
#include "qcoh/rational.hpp"

namespace qcoh {

// Univariate polynomial over Q, coefficients stored in ascending degree.
// The zero polynomial has an empty coefficient vector.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
    // x^k
    static Polynomial monomial(int k, Rational coeff = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    const Rational& operator[](int i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
        for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
        for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> r(p.c_.size() + q.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return {};
        std::vector<Rational> r = p.c_;
        for (auto& x : r) x *= s;
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    QuadExt eval(const QuadExt& x) const {
        QuadExt v{Rational(0)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + QuadExt(*it);
        return v;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(long(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    // Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw InvalidInputError("polynomial division by zero");
        Polynomial r = *this;
        std::vector<Rational> q;
        if (r.degree() >= d.degree()) q.assign(r.degree() - d.degree() + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational f = r.leading() / d.leading();
            q[k] = f;
            std::vector<Rational> rc = r.c_;
            for (int i = 0; i <= d.degree(); ++i) rc[i + k] -= f * d.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(q)), r};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return (Rational(1) / leading()) * *this;
    }

    // Monic gcd over Q.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // p / gcd(p, p'): same roots, all simple.
    Polynomial square_free_part() const {
        if (is_zero()) throw InvalidInputError("square-free part of zero polynomial");
        Polynomial g = gcd(*this, derivative());
        if (g.degree() == 0) return monic();
        return divmod(g).first.monic();
    }

    // Yun decomposition: returns f_1, f_2, ... with *this ~ prod f_i^i
    // (up to the leading coefficient); the f_i are square-free and coprime.
    std::vector<Polynomial> square_free_decomposition() const {
        if (is_zero()) throw InvalidInputError("square-free decomposition of zero polynomial");
        std::vector<Polynomial> out;
        Polynomial f = monic();
        if (f.degree() == 0) return out;
        Polynomial fp = f.derivative();
        Polynomial a = gcd(f, fp);
        Polynomial b = f.divmod(a).first;
        Polynomial c = fp.divmod(a).first;
        Polynomial d = c - b.derivative();
        while (b.degree() > 0) {
            Polynomial g = gcd(b, d);
            out.push_back(g.monic());
            b = b.divmod(g).first;
            c = d.divmod(g).first;
            d = c - b.derivative();
        }
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            if (s.empty()) {
                if (sgn(a) < 0) s += "-";
            } else {
                s += sgn(a) < 0 ? " - " : " + ";
            }
            Rational m = abs(a);
            if (i == 0 || m != 1) s += format_rational(m);
            if (i > 0) {
                if (m != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace qcoh

#endif
