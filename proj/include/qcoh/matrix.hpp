#ifndef QCOH_MATRIX_HPP
#define QCOH_MATRIX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcoh/polynomial.hpp"
#include "qcoh/rational.hpp"

namespace qcoh {

// Dense matrix of exact rationals, row-major.
class ExactMatrix {
   public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, Rational(0)) {
        if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
    }
    ExactMatrix(int rows, int cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
        if (e_.size() != std::size_t(rows) * cols)
            throw DimensionError("entry count does not match dimensions");
    }
    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static ExactMatrix from_long(int rows, int cols, const std::vector<long>& v) {
        std::vector<Rational> e(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) e[i] = Rational(v[i]);
        return ExactMatrix(rows, cols, std::move(e));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    Rational& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        ExactMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
        ExactMatrix r = a;
        for (auto& x : r.e_) x *= s;
        return r;
    }
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("matrix sum shape mismatch");
        ExactMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Rational trace() const {
        if (!is_square()) throw DimensionError("trace of non-square matrix");
        Rational t(0);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (int(v.size()) != cols_) throw DimensionError("vector length mismatch");
        std::vector<Rational> r(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    bool entrywise_positive() const {
        for (const auto& x : e_)
            if (sgn(x) <= 0) return false;
        return true;
    }
    bool entrywise_nonnegative() const {
        for (const auto& x : e_)
            if (sgn(x) < 0) return false;
        return true;
    }

    std::size_t max_entry_bits() const {
        std::size_t b = 0;
        for (const auto& x : e_) b = std::max(b, rational_bits(x));
        return b;
    }

    // Binary exponentiation; aborts when intermediate entries outgrow the guard.
    ExactMatrix pow(unsigned long k, std::size_t max_bits = 1000000) const {
        if (!is_square()) throw DimensionError("power of non-square matrix");
        ExactMatrix result = identity(rows_);
        ExactMatrix base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
            if (result.max_entry_bits() > max_bits || base.max_entry_bits() > max_bits)
                throw InvalidInputError("matrix power exceeds entry-size guard");
        }
        return result;
    }

    // Gauss-Jordan inverse; empty when singular.
    std::optional<ExactMatrix> inverse() const {
        if (!is_square()) throw DimensionError("inverse of non-square matrix");
        int n = rows_;
        ExactMatrix a = *this, inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (a.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return std::nullopt;
            if (piv != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            }
            Rational f = Rational(1) / a.at(col, col);
            for (int j = 0; j < n; ++j) {
                a.at(col, j) *= f;
                inv.at(col, j) *= f;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || a.at(r, col) == 0) continue;
                Rational g = a.at(r, col);
                for (int j = 0; j < n; ++j) {
                    a.at(r, j) -= g * a.at(col, j);
                    inv.at(r, j) -= g * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    Rational determinant() const {
        if (!is_square()) throw DimensionError("determinant of non-square matrix");
        ExactMatrix a = *this;
        int n = rows_;
        Rational det(1);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (a.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rational(0);
            if (piv != col) {
                for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
                det = -det;
            }
            det *= a.at(col, col);
            Rational f = Rational(1) / a.at(col, col);
            for (int r = col + 1; r < n; ++r) {
                if (a.at(r, col) == 0) continue;
                Rational g = a.at(r, col) * f;
                for (int j = col; j < n; ++j) a.at(r, j) -= g * a.at(col, j);
            }
        }
        return det;
    }

    bool integral() const {
        for (const auto& x : e_)
            if (!is_integer(x)) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[ ";
            for (int j = 0; j < cols_; ++j) {
                s += format_rational(at(i, j));
                if (j + 1 < cols_) s += ", ";
            }
            s += " ]\n";
        }
        return s;
    }

   private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

// Monic characteristic polynomial det(lambda*I - m) via the Faddeev-LeVerrier
// recurrence. Division-free apart from the exact division by the step index,
// and entirely over Q; dimensions here are tiny so cost is irrelevant.
inline Polynomial char_poly(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("char_poly requires a square matrix");
    int n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    ExactMatrix mk = ExactMatrix::identity(n);  // M_1 = I initially, then M*M_k + c*I
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational ck = -mk.trace() / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return Polynomial(std::move(c));
}

// Smallest k <= k_max (odd k only when requested) with m^k entrywise positive.
inline std::optional<int> min_positive_power(const ExactMatrix& m, int k_max = 64,
                                             bool odd_only = false,
                                             std::size_t max_bits = 1000000) {
    if (!m.is_square()) throw DimensionError("min_positive_power requires a square matrix");
    if (k_max < 1) throw InvalidInputError("k_max must be >= 1");
    ExactMatrix p = ExactMatrix::identity(m.rows());
    for (int k = 1; k <= k_max; ++k) {
        p = p * m;
        if (p.max_entry_bits() > max_bits)
            throw InvalidInputError("matrix power exceeds entry-size guard");
        if (odd_only && k % 2 == 0) continue;
        if (p.entrywise_positive()) return k;
    }
    return std::nullopt;
}

}  // namespace qcoh

#endif
