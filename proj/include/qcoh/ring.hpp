#ifndef QCOH_RING_HPP
#define QCOH_RING_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qcoh/matrix.hpp"
#include "qcoh/rational.hpp"

namespace qcoh {

// Ordered basis of H^even with complex degrees (H has degree 1).
struct GradedBasis {
    struct Element {
        std::string label;
        int degree;
    };
    std::vector<Element> elements;

    int size() const { return int(elements.size()); }
    int degree(int i) const { return elements[i].degree; }
    const std::string& label(int i) const { return elements[i].label; }
    std::optional<int> index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (elements[i].label == label) return i;
        return std::nullopt;
    }
};

// Cohomology class as a coefficient vector over a GradedBasis.
struct CohClass {
    std::vector<Rational> coeff;

    CohClass() = default;
    explicit CohClass(int n) : coeff(n, Rational(0)) {}
    explicit CohClass(std::vector<Rational> c) : coeff(std::move(c)) {}

    int size() const { return int(coeff.size()); }
    Rational& operator[](int i) { return coeff[i]; }
    const Rational& operator[](int i) const { return coeff[i]; }
    bool is_zero() const {
        for (const auto& x : coeff)
            if (x != 0) return false;
        return true;
    }
    friend bool operator==(const CohClass& a, const CohClass& b) { return a.coeff == b.coeff; }
    friend CohClass operator+(const CohClass& a, const CohClass& b) {
        if (a.size() != b.size()) throw DimensionError("class length mismatch");
        CohClass r = a;
        for (int i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    friend CohClass operator-(const CohClass& a, const CohClass& b) {
        if (a.size() != b.size()) throw DimensionError("class length mismatch");
        CohClass r = a;
        for (int i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }
    friend CohClass operator*(const Rational& s, const CohClass& a) {
        CohClass r = a;
        for (auto& x : r.coeff) x *= s;
        return r;
    }
};

// Sparse cup-product structure constants: b_i cup b_j = sum_k c_{ijk} b_k.
// Keys are stored with i <= j; absent entries are zero.
struct CupTable {
    std::map<std::tuple<int, int, int>, Rational> entries;

    void set(int i, int j, int k, Rational v) {
        if (i > j) std::swap(i, j);
        if (v == 0)
            entries.erase({i, j, k});
        else
            entries[{i, j, k}] = std::move(v);
    }
    Rational get(int i, int j, int k) const {
        if (i > j) std::swap(i, j);
        auto it = entries.find({i, j, k});
        return it == entries.end() ? Rational(0) : it->second;
    }
};

struct Pairing {
    ExactMatrix matrix;  // (b_i, b_j) -> integral of b_i cup b_j
};

// Classical data of one manifold: graded basis, cup table, first Chern class.
struct RingSpec {
    std::string name;
    int dim = 0;
    std::optional<int> fano_index;
    GradedBasis basis;
    CupTable cup;
    CohClass c1;

    int size() const { return basis.size(); }

    CohClass basis_class(int i) const {
        CohClass c(size());
        c[i] = 1;
        return c;
    }

    // Class from label/coefficient pairs, e.g. {{"H", 4}, {"E0", -3}}.
    CohClass make_class(const std::vector<std::pair<std::string, Rational>>& terms) const {
        CohClass c(size());
        for (const auto& [label, v] : terms) {
            auto i = basis.index_of(label);
            if (!i) throw InvalidInputError("unknown basis label: " + label);
            c[*i] += v;
        }
        return c;
    }

    // Index of the unique degree-dim element (the point class, integral 1).
    int point_index() const {
        int found = -1;
        for (int i = 0; i < size(); ++i) {
            if (basis.degree(i) == dim) {
                if (found >= 0) throw InvalidSpecError("multiple degree-dim basis elements");
                found = i;
            }
        }
        if (found < 0) throw InvalidSpecError("no degree-dim basis element");
        return found;
    }

    // Degree of a homogeneous class; empty for 0 or mixed degrees.
    std::optional<int> pure_degree(const CohClass& a) const {
        std::optional<int> deg;
        for (int i = 0; i < size(); ++i) {
            if (a[i] == 0) continue;
            if (deg && *deg != basis.degree(i)) return std::nullopt;
            deg = basis.degree(i);
        }
        return deg;
    }
};

// Bilinear extension of the cup table.
inline CohClass cup(const RingSpec& spec, const CohClass& a, const CohClass& b) {
    int n = spec.size();
    if (a.size() != n || b.size() != n) throw DimensionError("class length mismatch");
    CohClass r(n);
    for (const auto& [key, v] : spec.cup.entries) {
        auto [i, j, k] = key;
        r[k] += a[i] * b[j] * v;
        if (i != j) r[k] += a[j] * b[i] * v;
    }
    return r;
}

inline Rational integral(const RingSpec& spec, const CohClass& a) { return a[spec.point_index()]; }

inline Pairing pairing_matrix(const RingSpec& spec) {
    int n = spec.size();
    ExactMatrix p(n, n);
    int pt = spec.point_index();
    for (const auto& [key, v] : spec.cup.entries) {
        auto [i, j, k] = key;
        if (k != pt) continue;
        p.at(i, j) = v;
        p.at(j, i) = v;
    }
    return Pairing{std::move(p)};
}

// Dual basis (phi^j) with (b_i, phi^j) = delta_ij, as columns of P^{-1}.
inline std::vector<CohClass> dual_basis(const RingSpec& spec) {
    Pairing p = pairing_matrix(spec);
    auto inv = p.matrix.inverse();
    if (!inv) throw InvalidSpecError("Poincare pairing is singular");
    int n = spec.size();
    std::vector<CohClass> dual(n, CohClass(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) dual[j][i] = inv->at(i, j);
    return dual;
}

struct RingReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Structural audit: grading, unit law, commutativity, associativity over all
// basis triples, pairing symmetry/unimodularity/nondegeneracy.
inline RingReport validate_ring(const RingSpec& spec) {
    RingReport rep;
    auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
    int n = spec.size();

    std::map<std::string, int> seen;
    int units = 0;
    for (int i = 0; i < n; ++i) {
        if (seen.count(spec.basis.label(i))) fail("duplicate label " + spec.basis.label(i));
        seen[spec.basis.label(i)] = i;
        if (spec.basis.degree(i) < 0 || spec.basis.degree(i) > spec.dim)
            fail("degree out of range for " + spec.basis.label(i));
        if (spec.basis.degree(i) == 0) ++units;
    }
    if (units != 1) fail("expected exactly one degree-0 element");
    if (spec.c1.size() != n) {
        fail("c1 has wrong length");
        return rep;
    }
    if (!spec.c1.is_zero() && spec.pure_degree(spec.c1) != 1) fail("c1 is not pure degree 1");

    for (const auto& [key, v] : spec.cup.entries) {
        auto [i, j, k] = key;
        if (i < 0 || j >= n || k < 0 || k >= n) {
            fail("cup index out of range");
            continue;
        }
        if (spec.basis.degree(k) != spec.basis.degree(i) + spec.basis.degree(j))
            fail("cup entry (" + spec.basis.label(i) + "," + spec.basis.label(j) + ") -> " +
                 spec.basis.label(k) + " violates grading");
        (void)v;
    }

    int unit = -1;
    for (int i = 0; i < n; ++i)
        if (spec.basis.degree(i) == 0) unit = i;
    if (unit >= 0) {
        for (int j = 0; j < n; ++j) {
            CohClass r = cup(spec, spec.basis_class(unit), spec.basis_class(j));
            if (!(r == spec.basis_class(j))) fail("unit law fails on " + spec.basis.label(j));
        }
    }

    // Associativity over all triples; commutativity is built into storage.
    for (int i = 0; i < n; ++i) {
        CohClass bi = spec.basis_class(i);
        for (int j = i; j < n; ++j) {
            CohClass bj = spec.basis_class(j);
            CohClass ij = cup(spec, bi, bj);
            for (int k = j; k < n; ++k) {
                CohClass bk = spec.basis_class(k);
                CohClass lhs = cup(spec, ij, bk);
                CohClass rhs = cup(spec, bi, cup(spec, bj, bk));
                if (!(lhs == rhs))
                    fail("associativity fails on (" + spec.basis.label(i) + "," +
                         spec.basis.label(j) + "," + spec.basis.label(k) + ")");
            }
        }
    }

    try {
        Pairing p = pairing_matrix(spec);
        Rational det = p.matrix.determinant();
        if (det == 0)
            fail("pairing is singular");
        else if (p.matrix.integral() && !(det == 1 || det == -1))
            fail("pairing is not unimodular");
    } catch (const Error& e) {
        fail(std::string("pairing: ") + e.what());
    }
    return rep;
}

// Rewrites all ring data in a new basis. The dictionary lists the new basis
// elements as classes over the current basis; it must be invertible and
// integral, and each element homogeneous.
inline RingSpec change_basis(const RingSpec& spec, const std::vector<CohClass>& dictionary,
                             const std::vector<std::string>& labels = {}) {
    int n = spec.size();
    if (int(dictionary.size()) != n) throw InvalidInputError("dictionary must have basis size");
    ExactMatrix d(n, n);
    for (int j = 0; j < n; ++j) {
        if (dictionary[j].size() != n) throw DimensionError("dictionary class length mismatch");
        for (int i = 0; i < n; ++i) d.at(i, j) = dictionary[j][i];
    }
    if (!d.integral()) throw InvalidInputError("dictionary must be an integer matrix");
    auto dinv = d.inverse();
    if (!dinv) throw InvalidInputError("dictionary is not invertible");

    RingSpec out;
    out.name = spec.name + "'";
    out.dim = spec.dim;
    out.fano_index = spec.fano_index;
    out.basis.elements.resize(n);
    for (int j = 0; j < n; ++j) {
        auto deg = spec.pure_degree(dictionary[j]);
        if (!deg) throw InvalidInputError("dictionary element " + std::to_string(j) +
                                          " is not homogeneous");
        out.basis.elements[j].degree = *deg;
        out.basis.elements[j].label =
            j < int(labels.size()) ? labels[j] : "b" + std::to_string(j) + "'";
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            CohClass prod = cup(spec, dictionary[i], dictionary[j]);
            std::vector<Rational> coords = dinv->apply(prod.coeff);
            for (int k = 0; k < n; ++k)
                if (coords[k] != 0) out.cup.set(i, j, k, coords[k]);
        }
    out.c1 = CohClass(dinv->apply(spec.c1.coeff));
    return out;
}

}  // namespace qcoh

#endif
