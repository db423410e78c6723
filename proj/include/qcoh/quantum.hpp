#ifndef QCOH_QUANTUM_HPP
#define QCOH_QUANTUM_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcoh/ring.hpp"

namespace qcoh {

// Degree of a stable-map space / curve class, stored in the Mori-cone
// generator basis so effectivity is a nonnegativity check.
struct CurveClass {
    std::vector<long> coords;

    bool is_zero() const {
        for (long c : coords)
            if (c != 0) return false;
        return true;
    }
    bool effective() const {
        for (long c : coords)
            if (c < 0) return false;
        return true;
    }
    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const CurveClass& a, const CurveClass& b) {
        return a.coords < b.coords;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

// H_2 lattice with a distinguished generator basis, the Mori-cone generators
// expressed in it, and the intersection pairing of degree-1 classes against
// the generators.
struct CurveLattice {
    int rank = 0;
    std::vector<std::string> generator_labels;
    // Mori-cone generators, each as an integer vector in generator coords.
    std::vector<std::vector<long>> mori_generators;
    // divisor_pairing[i] is the row for ring-basis element i (degree-1 only);
    // entry g is b_i . generator_g.
    std::map<int, std::vector<long>> divisor_pairing;

    // Mori coords -> generator coords.
    std::vector<long> to_generator_coords(const CurveClass& d) const {
        std::vector<long> g(rank, 0);
        if (int(d.coords.size()) != int(mori_generators.size()))
            throw DimensionError("curve class length mismatch");
        for (std::size_t m = 0; m < mori_generators.size(); ++m)
            for (int i = 0; i < rank; ++i) g[i] += d.coords[m] * mori_generators[m][i];
        return g;
    }
};

enum class GWStyle { two_point, three_point };

// Sparse table of genus-zero Gromov-Witten invariants keyed by curve class
// (Mori coords) and an unordered pair/triple of basis indices.
struct GWTable {
    GWStyle style = GWStyle::two_point;
    // Degree-0 three-point invariants are cup-product integrals, never stored.
    std::map<std::pair<CurveClass, std::array<int, 2>>, Rational> two_point;
    std::map<std::pair<CurveClass, std::array<int, 3>>, Rational> three_point;

    static std::array<int, 2> key2(int i, int j) {
        if (i > j) std::swap(i, j);
        return {i, j};
    }
    static std::array<int, 3> key3(int i, int j, int k) {
        std::array<int, 3> a{i, j, k};
        std::sort(a.begin(), a.end());
        return a;
    }

    void set2(CurveClass d, int i, int j, Rational v) {
        two_point[{std::move(d), key2(i, j)}] = std::move(v);
    }
    void set3(CurveClass d, int i, int j, int k, Rational v) {
        three_point[{std::move(d), key3(i, j, k)}] = std::move(v);
    }
    Rational get2(const CurveClass& d, int i, int j) const {
        auto it = two_point.find({d, key2(i, j)});
        return it == two_point.end() ? Rational(0) : it->second;
    }
    Rational get3(const CurveClass& d, int i, int j, int k) const {
        auto it = three_point.find({d, key3(i, j, k)});
        return it == three_point.end() ? Rational(0) : it->second;
    }
    std::vector<CurveClass> support() const {
        std::vector<CurveClass> out;
        auto add = [&](const CurveClass& d) {
            for (const auto& x : out)
                if (x == d) return;
            out.push_back(d);
        };
        for (const auto& [k, v] : two_point) add(k.first);
        for (const auto& [k, v] : three_point) add(k.first);
        return out;
    }
};

struct QuantumSpec {
    RingSpec ring;
    CurveLattice lattice;
    GWTable gw;
};

// Intersection number of a pure degree-1 class with a curve class.
inline Rational intersect(const QuantumSpec& q, const CohClass& divisor, const CurveClass& d) {
    if (divisor.size() != q.ring.size()) throw DimensionError("class length mismatch");
    std::vector<long> g = q.lattice.to_generator_coords(d);
    Rational r(0);
    for (int i = 0; i < q.ring.size(); ++i) {
        if (divisor[i] == 0) continue;
        if (q.ring.basis.degree(i) != 1)
            throw InvalidInputError("intersect requires a pure degree-1 class");
        auto it = q.lattice.divisor_pairing.find(i);
        if (it == q.lattice.divisor_pairing.end())
            throw InvalidSpecError("no pairing row for " + q.ring.basis.label(i));
        for (int k = 0; k < q.lattice.rank; ++k) r += divisor[i] * it->second[k] * g[k];
    }
    return r;
}

// Fano index computed from the lattice: gcd of c1 against the generators.
inline long computed_fano_index(const QuantumSpec& q) {
    Integer g(0);
    for (int gi = 0; gi < q.lattice.rank; ++gi) {
        Rational v(0);
        for (const auto& [i, row] : q.lattice.divisor_pairing) v += q.ring.c1[i] * row[gi];
        if (!is_integer(v)) throw InvalidSpecError("c1 pairing is not integral");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(v.get_num())).get_mpz_t());
    }
    if (g == 0) throw InvalidSpecError("c1 pairs to zero with the whole lattice");
    return g.get_si();
}

// All nonzero effective d with c1.d <= dim + 1 (the two-point dimension
// constraint: insertions of degree <= dim each force dim + c1.d - 1 <= 2dim).
inline std::vector<CurveClass> admissible_two_point_degrees(const QuantumSpec& q) {
    int m = int(q.lattice.mori_generators.size());
    std::vector<Rational> cost(m);
    for (int g = 0; g < m; ++g) {
        CurveClass unit{std::vector<long>(m, 0)};
        unit.coords[g] = 1;
        cost[g] = intersect(q, q.ring.c1, unit);
        if (sgn(cost[g]) <= 0)
            throw InvalidSpecError("c1 must pair positively with every Mori generator");
    }
    Rational budget(q.ring.dim + 1);
    std::vector<CurveClass> out;
    std::vector<long> cur(m, 0);
    auto rec = [&](auto&& self, int g, Rational spent) -> void {
        if (g == m) {
            CurveClass d{cur};
            if (!d.is_zero()) out.push_back(std::move(d));
            return;
        }
        for (long k = 0;; ++k) {
            Rational s = spent + k * cost[g];
            if (s > budget) break;
            cur[g] = k;
            self(self, g + 1, s);
        }
        cur[g] = 0;
    };
    rec(rec, 0, Rational(0));
    std::sort(out.begin(), out.end());
    return out;
}

struct GWReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Per-entry audit: effectivity, admissibility of the degree, and the exact
// dimension balance sum(deg) = dim + c1.d + k - 3 for k insertions.
inline GWReport audit_gw_table(const QuantumSpec& q) {
    GWReport rep;
    auto fail = [&](std::string m) { rep.violations.push_back(std::move(m)); };
    auto admissible = admissible_two_point_degrees(q);
    auto is_admissible = [&](const CurveClass& d) {
        for (const auto& a : admissible)
            if (a == d) return true;
        return false;
    };
    for (const auto& [key, v] : q.gw.two_point) {
        const auto& [d, idx] = key;
        std::string name = "<" + q.ring.basis.label(idx[0]) + "," + q.ring.basis.label(idx[1]) +
                           ">_" + d.str();
        if (v == 0) fail("zero entry stored: " + name);
        if (!d.effective() || d.is_zero()) fail("non-effective or zero degree: " + name);
        if (!is_admissible(d)) fail("degree not admissible: " + name);
        Rational c1d = intersect(q, q.ring.c1, d);
        if (Rational(q.ring.basis.degree(idx[0]) + q.ring.basis.degree(idx[1])) !=
            Rational(q.ring.dim - 1) + c1d)
            fail("dimension balance fails: " + name);
    }
    for (const auto& [key, v] : q.gw.three_point) {
        const auto& [d, idx] = key;
        std::string name = "<" + q.ring.basis.label(idx[0]) + "," + q.ring.basis.label(idx[1]) +
                           "," + q.ring.basis.label(idx[2]) + ">_" + d.str();
        if (v == 0) fail("zero entry stored: " + name);
        if (!d.effective() || d.is_zero()) fail("non-effective or zero degree: " + name);
        Rational c1d = intersect(q, q.ring.c1, d);
        if (Rational(q.ring.basis.degree(idx[0]) + q.ring.basis.degree(idx[1]) +
                     q.ring.basis.degree(idx[2])) != Rational(q.ring.dim) + c1d)
            fail("dimension balance fails: " + name);
    }
    return rep;
}

// Divisor axiom: <D, a, b>_d = (D.d) <a, b>_d for d != 0.
inline Rational three_point_divisor(const QuantumSpec& q, const CohClass& divisor, int a, int b,
                                    const CurveClass& d) {
    if (d.is_zero())
        throw InvalidInputError("divisor axiom needs d != 0; use the cup product at degree 0");
    if (!d.effective()) throw InvalidInputError("curve class is not effective");
    return intersect(q, divisor, d) * q.gw.get2(d, a, b);
}

// c1 star a at q = 1: classical cup product plus quantum corrections from
// the stored table (divisor axiom for two-point tables, direct lookup for
// three-point tables).
inline CohClass quantum_product_c1_at_one(const QuantumSpec& q, const CohClass& a) {
    int n = q.ring.size();
    if (a.size() != n) throw DimensionError("class length mismatch");
    CohClass result = cup(q.ring, q.ring.c1, a);
    std::vector<CohClass> dual = dual_basis(q.ring);
    if (q.gw.style == GWStyle::two_point) {
        for (const auto& [key, val] : q.gw.two_point) {
            const auto& [d, idx] = key;
            Rational f = intersect(q, q.ring.c1, d) * val;
            auto contribute = [&](int u, int w) {
                // <c1, a, phi_w>_d picks up a_u * val; add against dual phi^w.
                if (a[u] == 0) return;
                result = result + (f * a[u]) * dual[w];
            };
            contribute(idx[0], idx[1]);
            if (idx[0] != idx[1]) contribute(idx[1], idx[0]);
        }
    } else {
        for (const CurveClass& d : q.gw.support()) {
            for (int w = 0; w < n; ++w) {
                Rational s(0);
                for (int u = 0; u < n; ++u) {
                    if (q.ring.c1[u] == 0) continue;
                    for (int v = 0; v < n; ++v) {
                        if (a[v] == 0) continue;
                        Rational t = q.gw.get3(d, u, v, w);
                        if (t != 0) s += q.ring.c1[u] * a[v] * t;
                    }
                }
                if (s != 0) result = result + s * dual[w];
            }
        }
    }
    return result;
}

// Matrix M with column j the coordinates of c1 star basis_j in the given
// basis (the hat-basis convention: operator applied to the row of basis
// classes equals that row times M).
inline ExactMatrix c1_operator_matrix(const QuantumSpec& q, const std::vector<CohClass>& basis) {
    int n = q.ring.size();
    if (int(basis.size()) != n) throw InvalidInputError("operator basis must have full size");
    ExactMatrix b(n, n);
    for (int j = 0; j < n; ++j) {
        if (basis[j].size() != n) throw DimensionError("basis class length mismatch");
        for (int i = 0; i < n; ++i) b.at(i, j) = basis[j][i];
    }
    auto binv = b.inverse();
    if (!binv) throw InvalidInputError("operator basis is not invertible");
    ExactMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        CohClass img = quantum_product_c1_at_one(q, basis[j]);
        std::vector<Rational> coords = binv->apply(img.coeff);
        for (int i = 0; i < n; ++i) m.at(i, j) = coords[i];
    }
    return m;
}

inline ExactMatrix c1_operator_matrix(const QuantumSpec& q) {
    std::vector<CohClass> basis;
    for (int i = 0; i < q.ring.size(); ++i) basis.push_back(q.ring.basis_class(i));
    return c1_operator_matrix(q, basis);
}

// Change of presentation: new ring basis over the old one plus new lattice
// generators in old generator coordinates.
struct LatticeDictionary {
    std::vector<std::string> new_generator_labels;
    // Column g: new generator g in old generator coordinates.
    std::vector<std::vector<long>> new_generators;
};

namespace detail {

// Integer inverse of a small unimodular integer matrix given as columns.
inline ExactMatrix columns_to_matrix(const std::vector<std::vector<long>>& cols) {
    int n = int(cols.size());
    ExactMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        if (int(cols[j].size()) != n) throw DimensionError("lattice dictionary shape mismatch");
        for (int i = 0; i < n; ++i) m.at(i, j) = Rational(cols[j][i]);
    }
    return m;
}

inline std::vector<long> to_long_vector(const std::vector<Rational>& v) {
    std::vector<long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw InvalidInputError("expected integer lattice coordinates");
        out[i] = long(v[i].get_num().get_si());
    }
    return out;
}

}  // namespace detail

// Re-expresses the GW table in a new basis/lattice presentation by
// multilinearity. `basis_dict` lists the new ring basis over the old one;
// the returned table is keyed in the new Mori coordinates, which are the old
// Mori generators rewritten through the lattice dictionary.
inline GWTable translate_gw_table(const QuantumSpec& q, const std::vector<CohClass>& basis_dict,
                                  const LatticeDictionary& lat,
                                  const CurveLattice& new_lattice) {
    int n = q.ring.size();
    if (int(basis_dict.size()) != n) throw InvalidInputError("basis dictionary size mismatch");
    ExactMatrix g = detail::columns_to_matrix(lat.new_generators);
    auto ginv = g.inverse();
    if (!ginv) throw InvalidInputError("lattice dictionary is not invertible");

    // old Mori coords -> new Mori coords, through generator coordinates.
    ExactMatrix new_mori = detail::columns_to_matrix(new_lattice.mori_generators);
    auto new_mori_inv = new_mori.inverse();
    if (!new_mori_inv) throw InvalidInputError("new Mori generators are not a basis");
    auto remap = [&](const CurveClass& d) {
        std::vector<Rational> old_gen(q.lattice.rank, Rational(0));
        auto og = q.lattice.to_generator_coords(d);
        for (int i = 0; i < q.lattice.rank; ++i) old_gen[i] = Rational(og[i]);
        std::vector<Rational> new_gen = ginv->apply(old_gen);
        return CurveClass{detail::to_long_vector(new_mori_inv->apply(new_gen))};
    };

    GWTable out;
    out.style = q.gw.style;
    if (q.gw.style != GWStyle::two_point)
        throw InvalidInputError("translate_gw_table supports two-point tables");
    for (const CurveClass& d : q.gw.support()) {
        CurveClass dn = remap(d);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rational v(0);
                for (int u = 0; u < n; ++u) {
                    if (basis_dict[i][u] == 0) continue;
                    for (int w = 0; w < n; ++w) {
                        if (basis_dict[j][w] == 0) continue;
                        Rational t = q.gw.get2(d, u, w);
                        if (t != 0) v += basis_dict[i][u] * basis_dict[j][w] * t;
                    }
                }
                if (v != 0) out.set2(dn, i, j, std::move(v));
            }
    }
    return out;
}

// Full presentation change: ring via change_basis, lattice pairing rows
// recomputed bilinearly, Mori generators rewritten, table translated.
inline QuantumSpec change_presentation(const QuantumSpec& q,
                                       const std::vector<CohClass>& basis_dict,
                                       const std::vector<std::string>& labels,
                                       const LatticeDictionary& lat) {
    QuantumSpec out;
    out.ring = change_basis(q.ring, basis_dict, labels);
    ExactMatrix g = detail::columns_to_matrix(lat.new_generators);
    auto ginv = g.inverse();
    if (!ginv) throw InvalidInputError("lattice dictionary is not invertible");

    CurveLattice nl;
    nl.rank = q.lattice.rank;
    nl.generator_labels = lat.new_generator_labels;
    for (const auto& mg : q.lattice.mori_generators) {
        std::vector<Rational> v(mg.size());
        for (std::size_t i = 0; i < mg.size(); ++i) v[i] = Rational(mg[i]);
        nl.mori_generators.push_back(detail::to_long_vector(ginv->apply(v)));
    }
    // Pairing rows for the new degree-1 basis elements against new generators.
    for (int i = 0; i < out.ring.size(); ++i) {
        if (out.ring.basis.degree(i) != 1) continue;
        std::vector<long> row(nl.rank);
        for (int gi = 0; gi < nl.rank; ++gi) {
            // new generator gi in old generator coords -> old Mori coords.
            ExactMatrix old_mori = detail::columns_to_matrix(q.lattice.mori_generators);
            auto old_mori_inv = old_mori.inverse();
            if (!old_mori_inv) throw InvalidInputError("old Mori generators are not a basis");
            std::vector<Rational> gen(nl.rank);
            for (int t = 0; t < nl.rank; ++t) gen[t] = Rational(lat.new_generators[gi][t]);
            CurveClass d{detail::to_long_vector(old_mori_inv->apply(gen))};
            Rational val = intersect(q, basis_dict[i], d);
            if (!is_integer(val)) throw InvalidInputError("non-integer divisor pairing");
            row[gi] = long(val.get_num().get_si());
        }
        nl.divisor_pairing[i] = row;
    }
    out.lattice = nl;
    out.gw = translate_gw_table(q, basis_dict, lat, nl);
    return out;
}

}  // namespace qcoh

#endif
