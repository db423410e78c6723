#ifndef QCOH_CATALOG_HPP
#define QCOH_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcoh/quantum.hpp"

namespace qcoh {

// Known expected results a catalog entry can carry for self-testing.
struct ExpectedResults {
    std::optional<ExactMatrix> operator_matrix;  // in the distinguished basis
    std::optional<int> positive_power;
    std::optional<int> odd_positive_power;
    std::optional<bool> conjecture_o;
    std::optional<bool> galkin;
    std::optional<bool> galkin_equality;
    std::optional<bool> exceeds_4sqrt2;
};

struct ManifoldEntry {
    std::string id;
    std::string description;
    QuantumSpec quantum_spec;
    // The operator basis B-hat, when one is distinguished from the ring basis.
    std::optional<std::vector<CohClass>> distinguished_basis;
    std::optional<ExpectedResults> expected;
};

namespace detail {

// Shared H^even(Q4) part of the three quadric-based entries: the unit, the
// hyperplane class H, the two middle classes w+/w- with w+.w- = 0 and
// w.w = 1/2 H^4, and the normalized top classes h3 = 1/2 H^3, h4 = 1/2 H^4
// (so h4 is the point class with integral 1).
inline void add_quadric_part(RingSpec& r) {
    r.basis.elements.insert(r.basis.elements.begin(),
                            {{"1", 0}, {"H", 1}, {"w+", 2}, {"w-", 2}, {"h3", 3}, {"h4", 4}});
    auto ix = [&](const char* l) { return *r.basis.index_of(l); };
    int u = ix("1"), H = ix("H"), wp = ix("w+"), wm = ix("w-"), h3 = ix("h3"), h4 = ix("h4");
    for (int i = 0; i < r.size(); ++i) r.cup.set(u, i, i, 1);
    r.cup.set(H, H, wp, 1);
    r.cup.set(H, H, wm, 1);
    r.cup.set(H, wp, h3, 1);
    r.cup.set(H, wm, h3, 1);
    r.cup.set(H, h3, h4, 1);
    r.cup.set(wp, wp, h4, 1);
    r.cup.set(wm, wm, h4, 1);
}

inline void add_blowup_lattice(QuantumSpec& q, const char* exceptional) {
    q.lattice.rank = 2;
    q.lattice.generator_labels = {"l", "e"};
    // Mori cone generated by the strict-transform class l - e and the
    // exceptional-fiber class e, both in (l, e) coordinates.
    q.lattice.mori_generators = {{1, -1}, {0, 1}};
    q.lattice.divisor_pairing[*q.ring.basis.index_of("H")] = {1, 0};
    q.lattice.divisor_pairing[*q.ring.basis.index_of(exceptional)] = {0, -1};
}

inline ManifoldEntry make_q4() {
    ManifoldEntry ent;
    ent.id = "q4";
    ent.description = "smooth four-dimensional quadric, three-point invariants";
    QuantumSpec& q = ent.quantum_spec;
    RingSpec& r = q.ring;
    r.name = "q4";
    r.dim = 4;
    r.fano_index = 4;
    add_quadric_part(r);
    r.c1 = r.make_class({{"H", 4}});

    q.lattice.rank = 1;
    q.lattice.generator_labels = {"l"};
    q.lattice.mori_generators = {{1}};
    q.lattice.divisor_pairing[*r.basis.index_of("H")] = {1};

    auto ix = [&](const char* l) { return *r.basis.index_of(l); };
    int H = ix("H"), wp = ix("w+"), wm = ix("w-"), h3 = ix("h3"), h4 = ix("h4");
    q.gw.style = GWStyle::three_point;
    CurveClass l{{1}}, l2{{2}};
    q.gw.set3(l, H, h3, h4, 1);
    q.gw.set3(l, wp, wm, h4, 1);
    q.gw.set3(l, wp, h3, h3, 1);
    q.gw.set3(l, wm, h3, h3, 1);
    q.gw.set3(l2, h4, h4, h4, 1);

    ExpectedResults ex;
    ex.conjecture_o = true;
    ex.galkin = true;
    ex.exceeds_4sqrt2 = false;  // the radius equals the threshold exactly
    ent.expected = ex;
    return ent;
}

inline ManifoldEntry make_bl_p0() {
    ManifoldEntry ent;
    ent.id = "bl-p0-q4";
    ent.description = "blow-up of the four-dimensional quadric at a point";
    QuantumSpec& q = ent.quantum_spec;
    RingSpec& r = q.ring;
    r.name = "bl-p0-q4";
    r.dim = 4;
    r.fano_index = 1;
    r.basis.elements = {{"E0", 1}, {"P0", 2}, {"L0", 3}};
    add_quadric_part(r);
    auto ix = [&](const char* l) { return *r.basis.index_of(l); };
    int E = ix("E0"), P = ix("P0"), L = ix("L0"), h4 = ix("h4");
    // Exceptional part: E0^2 = -P0, E0.P0 = -L0, E0.L0 = P0^2 = -h4; the
    // pulled-back classes multiply trivially against it.
    r.cup.set(E, E, P, -1);
    r.cup.set(E, P, L, -1);
    r.cup.set(E, L, h4, -1);
    r.cup.set(P, P, h4, -1);
    r.c1 = r.make_class({{"H", 4}, {"E0", -3}});
    add_blowup_lattice(q, "E0");

    int H = ix("H"), wp = ix("w+"), wm = ix("w-"), h3 = ix("h3");
    CurveClass le{{1, 0}}, e{{0, 1}}, l{{1, 1}}, tle{{2, 1}};
    q.gw.set2(le, P, P, 2);
    q.gw.set2(le, H, L, 2);
    q.gw.set2(le, E, L, 2);
    q.gw.set2(le, P, wp, 1);
    q.gw.set2(le, P, wm, 1);
    q.gw.set2(le, wp, wm, 1);
    q.gw.set2(le, H, h3, 1);
    q.gw.set2(le, E, h3, 1);
    q.gw.set2(e, L, L, 1);
    q.gw.set2(l, h3, h4, 1);
    q.gw.set2(tle, h4, h4, 1);

    ent.distinguished_basis = {
        r.make_class({{"1", 1}}),
        r.make_class({{"H", 1}}),
        r.make_class({{"H", 1}, {"E0", -1}}),
        r.make_class({{"w+", 1}}),
        r.make_class({{"w-", 1}}),
        r.make_class({{"w+", 1}, {"w-", 1}, {"P0", -1}}),
        r.make_class({{"h3", 1}}),
        r.make_class({{"h3", 1}, {"L0", -1}}),
        r.make_class({{"h4", 1}}),
    };

    ExpectedResults ex;
    ex.operator_matrix = ExactMatrix::from_long(
        9, 9,
        {0, 0, 0, 0, 0, 0, 4, 4, 5,   //
         1, -1, 0, 0, 0, 0, 0, 3, 4,  //
         3, 2, 0, 0, 0, 0, 0, -3, 0,  //
         0, 4, 1, -1, 0, 0, 0, 0, 0,  //
         0, 4, 1, 0, -1, 0, 0, 0, 0,  //
         0, 0, 3, 1, 1, 0, 0, 0, 0,   //
         0, 0, 0, 4, 4, 5, 0, 0, 0,   //
         0, 0, 0, 0, 0, 3, 1, -1, 0,  //
         0, 0, 0, 0, 0, 0, 4, 1, 0});
    ex.positive_power = 16;
    ex.odd_positive_power = 17;
    ex.conjecture_o = true;
    ex.galkin = true;
    ex.exceeds_4sqrt2 = true;
    ent.expected = ex;
    return ent;
}

inline ManifoldEntry make_bl_p2() {
    ManifoldEntry ent;
    ent.id = "bl-p2-q4";
    ent.description = "blow-up of the four-dimensional quadric along a plane";
    QuantumSpec& q = ent.quantum_spec;
    RingSpec& r = q.ring;
    r.name = "bl-p2-q4";
    r.dim = 4;
    r.fano_index = 1;
    r.basis.elements = {{"E2", 1}, {"S2", 2}, {"L2", 3}};
    add_quadric_part(r);
    auto ix = [&](const char* l) { return *r.basis.index_of(l); };
    int H = ix("H"), wp = ix("w+"), h3 = ix("h3"), h4 = ix("h4");
    int E = ix("E2"), S = ix("S2"), L = ix("L2");
    r.cup.set(H, E, S, 1);
    r.cup.set(H, S, L, 1);
    r.cup.set(wp, E, L, 1);
    r.cup.set(E, E, wp, -1);
    r.cup.set(E, E, S, 1);
    r.cup.set(E, S, h3, -1);
    r.cup.set(E, S, L, 1);
    r.cup.set(E, L, h4, -1);
    r.cup.set(S, S, h4, -1);
    r.c1 = r.make_class({{"H", 4}, {"E2", -1}});
    add_blowup_lattice(q, "E2");

    int wm = ix("w-");
    CurveClass le{{1, 0}}, e{{0, 1}}, l{{1, 1}};
    q.gw.set2(e, E, L, 1);
    q.gw.set2(e, S, S, 1);
    q.gw.set2(le, wm, h4, 1);
    q.gw.set2(le, S, h4, 1);
    q.gw.set2(le, h3, h3, 1);
    q.gw.set2(le, h3, L, 1);
    q.gw.set2(le, L, L, 1);
    q.gw.set2(l, h3, h4, 1);

    ent.distinguished_basis = {
        r.make_class({{"1", 1}}),
        r.make_class({{"H", 1}}),
        r.make_class({{"H", 1}, {"E2", -1}}),
        r.make_class({{"w+", 1}}),
        r.make_class({{"w-", 1}}),
        r.make_class({{"w-", 1}, {"S2", -1}}),
        r.make_class({{"h3", 1}}),
        r.make_class({{"h3", 1}, {"L2", -1}}),
        r.make_class({{"h4", 1}}),
    };

    ExpectedResults ex;
    ex.operator_matrix = ExactMatrix::from_long(
        9, 9,
        {0, 0, 0, 0, 3, 0, 4, 4, 0,   //
         3, 0, 1, 0, 0, 0, 0, 0, 4,   //
         1, 0, -1, 0, 0, 0, 3, 0, 0,  //
         0, 4, 3, 0, 0, 0, 0, 0, 0,   //
         0, 3, 0, 0, 0, 1, 0, 0, 0,   //
         0, 1, 4, 0, 0, -1, 0, 0, 3,  //
         0, 0, 0, 3, 4, 0, 0, 1, 0,   //
         0, 0, 0, 1, 0, 3, 0, -1, 0,  //
         0, 0, 0, 0, 0, 0, 4, 3, 0});
    ex.positive_power = 12;
    ex.odd_positive_power = 13;
    ex.conjecture_o = true;
    ex.galkin = true;
    ex.exceeds_4sqrt2 = true;
    ent.expected = ex;
    return ent;
}

// The alternative presentation of the point blow-up: new basis expressed
// over the bl-p0-q4 basis, and new lattice generators l' = 2l - e (the
// pullback of a conic through the centre) and e' = l - e.
inline std::vector<CohClass> prime_dictionary(const RingSpec& r) {
    return {
        r.make_class({{"1", 1}}),
        r.make_class({{"H", 1}, {"E0", -1}}),
        r.make_class({{"w+", 1}, {"w-", 1}, {"P0", -1}}),
        r.make_class({{"h3", 2}, {"L0", -1}}),
        r.make_class({{"h4", 1}}),
        r.make_class({{"H", 1}, {"E0", -2}}),
        r.make_class({{"w+", 1}, {"P0", -1}}),
        r.make_class({{"w-", 1}, {"P0", -1}}),
        r.make_class({{"h3", 1}, {"L0", -1}}),
    };
}

inline std::vector<std::string> prime_labels() {
    return {"1", "H'", "H'2", "H'3", "H'4", "E'", "S+'", "S-'", "F'"};
}

inline LatticeDictionary prime_lattice_dictionary() {
    LatticeDictionary lat;
    lat.new_generator_labels = {"l'", "e'"};
    lat.new_generators = {{2, -1}, {1, -1}};  // columns in (l, e) coordinates
    return lat;
}

inline ManifoldEntry make_bl_p0_prime() {
    ManifoldEntry ent;
    ent.id = "bl-p0-q4-prime";
    ent.description =
        "blow-up of the four-dimensional quadric at a point, "
        "presented over the divisor basis {H', E'}";
    ManifoldEntry base = make_bl_p0();
    std::vector<CohClass> dict = prime_dictionary(base.quantum_spec.ring);
    ent.quantum_spec = change_presentation(base.quantum_spec, dict, prime_labels(),
                                           prime_lattice_dictionary());
    ent.quantum_spec.ring.name = "bl-p0-q4-prime";

    // Distinguished basis: the image of the base entry's operator basis, so
    // the printed operator is the same matrix in either presentation.
    int n = base.quantum_spec.ring.size();
    ExactMatrix d(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) d.at(i, j) = dict[j][i];
    ExactMatrix dinv = *d.inverse();
    std::vector<CohClass> hat;
    for (const CohClass& c : *base.distinguished_basis)
        hat.push_back(CohClass(dinv.apply(c.coeff)));
    ent.distinguished_basis = std::move(hat);
    ent.expected = base.expected;
    return ent;
}

inline ManifoldEntry make_pn(int n) {
    ManifoldEntry ent;
    ent.id = "pn-" + std::to_string(n);
    ent.description = "projective space of dimension " + std::to_string(n);
    QuantumSpec& q = ent.quantum_spec;
    RingSpec& r = q.ring;
    r.name = ent.id;
    r.dim = n;
    r.fano_index = n + 1;
    for (int i = 0; i <= n; ++i)
        r.basis.elements.push_back({i == 0 ? "1" : "H^" + std::to_string(i), i});
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (i + j <= n) r.cup.set(i, j, i + j, 1);
    r.c1 = CohClass(n + 1);
    r.c1[1] = n + 1;
    q.lattice.rank = 1;
    q.lattice.generator_labels = {"l"};
    q.lattice.mori_generators = {{1}};
    q.lattice.divisor_pairing[1] = {1};
    q.gw.set2(CurveClass{{1}}, n, n, 1);

    ExpectedResults ex;
    ex.conjecture_o = true;
    ex.galkin = true;
    ex.galkin_equality = true;
    ent.expected = ex;
    return ent;
}

}  // namespace detail

inline std::vector<std::string> builtin_ids() {
    return {"q4", "bl-p0-q4", "bl-p0-q4-prime", "bl-p2-q4", "pn-1", "pn-2", "pn-3", "pn-4"};
}

inline ManifoldEntry builtin(const std::string& id) {
    if (id == "q4") return detail::make_q4();
    if (id == "bl-p0-q4") return detail::make_bl_p0();
    if (id == "bl-p0-q4-prime") return detail::make_bl_p0_prime();
    if (id == "bl-p2-q4") return detail::make_bl_p2();
    if (id.rfind("pn-", 0) == 0 && id.size() == 4 && id[3] >= '1' && id[3] <= '4')
        return detail::make_pn(id[3] - '0');
    throw NotFoundError("unknown catalog id: " + id);
}

}  // namespace qcoh

#endif
