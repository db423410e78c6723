#include <gtest/gtest.h>

#include "qcoh/catalog.hpp"

using namespace qcoh;

namespace {

RingSpec p2_ring() {
    RingSpec r;
    r.name = "p2";
    r.dim = 2;
    r.fano_index = 3;
    r.basis.elements = {{"1", 0}, {"H", 1}, {"H2", 2}};
    r.cup.set(0, 0, 0, 1);
    r.cup.set(0, 1, 1, 1);
    r.cup.set(0, 2, 2, 1);
    r.cup.set(1, 1, 2, 1);
    r.c1 = CohClass({Rational(0), Rational(3), Rational(0)});
    return r;
}

}  // namespace

TEST(Ring, ValidateBuiltinsExhaustively) {
    // Direct exhaustive associativity/duality audit over all basis triples.
    for (const auto& id : builtin_ids()) {
        RingReport rep = validate_ring(builtin(id).quantum_spec.ring);
        EXPECT_TRUE(rep.pass()) << id << ": " << (rep.violations.empty() ? "" : rep.violations[0]);
    }
}

TEST(Ring, CupBilinearity) {
    RingSpec r = builtin("bl-p0-q4").quantum_spec.ring;
    CohClass a = r.make_class({{"H", 2}, {"E0", -1}});
    CohClass b = r.make_class({{"w+", 1}, {"P0", 3}});
    CohClass lhs = cup(r, a, b);
    CohClass rhs(r.size());
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j) {
            Rational f = a[i] * b[j];
            if (f != 0) rhs = rhs + f * cup(r, r.basis_class(i), r.basis_class(j));
        }
    EXPECT_EQ(lhs, rhs);
}

TEST(Ring, IntegralReadsPointClass) {
    RingSpec r = builtin("q4").quantum_spec.ring;
    // w . w = h4 (the point class, integral 1); w+ . w- = 0
    int wp = *r.basis.index_of("w+"), wm = *r.basis.index_of("w-");
    EXPECT_EQ(integral(r, cup(r, r.basis_class(wp), r.basis_class(wp))), Rational(1));
    EXPECT_EQ(integral(r, cup(r, r.basis_class(wp), r.basis_class(wm))), Rational(0));
    int H = *r.basis.index_of("H");
    CohClass h2 = cup(r, r.basis_class(H), r.basis_class(H));
    EXPECT_EQ(integral(r, cup(r, h2, h2)), Rational(2));  // H^4 = 2 [pt]
}

TEST(Ring, DualBasisReproducesDelta) {
    for (const auto& id : {"q4", "bl-p0-q4", "bl-p2-q4"}) {
        RingSpec r = builtin(id).quantum_spec.ring;
        auto dual = dual_basis(r);
        Pairing p = pairing_matrix(r);
        for (int i = 0; i < r.size(); ++i)
            for (int j = 0; j < r.size(); ++j) {
                Rational pair(0);
                for (int k = 0; k < r.size(); ++k) pair += p.matrix.at(i, k) * dual[j][k];
                EXPECT_EQ(pair, Rational(i == j ? 1 : 0)) << id;
            }
    }
}

TEST(Ring, PairingUnimodular) {
    for (const auto& id : {"q4", "bl-p0-q4", "bl-p2-q4"}) {
        Pairing p = pairing_matrix(builtin(id).quantum_spec.ring);
        Rational det = p.matrix.determinant();
        EXPECT_TRUE(det == 1 || det == -1) << id;
    }
}

TEST(Ring, ValidatorCatchesCorruptions) {
    RingSpec good = p2_ring();
    EXPECT_TRUE(validate_ring(good).pass());

    RingSpec grading = good;
    grading.cup.set(1, 1, 1, 1);  // degree 1+1 -> 1 violates grading
    EXPECT_FALSE(validate_ring(grading).pass());

    RingSpec assoc = builtin("bl-p0-q4").quantum_spec.ring;
    assoc.cup.set(*assoc.basis.index_of("E0"), *assoc.basis.index_of("E0"),
                  *assoc.basis.index_of("P0"), 1);  // flip E0^2 = -P0
    RingReport rep = validate_ring(assoc);
    EXPECT_FALSE(rep.pass());

    RingSpec singular = good;
    singular.cup.set(1, 1, 2, 0);  // erase H.H = H2: pairing degenerates
    RingReport srep = validate_ring(singular);
    EXPECT_FALSE(srep.pass());
    bool names_pairing = false;
    for (const auto& v : srep.violations)
        if (v.find("pairing") != std::string::npos) names_pairing = true;
    EXPECT_TRUE(names_pairing);

    RingSpec badc1 = good;
    badc1.c1 = badc1.make_class({{"H", 1}, {"H2", 1}});
    EXPECT_FALSE(validate_ring(badc1).pass());
}

TEST(Ring, ChangeBasisRoundTrip) {
    RingSpec r = builtin("bl-p0-q4").quantum_spec.ring;
    int n = r.size();
    // Unimodular upper-triangular change within each degree.
    std::vector<CohClass> dict;
    for (int i = 0; i < n; ++i) dict.push_back(r.basis_class(i));
    dict[2] = r.make_class({{"w+", 1}, {"w-", 1}});  // replace w+ by w+ + w-
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(r.basis.label(i) + "~");
    RingSpec changed = change_basis(r, dict, labels);
    EXPECT_TRUE(validate_ring(changed).pass());

    // Invert the dictionary and come back.
    ExactMatrix d(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) d.at(i, j) = dict[j][i];
    auto dinv = d.inverse();
    ASSERT_TRUE(dinv);
    std::vector<CohClass> back(n, CohClass(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) back[j][i] = dinv->at(i, j);
    std::vector<std::string> orig_labels;
    for (int i = 0; i < n; ++i) orig_labels.push_back(r.basis.label(i));
    RingSpec round = change_basis(changed, back, orig_labels);
    EXPECT_EQ(round.cup.entries, r.cup.entries);
    EXPECT_EQ(round.c1, r.c1);
}

TEST(Ring, ChangeBasisRejectsBadDictionaries) {
    RingSpec r = p2_ring();
    std::vector<CohClass> non_invertible = {r.basis_class(0), r.basis_class(1), r.basis_class(1)};
    EXPECT_THROW(change_basis(r, non_invertible), InvalidInputError);
    std::vector<CohClass> mixed = {r.basis_class(0),
                                   r.make_class({{"H", 1}, {"H2", 1}}),  // not homogeneous
                                   r.basis_class(2)};
    EXPECT_THROW(change_basis(r, mixed), InvalidInputError);
    std::vector<CohClass> fractional = {r.basis_class(0), Rational(1, 2) * r.basis_class(1),
                                        r.basis_class(2)};
    EXPECT_THROW(change_basis(r, fractional), InvalidInputError);
}

TEST(Ring, PointIndexAndDegrees) {
    RingSpec r = builtin("bl-p2-q4").quantum_spec.ring;
    EXPECT_EQ(r.basis.label(r.point_index()), "h4");
    EXPECT_EQ(r.pure_degree(r.c1), 1);
    EXPECT_FALSE(r.pure_degree(r.make_class({{"H", 1}, {"S2", 1}})));
    EXPECT_FALSE(r.pure_degree(CohClass(r.size())));  // zero class has no degree
}
