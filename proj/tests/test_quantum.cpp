#include <gtest/gtest.h>

#include <algorithm>

#include "qcoh/catalog.hpp"

using namespace qcoh;

TEST(Quantum, IntersectionNumbers) {
    QuantumSpec q = builtin("bl-p0-q4").quantum_spec;
    CurveClass le{{1, 0}}, e{{0, 1}}, l{{1, 1}};
    CohClass H = q.ring.make_class({{"H", 1}});
    CohClass E = q.ring.make_class({{"E0", 1}});
    EXPECT_EQ(intersect(q, H, l), Rational(1));
    EXPECT_EQ(intersect(q, H, le), Rational(1));
    EXPECT_EQ(intersect(q, H, e), Rational(0));
    EXPECT_EQ(intersect(q, E, e), Rational(-1));
    EXPECT_EQ(intersect(q, E, le), Rational(1));
    EXPECT_EQ(intersect(q, q.ring.c1, le), Rational(1));  // c1.(l-e) = 1
    EXPECT_EQ(intersect(q, q.ring.c1, e), Rational(3));
    EXPECT_THROW(intersect(q, q.ring.make_class({{"P0", 1}}), e), InvalidInputError);
}

TEST(Quantum, ComputedFanoIndices) {
    EXPECT_EQ(computed_fano_index(builtin("bl-p0-q4").quantum_spec), 1);
    EXPECT_EQ(computed_fano_index(builtin("bl-p2-q4").quantum_spec), 1);
    EXPECT_EQ(computed_fano_index(builtin("bl-p0-q4-prime").quantum_spec), 1);
    EXPECT_EQ(computed_fano_index(builtin("q4").quantum_spec), 4);
    EXPECT_EQ(computed_fano_index(builtin("pn-3").quantum_spec), 4);
}

TEST(Quantum, AdmissibleDegreesAndSupport) {
    QuantumSpec q = builtin("bl-p0-q4").quantum_spec;
    auto adm = admissible_two_point_degrees(q);
    auto has = [&](std::vector<long> c) {
        return std::find(adm.begin(), adm.end(), CurveClass{c}) != adm.end();
    };
    EXPECT_TRUE(has({1, 0}) && has({0, 1}) && has({1, 1}) && has({2, 1}));
    EXPECT_FALSE(has({0, 2}));  // c1.(2e) = 6 > dim + 1
    EXPECT_FALSE(has({0, 0}));

    // The stored table is supported exactly on {l-e, e, l, 2l-e}.
    auto support = q.gw.support();
    std::sort(support.begin(), support.end());
    std::vector<CurveClass> want = {{{0, 1}}, {{1, 0}}, {{1, 1}}, {{2, 1}}};
    EXPECT_EQ(support, want);

    // bl-p2-q4: support within {e, l-e, l}; degree l+e is admissible but valueless.
    QuantumSpec q2 = builtin("bl-p2-q4").quantum_spec;
    auto adm2 = admissible_two_point_degrees(q2);
    EXPECT_TRUE(std::find(adm2.begin(), adm2.end(), CurveClass{{1, 2}}) != adm2.end());
    for (const auto& d : q2.gw.support()) {
        bool known = d == CurveClass{{0, 1}} || d == CurveClass{{1, 0}} || d == CurveClass{{1, 1}};
        EXPECT_TRUE(known) << d.str();
    }
}

TEST(Quantum, AuditAcceptsBuiltinsRejectsCorruptions) {
    for (const auto& id : builtin_ids())
        EXPECT_TRUE(audit_gw_table(builtin(id).quantum_spec).pass()) << id;

    QuantumSpec q = builtin("bl-p0-q4").quantum_spec;
    int h4 = *q.ring.basis.index_of("h4");
    QuantumSpec bad_balance = q;
    bad_balance.gw.set2(CurveClass{{0, 1}}, h4, h4, 1);  // sum deg 8 != 3 + c1.e
    EXPECT_FALSE(audit_gw_table(bad_balance).pass());

    QuantumSpec bad_cone = q;
    bad_cone.gw.set2(CurveClass{{-1, 1}}, h4, h4, 1);
    EXPECT_FALSE(audit_gw_table(bad_cone).pass());

    QuantumSpec bad_budget = q;
    int u = *q.ring.basis.index_of("1");
    bad_budget.gw.set2(CurveClass{{0, 2}}, u, u, 1);
    EXPECT_FALSE(audit_gw_table(bad_budget).pass());
}

TEST(Quantum, DivisorAxiom) {
    QuantumSpec q = builtin("bl-p0-q4").quantum_spec;
    CurveClass le{{1, 0}};
    int P = *q.ring.basis.index_of("P0");
    CohClass H = q.ring.make_class({{"H", 1}});
    CohClass E = q.ring.make_class({{"E0", 1}});
    // <D, P0, P0>_{l-e} = (D . (l-e)) * 2
    EXPECT_EQ(three_point_divisor(q, H, P, P, le), Rational(2));
    EXPECT_EQ(three_point_divisor(q, E, P, P, le), Rational(2));
    EXPECT_EQ(three_point_divisor(q, q.ring.c1, P, P, CurveClass{{0, 1}}), Rational(0));
    EXPECT_THROW(three_point_divisor(q, H, P, P, CurveClass{{0, 0}}), InvalidInputError);
    EXPECT_THROW(three_point_divisor(q, H, P, P, CurveClass{{-1, 0}}), InvalidInputError);
}

TEST(Quantum, OperatorMatricesMatchExpected) {
    for (const auto& id : {"bl-p0-q4", "bl-p2-q4"}) {
        ManifoldEntry ent = builtin(id);
        ExactMatrix m = c1_operator_matrix(ent.quantum_spec, *ent.distinguished_basis);
        EXPECT_EQ(m, *ent.expected->operator_matrix) << id;
    }
}

TEST(Quantum, Q4OperatorColumns) {
    // c1 * b_j for the three-point table: the operator is 4x the cyclic-ish
    // structure with the quantum correction h3 -> 4*h4 + 4*1 and h4 -> 4H.
    QuantumSpec q = builtin("q4").quantum_spec;
    ExactMatrix m = c1_operator_matrix(q);
    ExactMatrix want = ExactMatrix::from_long(6, 6,
                                              {0, 0, 0, 0, 4, 0,    //
                                               4, 0, 0, 0, 0, 4,    //
                                               0, 4, 0, 0, 0, 0,    //
                                               0, 4, 0, 0, 0, 0,    //
                                               0, 0, 4, 4, 0, 0,    //
                                               0, 0, 0, 0, 4, 0});
    EXPECT_EQ(m, want);
}

TEST(Quantum, PnOperator) {
    QuantumSpec q = builtin("pn-2").quantum_spec;
    ExactMatrix m = c1_operator_matrix(q);
    // 3 * cyclic shift: H * H^i = H^{i+1}, H * H^2 = q * 1 at q = 1.
    ExactMatrix want = ExactMatrix::from_long(3, 3, {0, 0, 3, 3, 0, 0, 0, 3, 0});
    EXPECT_EQ(m, want);
}

TEST(Quantum, QuantumProductSymmetric) {
    // (c1 * a, b) = (a, c1 * b): quantum multiplication is self-adjoint for
    // the Poincare pairing.
    for (const auto& id : {"bl-p0-q4", "bl-p2-q4", "q4"}) {
        QuantumSpec q = builtin(id).quantum_spec;
        Pairing p = pairing_matrix(q.ring);
        int n = q.ring.size();
        for (int a = 0; a < n; ++a) {
            CohClass ca = quantum_product_c1_at_one(q, q.ring.basis_class(a));
            for (int b = 0; b < n; ++b) {
                CohClass cb = quantum_product_c1_at_one(q, q.ring.basis_class(b));
                Rational lhs(0), rhs(0);
                for (int k = 0; k < n; ++k) {
                    lhs += ca[k] * p.matrix.at(k, b);
                    rhs += cb[k] * p.matrix.at(k, a);
                }
                EXPECT_EQ(lhs, rhs) << id;
            }
        }
    }
}

TEST(Quantum, PresentationChangeInvariants) {
    ManifoldEntry base = builtin("bl-p0-q4");
    ManifoldEntry prime = builtin("bl-p0-q4-prime");
    EXPECT_TRUE(validate_ring(prime.quantum_spec.ring).pass());
    EXPECT_TRUE(audit_gw_table(prime.quantum_spec).pass());

    // Same characteristic polynomial in any presentation and any basis.
    Polynomial p_base = char_poly(c1_operator_matrix(base.quantum_spec));
    Polynomial p_hat =
        char_poly(c1_operator_matrix(base.quantum_spec, *base.distinguished_basis));
    Polynomial p_prime = char_poly(c1_operator_matrix(prime.quantum_spec));
    EXPECT_EQ(p_base, p_hat);
    EXPECT_EQ(p_base, p_prime);

    // The degree-e' part of the prime table is exactly two entries.
    const RingSpec& r = prime.quantum_spec.ring;
    CurveClass ep{{1, 0}};  // first Mori generator of the prime presentation is e'
    EXPECT_EQ(prime.quantum_spec.gw.get2(ep, *r.basis.index_of("E'"), *r.basis.index_of("F'")),
              Rational(1));
    EXPECT_EQ(prime.quantum_spec.gw.get2(ep, *r.basis.index_of("S+'"), *r.basis.index_of("S-'")),
              Rational(1));
    int at_ep = 0;
    for (const auto& [k, v] : prime.quantum_spec.gw.two_point)
        if (k.first == ep) ++at_ep;
    EXPECT_EQ(at_ep, 2);

    // c1 = 5H' - E' in the prime presentation.
    EXPECT_EQ(prime.quantum_spec.ring.c1, r.make_class({{"H'", 5}, {"E'", -1}}));
}

TEST(Quantum, TranslateRejectsNonInvertibleDictionaries) {
    QuantumSpec q = builtin("bl-p0-q4").quantum_spec;
    std::vector<CohClass> dict;
    for (int i = 0; i < q.ring.size(); ++i) dict.push_back(q.ring.basis_class(i));
    LatticeDictionary lat;
    lat.new_generator_labels = {"a", "b"};
    lat.new_generators = {{1, 1}, {1, 1}};
    EXPECT_THROW(change_presentation(q, dict, {}, lat), InvalidInputError);
}
