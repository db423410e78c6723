#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qcoh/catalog.hpp"
#include "qcoh/spectra.hpp"

using namespace qcoh;

namespace {

Eigen::MatrixXd to_double(const ExactMatrix& m) {
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = m.at(i, j).get_d();
    return d;
}

// Numeric spectral radius; oracle only, never feeds a verdict.
double numeric_radius(const ExactMatrix& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_double(m));
    double r = 0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
        r = std::max(r, std::abs(solver.eigenvalues()[i]));
    return r;
}

ExactMatrix blowup_operator(const std::string& id) {
    ManifoldEntry ent = builtin(id);
    return c1_operator_matrix(ent.quantum_spec, *ent.distinguished_basis);
}

}  // namespace

TEST(Spectra, PerronPathOnBlowups) {
    for (const auto& id : {"bl-p0-q4", "bl-p2-q4"}) {
        ExactMatrix m = blowup_operator(id);
        RadiusBound rb = spectral_radius(m);
        EXPECT_EQ(rb.provenance, RadiusProvenance::perron_odd_power) << id;
        EXPECT_TRUE(rb.is_simple) << id;
        EXPECT_FALSE(rb.exact) << id;  // the dominant root is irrational of degree > 2

        // Certified interval brackets the independent numeric eigensolve.
        double numeric = numeric_radius(m);
        EXPECT_GT(numeric, rb.interval.lo.get_d() - 1e-9) << id;
        EXPECT_LT(numeric, rb.interval.hi.get_d() + 1e-9) << id;
    }
    ExactMatrix m0 = blowup_operator("bl-p0-q4");
    RadiusBound rb0 = spectral_radius(m0);
    EXPECT_EQ(rb0.perron_power, 17);
    // rho(X0) ~ 6.3258 from the numeric oracle, frozen to 4 decimals.
    EXPECT_NEAR(rb0.interval.midpoint().get_d(), 6.3258, 5e-4);
}

TEST(Spectra, BinomialPathQ4) {
    ExactMatrix m = c1_operator_matrix(builtin("q4").quantum_spec);
    RadiusBound rb = spectral_radius(m);
    EXPECT_EQ(rb.provenance, RadiusProvenance::binomial);
    ASSERT_TRUE(rb.exact);
    EXPECT_EQ(*rb.exact, QuadExt(Rational(0), Rational(4), 2));
    EXPECT_TRUE(rb.is_simple);
    // relative interval width well under 1e-10
    EXPECT_LT(rb.interval.width() * Rational(10000000000L), rb.interval.hi);

    // Every top-modulus eigenvalue satisfies lambda^4 = 1024: cross-check the
    // whole numeric spectrum against the exact factorization x^2 (x^4 - 1024).
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_double(m));
    int top = 0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        std::complex<double> lam = solver.eigenvalues()[i];
        if (std::abs(lam) < 1.0) {
            EXPECT_LT(std::abs(lam), 1e-6);  // the double zero eigenvalue
            continue;
        }
        ++top;
        EXPECT_NEAR(std::abs(std::pow(lam, 4) - std::complex<double>(1024.0)), 0.0, 1e-6);
    }
    EXPECT_EQ(top, 4);
}

TEST(Spectra, BinomialPathPn) {
    for (int n = 1; n <= 4; ++n) {
        ExactMatrix m = c1_operator_matrix(builtin("pn-" + std::to_string(n)).quantum_spec);
        Polynomial p = char_poly(m);
        // x^{n+1} - (n+1)^{n+1}
        Rational c = 1;
        for (int i = 0; i <= n; ++i) c *= n + 1;
        EXPECT_EQ(p, Polynomial::monomial(n + 1) - Polynomial::constant(c));
        RadiusBound rb = spectral_radius(m);
        ASSERT_TRUE(rb.exact);
        EXPECT_EQ(*rb.exact, QuadExt(Rational(n + 1)));
    }
}

TEST(Spectra, ConjectureOPaths) {
    // Perron path, any index.
    EXPECT_EQ(check_conjecture_o(blowup_operator("bl-p0-q4"), 1).status,
              VerdictStatus::certified_true);
    // Binomial path: n | s.
    ExactMatrix q4 = c1_operator_matrix(builtin("q4").quantum_spec);
    EXPECT_EQ(check_conjecture_o(q4, 4).status, VerdictStatus::certified_true);
    // Binomial path with n not dividing s: part (2) fails.
    EXPECT_EQ(check_conjecture_o(q4, 3).status, VerdictStatus::certified_false);
    // No real eigenvalue at all: rho not in the spectrum.
    ExactMatrix rot = ExactMatrix::from_long(2, 2, {0, -1, 1, 0});
    EXPECT_EQ(check_conjecture_o(rot, 1).status, VerdictStatus::certified_false);
    // Reducible diagonal: no positive power and no factorization path, so no
    // certificate either way.
    ExactMatrix diag = ExactMatrix::from_long(2, 2, {2, 0, 0, 1});
    EXPECT_EQ(check_conjecture_o(diag, 1).status, VerdictStatus::inconclusive);
    EXPECT_THROW(check_conjecture_o(q4, 0), InvalidInputError);
}

TEST(Spectra, CertifiedVerdictsCarryExactEvidence) {
    SpectralVerdict v = check_conjecture_o(blowup_operator("bl-p2-q4"), 1);
    EXPECT_EQ(v.status, VerdictStatus::certified_true);
    EXPECT_TRUE(v.has_exact_evidence());
    bool has_power = false;
    for (const auto& e : v.evidence)
        if (e.kind == "positive-power" && e.detail.find("M^13") != std::string::npos)
            has_power = true;
    EXPECT_TRUE(has_power);
}

TEST(Spectra, GalkinPaths) {
    // Strict: both blow-ups exceed dim + 1 = 5.
    EXPECT_EQ(check_galkin(blowup_operator("bl-p0-q4"), 4).status,
              VerdictStatus::certified_true);
    // Equality: projective spaces.
    ExactMatrix p3 = c1_operator_matrix(builtin("pn-3").quantum_spec);
    SpectralVerdict eq = check_galkin(p3, 3);
    EXPECT_EQ(eq.status, VerdictStatus::certified_true);
    bool equality = false;
    for (const auto& e : eq.evidence)
        if (e.kind == "equality") equality = true;
    EXPECT_TRUE(equality);
    // Certified false: a matrix with radius 2 against dim 4.
    ExactMatrix small = ExactMatrix::from_long(2, 2, {1, 1, 1, 1});
    EXPECT_EQ(check_galkin(small, 4).status, VerdictStatus::certified_false);
}

TEST(Spectra, CompareRadiusPaths) {
    QuadExt thr(Rational(0), Rational(4), 2);
    EXPECT_EQ(compare_radius_exceeds(blowup_operator("bl-p0-q4"), thr).status,
              VerdictStatus::certified_true);
    // Equality is not strict excess.
    ExactMatrix q4 = c1_operator_matrix(builtin("q4").quantum_spec);
    EXPECT_EQ(compare_radius_exceeds(q4, thr).status, VerdictStatus::certified_false);
    // Interval refinement path: radius 2 (Perron, irrational-free but the
    // char poly is nonnegative at sqrt(2)) against sqrt(2) and against 3.
    ExactMatrix pos = ExactMatrix::from_long(2, 2, {1, 1, 1, 1});
    EXPECT_EQ(compare_radius_exceeds(pos, QuadExt(Rational(0), Rational(1), 2)).status,
              VerdictStatus::certified_true);
    EXPECT_EQ(compare_radius_exceeds(pos, QuadExt(Rational(3))).status,
              VerdictStatus::certified_false);
}

TEST(Spectra, RietschRadiusGr) {
    // k = 1 and k = n-1: the radius is n exactly.
    for (int n = 2; n <= 9; ++n) {
        RadiusBound r1 = rietsch_radius_gr(1, n);
        ASSERT_TRUE(r1.exact);
        EXPECT_EQ(*r1.exact, QuadExt(Rational(n)));
        RadiusBound r2 = rietsch_radius_gr(n - 1, n);
        ASSERT_TRUE(r2.exact);
        EXPECT_EQ(*r2.exact, QuadExt(Rational(n)));
    }
    // Quadratic cases: 2 cos(pi/n) ratios for n = 4, 5, 6.
    EXPECT_EQ(*rietsch_radius_gr(2, 4).exact, QuadExt(Rational(0), Rational(4), 2));
    EXPECT_EQ(*rietsch_radius_gr(2, 5).exact, QuadExt(Rational(5, 2), Rational(5, 2), 5));
    EXPECT_EQ(*rietsch_radius_gr(2, 6).exact, QuadExt(Rational(0), Rational(6), 3));
    // Certified interval agrees with direct evaluation where no exact form exists.
    RadiusBound r37 = rietsch_radius_gr(3, 7);
    EXPECT_FALSE(r37.exact);
    EXPECT_LT(r37.interval.width(), Rational(1, 1000000));
    double want = 7.0 * std::sin(3 * M_PI / 7) / std::sin(M_PI / 7);
    EXPECT_GT(want, r37.interval.lo.get_d() - 1e-9);
    EXPECT_LT(want, r37.interval.hi.get_d() + 1e-9);
    // The interval bounds are genuinely directed: lo <= exact value <= hi.
    RadiusBound r25 = rietsch_radius_gr(2, 5);
    double golden = 5.0 * (1.0 + std::sqrt(5.0)) / 2.0;
    EXPECT_NEAR(r25.exact->to_double(), golden, 1e-12);
    EXPECT_THROW(rietsch_radius_gr(0, 4), InvalidInputError);
    EXPECT_THROW(rietsch_radius_gr(4, 4), InvalidInputError);
}

TEST(Spectra, NumericOracleBracketsAllBuiltinRadii) {
    for (const auto& id : builtin_ids()) {
        ManifoldEntry ent = builtin(id);
        ExactMatrix m = ent.distinguished_basis
                            ? c1_operator_matrix(ent.quantum_spec, *ent.distinguished_basis)
                            : c1_operator_matrix(ent.quantum_spec);
        RadiusBound rb = spectral_radius(m);
        ASSERT_TRUE(rb.certified()) << id;
        double numeric = numeric_radius(m);
        double lo = rb.exact ? rb.exact->to_double() : rb.interval.lo.get_d();
        double hi = rb.exact ? rb.exact->to_double() : rb.interval.hi.get_d();
        EXPECT_GT(numeric, lo - 1e-8) << id;
        EXPECT_LT(numeric, hi + 1e-8) << id;
    }
}
