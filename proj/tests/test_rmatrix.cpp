#include <gtest/gtest.h>

#include <qis/rmatrix.hpp>

#include "support.hpp"

using namespace qis;

namespace {

const std::vector<cplx> kMus{cplx(0.3), cplx(0.3, 0.1)};

}  // namespace

TEST(RXXX, RegularAndExplicitEntries) {
    const SpectralMatrixFamily R = r_xxx();
    EXPECT_LT(relative_residual(R(0.0), I_UNIT * permutation(2)), 1e-16);
    const cplx l(0.4, -0.2);
    const Operator r = R(l);
    EXPECT_EQ(r(0, 0), l + I_UNIT);
    EXPECT_EQ(r(3, 3), l + I_UNIT);
    EXPECT_EQ(r(1, 1), l);
    EXPECT_EQ(r(1, 2), I_UNIT);
    EXPECT_EQ(r(2, 1), I_UNIT);
    ASSERT_TRUE(R.regularity.has_value());
    EXPECT_EQ(*R.regularity, I_UNIT);
}

TEST(RXXX, YangBaxter) {
    EXPECT_LT(ybe_residual(r_xxx(), 0.7, -0.3), 1e-12);
    for (auto [a, b] : testkit::random_pairs(20, 2.0, 41)) EXPECT_LT(ybe_residual(r_xxx(), a, b), 1e-12);
}

TEST(RXXX, UnitarityConstant) {
    // (l + iP)(-l + iP) = -(l^2 + 1) since P^2 = I
    const SpectralMatrixFamily R = r_xxx();
    for (cplx l : testkit::random_points(5, 1.5, 42)) {
        const Operator prod = R(l) * flip(R(-l));
        EXPECT_LT(relative_residual(prod, (-(l * l) - 1.0) * Operator::identity({2, 2})), 1e-14);
    }
}

TEST(RXXZ, PrincipalRegularity) {
    for (cplx mu : kMus) {
        const SpectralMatrixFamily R = r_xxz(mu, Gradation::principal);
        EXPECT_LT(relative_residual(R(0.0), std::sinh(I_UNIT * mu) * permutation(2)), 1e-15);
    }
}

TEST(RXXZ, HomogeneousOffDiagonals) {
    const cplx mu = 0.3, l(0.4, 0.1);
    const Operator r = r_xxz(mu, Gradation::homogeneous)(l);
    EXPECT_LT(std::abs(r(1, 2) - std::exp(l) * std::sinh(I_UNIT * mu)), 1e-15);
    EXPECT_LT(std::abs(r(2, 1) - std::exp(-l) * std::sinh(I_UNIT * mu)), 1e-15);
}

TEST(RXXZ, YangBaxterBothGradations) {
    for (cplx mu : kMus)
        for (Gradation g : {Gradation::principal, Gradation::homogeneous})
            for (auto [a, b] : testkit::random_pairs(20, 2.0, 43)) EXPECT_LT(ybe_residual(r_xxz(mu, g), a, b), 1e-11);
}

TEST(RXXZ, IdentityFamilyTriviallySolves) {
    SpectralMatrixFamily id;
    id.eval = [](cplx) { return Operator::identity({2, 2}); };
    EXPECT_EQ(ybe_residual(id, 0.3, 0.2), 0.0);
}

TEST(RXXZ, GaugeRelatesGradations) {
    const SpectralMatrixFamily g = gauge_to_principal(r_xxz(0.3, Gradation::homogeneous));
    const SpectralMatrixFamily p = r_xxz(0.3, Gradation::principal);
    EXPECT_LT(relative_residual(g(0.4), p(0.4)), 1e-12);
    for (auto [a, b] : testkit::random_pairs(10, 2.0, 44)) EXPECT_LT(ybe_residual(g, a, b), 1e-11);
}

TEST(Braided, XXXDerivativeIsPermutation) {
    const SpectralMatrixFamily b = braided(r_xxx());
    const Operator d = derivative([&](cplx l) { return b(l); }, 0.0);
    EXPECT_LT(relative_residual(d, permutation(2)), 1e-10);
}

TEST(Braided, YangBaxterAndRegularity) {
    for (cplx mu : kMus) {
        const SpectralMatrixFamily b = braided(r_xxz(mu, Gradation::principal));
        for (auto [x, y] : testkit::random_pairs(10, 2.0, 45)) EXPECT_LT(braided_ybe_residual(b, x, y), 1e-11);
        EXPECT_LT(relative_residual(b(0.0), std::sinh(I_UNIT * mu) * Operator::identity({2, 2})), 1e-15);
    }
}

TEST(Baxterize, SpinHalfIsTwiceHomogeneousBraided) {
    const cplx mu = 0.3, q = std::exp(I_UNIT * mu);
    const BraidFamily fam = hecke_rep(2, 2, q);
    const SpectralMatrixFamily b = braided(r_xxz(mu, Gradation::homogeneous));
    for (cplx l : testkit::random_points(5, 1.5, 46))
        EXPECT_LT(relative_residual(baxterize(fam, 1, l), 2.0 * b(l)), 1e-13);
}

TEST(Baxterize, LocalFormWithTLGenerator) {
    const cplx mu(0.3, 0.05), q = std::exp(I_UNIT * mu);
    const BraidFamily fam = hecke_rep(2, 2, q);
    const cplx l(0.2, 0.3);
    const Operator want = 2.0 * std::sinh(l + I_UNIT * mu) * Operator::identity({2, 2}) + 2.0 * std::sinh(l) * fam.U(1);
    EXPECT_LT(relative_residual(baxterize(fam, 1, l), want), 1e-13);
}

TEST(Baxterize, SpinOneBeyondTL) {
    const SpectralMatrixFamily b = baxterized_local(3, std::exp(cplx(0.0, 0.3)));
    for (auto [x, y] : testkit::random_pairs(10, 1.5, 47)) EXPECT_LT(braided_ybe_residual(b, x, y), 1e-11);
}

TEST(Baxterize, HeckeFamiliesOnThreeStrands) {
    for (int n : {2, 3}) {
        const BraidFamily fam = hecke_rep(n, 3, std::exp(cplx(0.0, 0.4)));
        const cplx l1(0.3, 0.1), l2(-0.5, 0.2);
        const Operator lhs = baxterize(fam, 1, l1 - l2) * baxterize(fam, 2, l1) * baxterize(fam, 1, l2);
        const Operator rhs = baxterize(fam, 2, l2) * baxterize(fam, 1, l1) * baxterize(fam, 2, l1 - l2);
        EXPECT_LT(relative_residual(lhs, rhs), 1e-11) << n;
    }
}

TEST(Baxterize, AtZeroProportionalToIdentity) {
    const cplx q = std::exp(cplx(0.0, 0.3));
    const BraidFamily fam = hecke_rep(3, 2, q);
    EXPECT_LT(relative_residual(baxterize(fam, 1, 0.0), (q - 1.0 / q) * Operator::identity({3, 3})), 1e-14);
}

TEST(Baxterize, RejectsNonHecke) {
    BraidFamily fam = hecke_rep(2, 2, std::exp(cplx(0.0, 0.3)));
    fam.bonds[0] = fam.bonds[0] + cplx(0.1) * Operator::identity({2, 2});
    EXPECT_THROW(baxterize(fam, 1, 0.2), std::invalid_argument);
}

TEST(Intertwiner, HomogeneousCommutesWithCoproduct) {
    const cplx mu = 0.3;
    const AlgebraRep rep = uq_sl2_spin_rep_mu(2, mu);
    EXPECT_LT(intertwiner_residual(r_xxz(mu, Gradation::homogeneous), rep, 0.5), 1e-11);
    for (cplx l : testkit::random_points(5, 1.5, 48))
        EXPECT_LT(intertwiner_residual(r_xxz(mu, Gradation::homogeneous), rep, l), 1e-11);
}

TEST(Intertwiner, PrincipalFailsUntilGauged) {
    const cplx mu = 0.3;
    const AlgebraRep rep = uq_sl2_spin_rep_mu(2, mu);
    EXPECT_GT(intertwiner_residual(r_xxz(mu, Gradation::principal), rep, 0.5), 1e-3);
    // back to the homogeneous form: R_h(l) = V1(l) R_p(l) V1(-l)
    SpectralMatrixFamily back = r_xxz(mu, Gradation::principal);
    auto eval = back.eval;
    back.eval = [eval](cplx l) {
        const Operator I2 = Operator::identity({2});
        return kron(gauge_v(l), I2) * eval(l) * kron(gauge_v(-l), I2);
    };
    EXPECT_LT(intertwiner_residual(back, rep, 0.5), 1e-11);
}

TEST(Intertwiner, DimensionMismatch) {
    EXPECT_THROW(intertwiner_residual(r_xxz(0.3, Gradation::homogeneous), uq_sl2_spin_rep_mu(3, 0.3), 0.2),
                 DimensionError);
}

TEST(Derivative, RichardsonAccuracy) {
    auto f = [](cplx l) { return std::exp(l) * Operator::identity({2}); };
    EXPECT_LT(std::abs(derivative(f, 0.3)(0, 0) - std::exp(cplx(0.3))), 1e-9);
    EXPECT_LT(std::abs(derivative_fine(f, 0.3)(0, 0) - std::exp(cplx(0.3))), 1e-12);
}
