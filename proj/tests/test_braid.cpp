#include <gtest/gtest.h>

#include <qis/braid.hpp>

using namespace qis;

namespace {
const cplx q03 = std::exp(cplx(0.0, 0.3));
}

TEST(Hecke, SpinHalfGeneratorMatchesExplicitMatrix) {
    const cplx q = q03;
    Matrix u = Matrix::Zero(4, 4);
    u(1, 1) = -q;
    u(2, 2) = -1.0 / q;
    u(1, 2) = u(2, 1) = 1.0;
    EXPECT_LT(relative_residual(hecke_generator(2, q).matrix(), u), 1e-16);
}

TEST(Hecke, RelationsForSeveralSizes) {
    for (int n : {2, 3})
        for (int N : {2, 3, 4}) {
            const BraidFamily f = hecke_rep(n, N, q03);
            EXPECT_LT(check_hecke(f).max(), 1e-10) << n << " " << N;
        }
}

TEST(Hecke, QuadraticAndInverse) {
    const BraidFamily f = hecke_rep(3, 3, cplx(0.8, 0.4));
    const Operator one = Operator::identity(f.dims());
    for (int i = 1; i < f.N; ++i) {
        EXPECT_LT(relative_residual(f.U(i) * f.U(i), -(f.q + 1.0 / f.q) * f.U(i)), 1e-12);
        EXPECT_LT(relative_residual(f.g(i) * f.g_inverse(i), one), 1e-12);
    }
}

TEST(Hecke, BasicRelationDifference) {
    // U_i U_i+1 U_i - U_i = U_i+1 U_i U_i+1 - U_i+1 holds in every Hecke rep
    for (int n : {2, 3}) {
        const BraidFamily f = hecke_rep(n, 3, q03);
        const Operator lhs = f.U(1) * f.U(2) * f.U(1) - f.U(1);
        const Operator rhs = f.U(2) * f.U(1) * f.U(2) - f.U(2);
        EXPECT_LT(relative_residual(lhs, rhs), 1e-12) << n;
    }
}

TEST(TemperleyLieb, SpinHalfHeckeRepIsTL) {
    EXPECT_LT(check_temperley_lieb(hecke_rep(2, 3, q03)).max(), 1e-12);
    EXPECT_LT(check_temperley_lieb(hecke_rep(2, 4, cplx(0.5, 0.7))).max(), 1e-12);
}

TEST(TemperleyLieb, SpinOneHeckeRepViolatesTL) {
    EXPECT_GT(check_temperley_lieb(hecke_rep(3, 3, q03)).max(), 1e-3);
}

TEST(TemperleyLieb, TwoSitesHaveNoAdjacentRelation) {
    const RelationReport r = check_temperley_lieb(hecke_rep(3, 2, q03));
    for (const auto& item : r.items)
        if (item.relation.find("U_i+-1") != std::string::npos) EXPECT_EQ(item.residual, 0.0);
}

TEST(Blob, DefiningRelations) {
    const cplx Q = I_UNIT * std::exp(cplx(0.0, 0.7));
    for (int N = 1; N <= 4; ++N) EXPECT_LT(check_blob(blob_rep(N, q03, Q, 2.0)).max(), 1e-12) << N;
}

TEST(Blob, BoundaryQuadraticAndKappa) {
    const cplx Q = I_UNIT * std::exp(cplx(0.0, 0.7));
    const BraidFamily f = blob_rep(3, q03, Q, 2.0);
    const Operator u0 = f.U(0), u1 = f.U(1);
    EXPECT_LT(relative_residual(u0 * u0 + (Q + 1.0 / Q) * u0, Operator::zero(f.dims())), 1e-12);
    const cplx kappa = q03 / Q + Q / q03;
    EXPECT_LT(relative_residual(u1 * u0 * u1, kappa * u1), 1e-12);
    EXPECT_LT(relative_residual(f.g(0) * f.g(1) * f.g(0) * f.g(1), f.g(1) * f.g(0) * f.g(1) * f.g(0)), 1e-12);
}

TEST(BType, QuadraticFromEigenvalueOracle) {
    const cplx Q(0.6, 0.9);
    const BraidFamily f = blob_rep(3, q03, Q, cplx(1.5, -0.2));
    // roots of the quadratic read off the spectrum of g0 on one site
    const Spectrum s = eig(blob_generator(Q, cplx(1.5, -0.2)) + Q * Operator::identity({2}), false);
    const std::vector<cplx> roots{s.eigenvalues[0], s.eigenvalues[1]};
    EXPECT_LT(polynomial_residual(f.g(0), roots), 1e-12);
    const RelationReport r = check_btype_quotients(f, roots);
    EXPECT_LT(r.max(), 1e-12);
    EXPECT_NEAR(r.items[0].residual, r.items[1].residual, 1e-12);
}

TEST(BType, IdentityGeneratorIsCyclotomic) {
    EXPECT_LT(polynomial_residual(Operator::identity({2, 2}), {1.0, 1.0}), 1e-16);
}

TEST(BType, WrongRootsLeaveResidual) {
    const cplx Q(0.6, 0.9);
    const BraidFamily f = blob_rep(2, q03, Q, 1.0);
    EXPECT_GT(polynomial_residual(f.g(0), {Q, Q}), 1e-3);
}
