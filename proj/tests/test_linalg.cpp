#include <gtest/gtest.h>

#include <qis/linalg.hpp>

#include "support.hpp"

using namespace qis;

TEST(Kron, FirstFactorIsMostSignificant) {
    const Operator a = sigma_plus();
    const Operator b = pauli_z();
    const Operator k = kron(a, b);
    EXPECT_EQ(k.dims(), (std::vector<int>{2, 2}));
    // (e12 (x) sz)|1,0> = |0,0>, sz on the second factor's |0> is +1
    EXPECT_EQ(k(0, 2), cplx(1.0));
    EXPECT_EQ(k(1, 3), cplx(-1.0));
    EXPECT_EQ(k(2, 0), cplx(0.0));
}

TEST(Kron, MixedProduct) {
    const auto a = testkit::random_operator({2}, 1), b = testkit::random_operator({3}, 2);
    const auto c = testkit::random_operator({2}, 3), d = testkit::random_operator({3}, 4);
    EXPECT_LT(relative_residual(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-14);
}

TEST(Embed, MatchesExplicitKron) {
    const std::vector<int> dims{2, 3, 2};
    const auto a = testkit::random_operator({3}, 5);
    const Operator ref = kron({Operator::identity({2}), a, Operator::identity({2})});
    EXPECT_LT(relative_residual(embed(a, 2, dims), ref), 1e-15);
}

TEST(Embed, PairOrderIsRespected) {
    const std::vector<int> dims{2, 2, 2};
    const auto a = testkit::random_operator({2}, 6), b = testkit::random_operator({2}, 7);
    const Operator ab = kron(a, b);
    // a on site 3, b on site 1
    const Operator placed = embed_pair(ab, 3, 1, dims);
    EXPECT_LT(relative_residual(placed, embed(a, 3, dims) * embed(b, 1, dims)), 1e-14);
}

TEST(Embed, SitesGeneralPlacement) {
    const std::vector<int> dims{2, 3, 2, 2};
    const auto a = testkit::random_operator({2}, 8), b = testkit::random_operator({3}, 9);
    const auto c = testkit::random_operator({2}, 10);
    const Operator abc = kron({a, b, c});
    const Operator placed = embed_sites(abc, {4, 2, 1}, dims);
    EXPECT_LT(relative_residual(placed, embed(a, 4, dims) * embed(b, 2, dims) * embed(c, 1, dims)), 1e-14);
}

TEST(Embed, RejectsBadSites) {
    const std::vector<int> dims{2, 2};
    EXPECT_THROW(embed(pauli_x(), 3, dims), DimensionError);
    EXPECT_THROW(embed(Operator::identity({3}), 1, dims), DimensionError);
    EXPECT_THROW(embed_pair(kron(pauli_x(), pauli_x()), 1, 1, dims), DimensionError);
}

TEST(Swap, ConjugationExchangesFactors) {
    const auto a = testkit::random_operator({2}, 11), b = testkit::random_operator({3}, 12);
    const Operator S = swap_operator(2, 3);
    EXPECT_LT(relative_residual(S * kron(a, b) * S.adjoint(), kron(b, a)), 1e-14);
    const Operator P = permutation(3);
    EXPECT_LT(relative_residual(P * P, Operator::identity({3, 3})), 1e-15);
}

TEST(PartialTrace, OfProductIsScaledFactor) {
    const auto a = testkit::random_operator({2}, 13), b = testkit::random_operator({4}, 14);
    const Operator t = partial_trace_first(kron(a, b));
    EXPECT_LT(relative_residual(t, a.matrix().trace() * b), 1e-14);
}

TEST(FirstFactorBlock, ReadsAuxiliaryEntries) {
    const auto a = testkit::random_operator({2}, 15), b = testkit::random_operator({2}, 16);
    const Operator k = kron(a, b);
    EXPECT_LT(relative_residual(first_factor_block(k, 1, 0), a(1, 0) * b), 1e-14);
}

TEST(Eig, HermitianSortedAscending) {
    const Operator h = pauli_x() + cplx(0.5) * pauli_z();
    const Spectrum s = eig(h, true, true);
    ASSERT_EQ(s.eigenvalues.size(), 2);
    EXPECT_NEAR(s.eigenvalues[0].real(), -std::sqrt(1.25), 1e-14);
    EXPECT_NEAR(s.eigenvalues[1].real(), std::sqrt(1.25), 1e-14);
    ASSERT_TRUE(s.eigenvectors.has_value());
    const Matrix v = s.eigenvectors->col(0);
    EXPECT_LT((h.matrix() * v - s.eigenvalues[0] * v).norm(), 1e-13);
}

TEST(Eig, GeneralSpectrumOfRotation) {
    Matrix m(2, 2);
    m << 0.0, -1.0, 1.0, 0.0;
    const Spectrum s = eig(Operator(m), false);
    EXPECT_NEAR(std::abs(s.eigenvalues[0] - cplx(0.0, -1.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(s.eigenvalues[1] - cplx(0.0, 1.0)), 0.0, 1e-14);
}

TEST(Residuals, CommutatorNormVanishesForCommuting) {
    EXPECT_LT(comm_norm(pauli_z(), Operator::identity({2})), 1e-16);
    EXPECT_GT(comm_norm(pauli_x(), pauli_z()), 0.5);
}

TEST(Operator, InverseOfSingularThrows) {
    EXPECT_THROW(sigma_plus().inverse(), std::domain_error);
    const auto a = testkit::random_operator({3}, 17);
    EXPECT_LT(relative_residual(a * a.inverse(), Operator::identity({3})), 1e-13);
}

TEST(Operator, ProductChecksSize) {
    EXPECT_THROW(pauli_x() * Operator::identity({3}), DimensionError);
}

TEST(Pauli, Algebra) {
    EXPECT_LT(relative_residual(pauli_x() * pauli_y(), I_UNIT * pauli_z()), 1e-16);
    EXPECT_LT(relative_residual(sigma_plus() + sigma_minus(), pauli_x()), 1e-16);
}
