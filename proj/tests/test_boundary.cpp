#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include <qis/boundary.hpp>
#include <qis/braid.hpp>
#include <qis/hamiltonian.hpp>

#include "support.hpp"

using namespace qis;

namespace {

const cplx kMu = 0.3;

KSpec gz(cplx xi, cplx kappa) {
    KSpec k;
    k.kind = KSpec::Kind::gz_dvgr;
    k.xi = xi;
    k.kappa = kappa;
    return k;
}

KSpec blob() {
    KSpec k;
    k.kind = KSpec::Kind::blob;
    return k;
}

ChainSpec open_xxx(int N) {
    ChainSpec c = ChainSpec::periodic_xxx(N);
    c.boundary = BoundaryType::open;
    return c;
}

// Largest distance in a greedy pairing of the two spectra.
double spectral_distance(const Operator& a, const Operator& b) {
    const Spectrum sa = eig(a, false), sb = eig(b, false);
    std::vector<bool> used(sb.eigenvalues.size(), false);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < sa.eigenvalues.size(); ++i) {
        double best = INFINITY;
        Eigen::Index arg = -1;
        for (Eigen::Index j = 0; j < sb.eigenvalues.size(); ++j)
            if (!used[j] && std::abs(sa.eigenvalues[i] - sb.eigenvalues[j]) < best) {
                best = std::abs(sa.eigenvalues[i] - sb.eigenvalues[j]);
                arg = j;
            }
        used[arg] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

TEST(KMatrix, IdentitySolvesRE) {
    for (Gradation g : {Gradation::principal, Gradation::homogeneous})
        for (auto [a, b] : testkit::random_pairs(20, 2.0, 91)) EXPECT_LT(re_residual(r_xxz(kMu, g), k_identity(), a, b), 1e-10);
    for (auto [a, b] : testkit::random_pairs(5, 2.0, 92)) EXPECT_LT(re_residual(r_xxx(), k_identity(), a, b), 1e-10);
}

TEST(KMatrix, GeneralSolutionSolvesREInBothGradations) {
    for (cplx mu : {cplx(0.3), cplx(0.3, 0.1)})
        for (Gradation g : {Gradation::principal, Gradation::homogeneous}) {
            const KMatrixFamily K = k_gz_dvgr(0.5, cplx(0.7, -0.2), g);
            for (auto [a, b] : testkit::random_pairs(20, 2.0, 93))
                EXPECT_LT(re_residual(r_xxz(mu, g), K, a, b), 1e-10) << mu << " " << static_cast<int>(g);
        }
}

TEST(KMatrix, AtZeroProportionalToIdentity) {
    const cplx xi(0.5, 0.1);
    for (Gradation g : {Gradation::principal, Gradation::homogeneous}) {
        const Operator k0 = k_gz_dvgr(xi, 0.8, g)(0.0);
        EXPECT_LT(relative_residual(k0, std::sinh(I_UNIT * xi) * Operator::identity({2})), 1e-15);
    }
}

TEST(KMatrix, DiagonalLimit) {
    const Operator k = k_gz_dvgr(0.5, 0.0, Gradation::homogeneous)(0.4);
    EXPECT_EQ(k(0, 1), cplx(0.0));
    EXPECT_EQ(k(1, 0), cplx(0.0));
}

TEST(KMatrix, PerturbedKFailsRE) {
    KMatrixFamily K = k_gz_dvgr(0.5, 0.7, Gradation::homogeneous);
    auto eval = K.eval;
    K.eval = [eval](cplx l) { return eval(l) + cplx(0.1) * pauli_x() * l; };
    EXPECT_GT(re_residual(r_xxz(kMu, Gradation::homogeneous), K, 0.3, -0.5), 1e-4);
}

TEST(KMatrix, BlobSolvesHomogeneousRE) {
    const KMatrixFamily K = k_blob(kMu, 0.4, 0.3, 2.0);
    for (auto [a, b] : testkit::random_pairs(20, 1.5, 94))
        EXPECT_LT(re_residual(r_xxz(kMu, Gradation::homogeneous), K, a, b), 1e-10);
}

TEST(KMatrix, DimensionMismatchThrows) {
    KMatrixFamily K{"bad", [](cplx) { return Operator::identity({3}); }};
    EXPECT_THROW(re_residual(r_xxz(kMu, Gradation::principal), K, 0.1, 0.2), DimensionError);
}

TEST(Dressing, OperatorialRE) {
    for (int n : {2, 3})
        for (Gradation g : {Gradation::principal, Gradation::homogeneous}) {
            const LaxOperator L = lax_xxz(uq_sl2_spin_rep_mu(n, kMu), g);
            for (const KMatrixFamily& K : {k_identity(), k_gz_dvgr(0.5, 0.7, g)}) {
                auto dressed = [&](cplx l) { return dressed_k(L, K, l); };
                for (auto [a, b] : testkit::random_pairs(5, 1.0, 95))
                    EXPECT_LT(re_residual(r_xxz(kMu, g), dressed, a, b), 1e-10) << n << " " << K.name;
            }
        }
}

TEST(Dressing, AtZeroReducesToK) {
    const LaxOperator L = lax_xxz(uq_sl2_spin_rep_mu(3, kMu), Gradation::principal);
    const KMatrixFamily K = k_gz_dvgr(0.5, 0.7, Gradation::principal);
    EXPECT_LT(relative_residual(dressed_k(L, K, 0.0), kron(K(0.0), Operator::identity({3}))), 1e-13);
}

TEST(Dressing, DoubleRowIsNestedDressing) {
    ChainSpec chain = ChainSpec::open_xxz(2, kMu, Gradation::principal, gz(0.5, 0.7), KSpec{});
    const KMatrixFamily K = k_gz_dvgr(0.5, 0.7, Gradation::principal);
    const cplx l(0.3, 0.2);
    const std::vector<int> d{2, 2, 2};
    const Operator L1 = site_lax(chain, 1)(l), L2 = site_lax(chain, 2)(l);
    const Operator L1m = site_lax(chain, 1)(-l), L2m = site_lax(chain, 2)(-l);
    const Operator e1 = embed_pair(L1, 1, 2, d), e2 = embed_pair(L2, 1, 3, d);
    const Operator f1 = embed_pair(L1m.inverse(), 1, 2, d), f2 = embed_pair(L2m.inverse(), 1, 3, d);
    const Operator k = embed(K(l), 1, d);
    const Operator want = e2 * (e1 * k * f1) * f2;
    EXPECT_LT(relative_residual(double_row_monodromy(chain, K, l), want), 1e-12);
}

TEST(OpenTransfer, RejectsPeriodicChains) {
    EXPECT_THROW(OpenTransferFamily(ChainSpec::periodic_xxz(3, kMu)), std::invalid_argument);
    EXPECT_THROW(TransferFamily(ChainSpec::open_xxz(3, kMu, Gradation::principal, {}, {})), std::invalid_argument);
}

TEST(OpenTransfer, CommutingFamilies) {
    struct Case {
        int N;
        Gradation g;
        KSpec minus, plus;
    };
    const std::vector<Case> cases{
        {3, Gradation::principal, gz(0.5, 0.7), gz(0.9, 0.4)},
        {3, Gradation::homogeneous, gz(0.5, 0.7), gz(0.9, 0.4)},
        {4, Gradation::principal, gz(0.5, 0.7), gz(0.9, 0.4)},
        {4, Gradation::homogeneous, gz(0.5, 0.7), KSpec{}},
        {3, Gradation::homogeneous, blob(), KSpec{}},
    };
    for (const auto& c : cases) {
        const OpenTransferFamily t(ChainSpec::open_xxz(c.N, kMu, c.g, c.minus, c.plus));
        for (auto [a, b] : testkit::random_pairs(c.N == 4 ? 10 : 4, 1.0, 96)) {
            const Operator ta = t(a), tb = t(b);
            EXPECT_LT(comm_norm(ta, tb) / (ta.norm() * tb.norm()), 1e-9) << c.N;
        }
    }
}

TEST(OpenTransfer, RationalChainCommutes) {
    const OpenTransferFamily t(open_xxx(3));
    for (auto [a, b] : testkit::random_pairs(4, 1.0, 97)) {
        const Operator ta = t(a), tb = t(b);
        EXPECT_LT(comm_norm(ta, tb) / (ta.norm() * tb.norm()), 1e-9);
    }
}

TEST(OpenTransfer, QuantumGroupSymmetry) {
    const ChainSpec chain = ChainSpec::open_xxz(3, kMu, Gradation::homogeneous, {}, {});
    const OpenTransferFamily t(chain);
    for (cplx l : testkit::random_points(5, 1.0, 98)) {
        const Operator tl = t(l);
        EXPECT_LT(uq_symmetry_residual(tl, chain) / tl.norm(), 1e-10);
    }
}

TEST(OpenTransfer, TwistCommutesWithR) {
    const ChainSpec chain = ChainSpec::open_xxz(2, kMu, Gradation::homogeneous, {}, {});
    const Operator M = boundary_twist(chain);
    for (cplx l : testkit::random_points(3, 1.5, 99))
        EXPECT_LT(comm_norm(r_xxz(kMu, Gradation::homogeneous)(l), kron(M, M)), 1e-12);
}

TEST(OpenTransfer, GradationsShareSpectrum) {
    const KSpec minus = gz(0.5, 0.0), plus = gz(0.8, 0.0);
    const OpenTransferFamily tp(ChainSpec::open_xxz(3, kMu, Gradation::principal, minus, plus));
    const OpenTransferFamily th(ChainSpec::open_xxz(3, kMu, Gradation::homogeneous, minus, plus));
    for (cplx l : testkit::random_points(3, 1.0, 100)) {
        EXPECT_LT(spectral_distance(tp(l), th(l)), 1e-9 * tp(l).norm());
    }
}

TEST(OpenHamiltonian, MatchesInvariantChain) {
    const ChainSpec chain = ChainSpec::open_xxz(3, kMu, Gradation::homogeneous, {}, {});
    const Operator H = open_hamiltonian(chain);
    const LinearFit fit = fit_operator(H, {open_uq_hamiltonian(3, kMu), Operator::identity({2, 2, 2})});
    EXPECT_LT(fit.residual, 1e-8);
    EXPECT_GT(std::abs(fit.coefficients[0]), 1e-3);
    EXPECT_LT(uq_symmetry_residual(H, chain) / H.norm(), 1e-10);
}

TEST(OpenHamiltonian, RationalChainIsOpenPermutationSum) {
    const Operator H = open_hamiltonian(open_xxx(4));
    const LinearFit fit = fit_operator(H, {xxx_permutation_hamiltonian(4, false), Operator::identity({2, 2, 2, 2})});
    EXPECT_LT(fit.residual, 1e-8);
    // no wrap bond
    const LinearFit wrap = fit_operator(H, {xxx_permutation_hamiltonian(4, true), Operator::identity({2, 2, 2, 2})});
    EXPECT_GT(wrap.residual, 1e-3);
}

TEST(OpenHamiltonian, SpinOneRejected) {
    ChainSpec chain = ChainSpec::open_xxz(2, kMu, Gradation::principal, {}, {});
    chain.site_dims = {3, 3};
    EXPECT_THROW(open_hamiltonian(chain), std::invalid_argument);
}

TEST(OpenHamiltonian, MultipletsOfTheQuantumGroup) {
    // imaginary mu gives real q, so the invariant chain is Hermitian
    const cplx mu(0.0, 0.3);
    for (int N : {2, 3}) {
        const Operator H = open_uq_hamiltonian(N, mu);
        const Spectrum s = eig(H, true, true);
        const Matrix& V = *s.eigenvectors;
        const Matrix Sz = total_sz(std::vector<int>(N, 2)).matrix();
        const Eigen::Index D = s.eigenvalues.size();
        int largest = 0;
        for (Eigen::Index a = 0; a < D;) {
            Eigen::Index b = a;
            while (b < D && s.eigenvalues[b].real() - s.eigenvalues[a].real() < 1e-8) ++b;
            const Matrix block = V.middleCols(a, b - a);
            const Spectrum sz = eig(Operator(Matrix(block.adjoint() * Sz * block)), true);
            std::map<long, int> count;
            for (Eigen::Index k = 0; k < sz.eigenvalues.size(); ++k) ++count[std::lround(2.0 * sz.eigenvalues[k].real())];
            // a sum of strings -j..j: symmetric and non-increasing away from the centre
            for (auto [m2, c] : count) {
                EXPECT_EQ(c, count[-m2]) << N;
                if (std::abs(m2) >= 2) EXPECT_LE(c, count[m2 > 0 ? m2 - 2 : m2 + 2]) << N;
            }
            largest = std::max(largest, static_cast<int>(b - a));
            a = b;
        }
        EXPECT_EQ(largest, N + 1);
    }
}

TEST(OpenHamiltonian, BlobTwoRoutes) {
    const cplx q = std::exp(I_UNIT * kMu);
    const KSpec spec = blob();
    const cplx Q = I_UNIT * std::exp(I_UNIT * kMu * spec.blob_m);
    for (int N : {2, 3}) {
        const ChainSpec chain = ChainSpec::open_xxz(N, kMu, Gradation::homogeneous, spec, {});
        const Operator H = open_hamiltonian(chain);
        const BraidFamily fam = blob_rep(N, q, Q, spec.blob_c);
        Operator sumU = Operator::zero(H.dims());
        for (int i = 1; i < N; ++i) sumU += fam.U(i);
        const Operator U0 = fam.U(0);
        const LinearFit fit = fit_operator(H, {sumU, U0, Operator::identity(H.dims())});
        EXPECT_LT(fit.residual, 1e-8) << N;
        const cplx a = fit.coefficients[0], c1 = fit.coefficients[1] / a;
        // spectrum of sum U_i + c1 U0 versus (H - shift) / scale
        const Operator rescaled = (1.0 / a) * (H - fit.coefficients[2] * Operator::identity(H.dims()));
        EXPECT_LT(spectral_distance(sumU + c1 * U0, rescaled), 1e-9 * (1.0 + rescaled.norm()));
    }
}

TEST(Casimir, AsymptoticsProportionalToCasimir) {
    for (cplx mu : {cplx(0.3), cplx(0.2, 0.3)})
        for (int n : {2, 3}) {
            const AlgebraRep rep = uq_sl2_spin_rep_mu(n, mu);
            const CasimirAsymptotics c = casimir_from_asymptotics(rep);
            EXPECT_LT(c.proportionality_residual, 1e-9) << n;
            EXPECT_GT(std::abs(c.scale), 1e-6);
            for (const char* g : {"Jp", "Jm", "qJz"}) {
                EXPECT_LT(comm_norm(c.t_plus, rep[g]), 1e-11) << g;
                EXPECT_LT(comm_norm(c.t_minus, rep[g]), 1e-11) << g;
            }
        }
}

TEST(Casimir, RequiresDeformedRep) {
    EXPECT_THROW(casimir_from_asymptotics(sl2_spin_rep(2)), std::invalid_argument);
}
