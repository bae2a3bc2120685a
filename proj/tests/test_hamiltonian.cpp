#include <gtest/gtest.h>

#include <cmath>

#include <qis/algebra.hpp>
#include <qis/hamiltonian.hpp>

using namespace qis;

namespace {

std::vector<double> sorted_energies(const ChainSpectrum& s) {
    std::vector<double> e;
    for (const auto& l : s.levels) e.push_back(l.energy);
    return e;
}

// |<phi|P_ground|phi>| for normalized phi over the ground manifold of a dense H.
double ground_overlap(const Operator& H, Vector phi) {
    const Spectrum s = eig(H, true, true);
    phi.normalize();
    const Eigen::Index D = s.eigenvalues.size();
    double w = 0.0;
    for (Eigen::Index k = 0; k < D && s.eigenvalues[k].real() - s.eigenvalues[0].real() < 1e-8; ++k)
        w += std::norm(s.eigenvectors->col(k).dot(phi));
    return w;
}

Vector four_site_state(double delta) {
    const double c = 0.5 * (-delta + std::sqrt(delta * delta + 8.0));
    Vector v = Vector::Zero(16);
    // site 1 is the most significant bit, a set bit is down
    auto idx = [](const char* s) {
        int k = 0;
        for (int i = 0; i < 4; ++i) k = 2 * k + (s[i] == 'd');
        return k;
    };
    for (const char* s : {"uudd", "uddu", "dduu", "duud"}) v[idx(s)] = 1.0;
    for (const char* s : {"udud", "dudu"}) v[idx(s)] = c;
    return v;
}

}  // namespace

TEST(TwoSite, ExactSpectrum) {
    for (double d : {-2.0, 0.5, 1.0, 3.0}) {
        const ChainSpectrum s = xxz_spectrum(2, d);
        std::vector<double> want{-d, -d, d - 2.0, d + 2.0};
        std::sort(want.begin(), want.end());
        const auto got = sorted_energies(s);
        ASSERT_EQ(got.size(), 4u);
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[k], 1e-12) << d;
        const Spectrum dense = eig(xxz_hamiltonian(2, d), true);
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(dense.eigenvalues[k].real(), want[k], 1e-12);
    }
}

TEST(TwoSite, HalfAnisotropyValues) {
    const auto got = sorted_energies(xxz_spectrum(2, 0.5));
    const double want[] = {-1.5, -0.5, -0.5, 2.5};
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[k], 1e-12);
}

TEST(SingleSite, TwofoldTrivial) {
    const ChainSpectrum s = xxz_spectrum(1, 0.3);
    ASSERT_EQ(s.levels.size(), 2u);
    EXPECT_NEAR(s.levels[0].energy, s.levels[1].energy, 1e-15);
}

TEST(Spectrum, SectorMatrixAgreesWithDense) {
    for (int N : {3, 5, 6})
        for (double d : {-0.7, 0.0, 1.3}) {
            const auto got = sorted_energies(xxz_spectrum(N, d));
            const Spectrum dense = eig(xxz_hamiltonian(N, d), true);
            for (size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], dense.eigenvalues[k].real(), 1e-10);
        }
}

TEST(Spectrum, OpenChainAgreesWithDense) {
    const auto got = sorted_energies(xxz_spectrum(5, 0.4, false));
    const Spectrum dense = eig(xxz_hamiltonian(5, 0.4, false), true);
    for (size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], dense.eigenvalues[k].real(), 1e-10);
}

TEST(Spectrum, MomentumLabelsAreShiftEigenvalues) {
    const ChainSpectrum s = xxz_spectrum(4, 0.5);
    std::vector<int> per_m(4, 0);
    for (const auto& l : s.levels) {
        ASSERT_TRUE(l.momentum.has_value());
        ++per_m[*l.momentum];
    }
    // orbits of the 4-ring: two of length 1, one of length 2, three of length 4
    EXPECT_EQ(per_m[0], 6);
    EXPECT_EQ(per_m[1], 3);
    EXPECT_EQ(per_m[2], 4);
    EXPECT_EQ(per_m[3], 3);
}

TEST(Spectrum, RefusesLargeChains) {
    EXPECT_THROW(xxz_spectrum(13, 0.5), DimensionError);
}

TEST(FourSite, GroundStateMatchesClosedForm) {
    for (double d : {0.0, -0.5, 0.9}) {
        const double ov = ground_overlap(xxz_hamiltonian(4, d), four_site_state(d));
        EXPECT_GE(ov, 1.0 - 1e-8) << d;
    }
}

TEST(FourSite, IsotropicGroundManifoldContainsLoweredFerromagnet) {
    const std::vector<int> dims(4, 2);
    const Coproduct d = ncoproduct(sl2_spin_rep(2), 4);
    Vector up = Vector::Zero(16);
    up[0] = 1.0;
    const Vector phi = d.image("Jm").matrix() * (d.image("Jm").matrix() * up);
    EXPECT_GE(ground_overlap(xxz_hamiltonian(4, 1.0), phi), 1.0 - 1e-8);
    EXPECT_EQ(phase_point(4, 1.0).degeneracy, 5);
}

TEST(Phase, TwoSiteDegeneracyJump) {
    const auto scan = phase_scan(2, {0.5, 0.9, 1.0, 1.5});
    EXPECT_EQ(scan[0].degeneracy, 1);
    EXPECT_EQ(scan[1].degeneracy, 1);
    EXPECT_EQ(scan[2].degeneracy, 3);
    EXPECT_EQ(scan[3].degeneracy, 2);
}

TEST(Phase, SaturatedFerromagnet) {
    for (int N : {2, 4, 6}) {
        const PhasePoint p = phase_point(N, 10.0);
        EXPECT_DOUBLE_EQ(p.sz_abs, 0.5 * N);
        EXPECT_EQ(p.degeneracy, 2);
    }
}

TEST(Phase, NeelDominatesAtStrongAntiferro) {
    EXPECT_GT(neel_weight(4, -10.0), 0.9);
    EXPECT_GT(neel_weight(6, -10.0), 0.9);
    EXPECT_THROW(neel_weight(3, -10.0), std::invalid_argument);
}

TEST(Phase, ThreadedScanIsIdentical) {
    std::vector<double> grid;
    for (int k = 0; k <= 20; ++k) grid.push_back(-2.0 + 0.2 * k);
    const auto a = phase_scan(6, grid, 1);
    const auto b = phase_scan(6, grid, 4);
    for (size_t k = 0; k < grid.size(); ++k) {
        EXPECT_EQ(a[k].e0, b[k].e0);
        EXPECT_EQ(a[k].degeneracy, b[k].degeneracy);
        EXPECT_EQ(a[k].sz_abs, b[k].sz_abs);
    }
}

TEST(Phase, RejectsNonFiniteGrid) {
    EXPECT_THROW(phase_scan(2, {0.1, NAN}), std::invalid_argument);
}

TEST(Ising, LargeAnisotropyLimit) {
    const int N = 4;
    const Spectrum ising = eig(ising_hamiltonian(N), true);
    double err[2];
    int k = 0;
    for (double d : {10.0, 100.0}) {
        const Spectrum s = eig(cplx(1.0 / d) * xxz_hamiltonian(N, d), true);
        err[k++] = (s.eigenvalues - ising.eigenvalues).cwiseAbs().maxCoeff();
    }
    EXPECT_LT(err[1], err[0]);
    EXPECT_NEAR(err[0] / err[1], 10.0, 1.0);
}

TEST(Ising, OddRingIsFrustrated) {
    // antiferromagnetic Ising energy 1/2 sum sz sz cannot reach -N/2 on an odd ring
    const Spectrum odd = eig(cplx(-1.0) * ising_hamiltonian(3), true);
    const Spectrum even = eig(cplx(-1.0) * ising_hamiltonian(4), true);
    EXPECT_NEAR(odd.eigenvalues[0].real(), -0.5, 1e-14);
    EXPECT_GT(odd.eigenvalues[0].real(), -1.5);
    EXPECT_NEAR(even.eigenvalues[0].real(), -2.0, 1e-14);
}

TEST(OpenUq, CommutesWithQuantumGroup) {
    const cplx mu = 0.3;
    const Operator H = open_uq_hamiltonian(3, mu);
    const Coproduct d = ncoproduct(uq_sl2_spin_rep_mu(2, mu), 3);
    for (const char* g : {"Jp", "Jm", "qJz"}) EXPECT_LT(comm_norm(H, d.image(g)), 1e-12) << g;
}

TEST(TotalSz, MixedDimensions) {
    const Operator s = total_sz({2, 3});
    EXPECT_NEAR(s(0, 0).real(), 1.5, 1e-15);
    EXPECT_NEAR(s(5, 5).real(), -1.5, 1e-15);
}
