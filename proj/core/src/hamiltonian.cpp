#include "qis/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qis/algebra.hpp"

namespace qis {

namespace {

std::vector<std::pair<int, int>> bonds(int N, bool periodic) {
    std::vector<std::pair<int, int>> b;
    for (int i = 1; i < N; ++i) b.emplace_back(i, i + 1);
    if (periodic) b.emplace_back(N, 1);
    return b;
}

Operator two_site(const Operator& a, const Operator& b, int i, int j, const std::vector<int>& dims) {
    return embed(a, i, dims) * embed(b, j, dims);
}

}  // namespace

Operator xxz_hamiltonian(int N, cplx delta, bool periodic) {
    if (N < 1) throw std::invalid_argument("chain needs at least one site");
    const std::vector<int> dims(N, 2);
    const Operator sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    Operator H = Operator::zero(dims);
    for (auto [i, j] : bonds(N, periodic)) {
        H += two_site(sx, sx, i, j, dims);
        H += two_site(sy, sy, i, j, dims);
        H += delta * two_site(sz, sz, i, j, dims);
    }
    return cplx(-0.5) * H;
}

Operator ising_hamiltonian(int N, bool periodic) {
    const std::vector<int> dims(N, 2);
    Operator H = Operator::zero(dims);
    for (auto [i, j] : bonds(N, periodic)) H += two_site(pauli_z(), pauli_z(), i, j, dims);
    return cplx(-0.5) * H;
}

Operator open_uq_hamiltonian(int N, cplx mu) {
    const std::vector<int> dims(N, 2);
    const Operator sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    const cplx ch = std::cosh(I_UNIT * mu), sh = std::sinh(I_UNIT * mu);
    Operator H = Operator::zero(dims);
    for (auto [i, j] : bonds(N, false)) {
        H += two_site(sx, sx, i, j, dims);
        H += two_site(sy, sy, i, j, dims);
        H += ch * two_site(sz, sz, i, j, dims);
    }
    H = cplx(0.5) * H;
    H += (0.5 * sh) * (embed(sz, N, dims) - embed(sz, 1, dims));
    return H;
}

Operator xxx_permutation_hamiltonian(int N, bool periodic) {
    const std::vector<int> dims(N, 2);
    Operator H = Operator::zero(dims);
    const Operator P = permutation(2);
    for (auto [i, j] : bonds(N, periodic)) {
        if (i == j) {
            H += Operator::identity(dims);
            continue;
        }
        H += embed_pair(P, i, j, dims);
    }
    return H;
}

Operator total_sz(const std::vector<int>& dims) {
    Operator S = Operator::zero(dims);
    for (size_t k = 0; k < dims.size(); ++k) S += embed(sl2_spin_rep(dims[k])["Jz"], static_cast<int>(k) + 1, dims);
    return S;
}

SectorBasis sector_basis(int N, int downs) {
    if (N < 1 || N > 30) throw DimensionError("sector basis supports 1..30 sites");
    SectorBasis b;
    b.N = N;
    b.downs = downs;
    for (unsigned s = 0; s < (1u << N); ++s)
        if (std::popcount(s) == downs) b.states.push_back(s);
    return b;
}

namespace {

int bit_of(unsigned s, int N, int site) { return (s >> (N - site)) & 1u; }

long index_in(const SectorBasis& b, unsigned s) {
    auto it = std::lower_bound(b.states.begin(), b.states.end(), s);
    return (it != b.states.end() && *it == s) ? it - b.states.begin() : -1;
}

}  // namespace

Matrix xxz_sector_matrix(const SectorBasis& b, double delta, bool periodic) {
    const int N = b.N;
    const Eigen::Index d = static_cast<Eigen::Index>(b.states.size());
    Matrix H = Matrix::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        const unsigned s = b.states[c];
        for (auto [i, j] : bonds(N, periodic)) {
            if (i == j) {
                H(c, c) += -0.5 * (2.0 + delta);
                continue;
            }
            const int bi = bit_of(s, N, i), bj = bit_of(s, N, j);
            H(c, c) += -0.5 * delta * (bi == bj ? 1.0 : -1.0);
            if (bi != bj) {
                // (sx sx + sy sy) = 2 (s+ s- + s- s+) swaps antiparallel neighbours
                const unsigned t = s ^ (1u << (N - i)) ^ (1u << (N - j));
                H(index_in(b, t), c) += -1.0;
            }
        }
    }
    return H;
}

Matrix shift_sector_matrix(const SectorBasis& b) {
    const int N = b.N;
    const Eigen::Index d = static_cast<Eigen::Index>(b.states.size());
    Matrix S = Matrix::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        const unsigned s = b.states[c];
        unsigned t = 0;
        for (int k = 1; k <= N; ++k) {
            const int src = k == 1 ? N : k - 1;
            if (bit_of(s, N, src)) t |= 1u << (N - k);
        }
        S(index_in(b, t), c) = 1.0;
    }
    return S;
}

namespace {

void check_size(int N) {
    if (N < 1) throw std::invalid_argument("chain needs at least one site");
    if (N > 12) throw DimensionError("Hilbert dimension exceeds 4096");
}

}  // namespace

ChainSpectrum xxz_spectrum(int N, double delta, bool periodic, double tol) {
    check_size(N);
    ChainSpectrum out;
    out.N = N;
    out.delta = delta;
    for (int downs = 0; downs <= N; ++downs) {
        const SectorBasis b = sector_basis(N, downs);
        const Matrix H = xxz_sector_matrix(b, delta, periodic);
        Eigen::SelfAdjointEigenSolver<Matrix> es(H);
        if (es.info() != Eigen::Success) throw ConvergenceError("sector diagonalization failed");
        const Eigen::VectorXd& e = es.eigenvalues();
        const Matrix& V = es.eigenvectors();
        const Matrix S = periodic ? shift_sector_matrix(b) : Matrix();
        Eigen::Index k = 0;
        while (k < e.size()) {
            Eigen::Index end = k + 1;
            while (end < e.size() && e[end] - e[end - 1] < tol) ++end;
            std::vector<std::optional<int>> moms(end - k);
            if (periodic) {
                const Matrix Vc = V.middleCols(k, end - k);
                const Matrix M = Vc.adjoint() * S * Vc;
                Eigen::ComplexEigenSolver<Matrix> cs(M, false);
                for (Eigen::Index t = 0; t < end - k; ++t) {
                    const double theta = std::arg(cs.eigenvalues()[t]);
                    int m = static_cast<int>(std::lround(theta * N / (2.0 * M_PI)));
                    moms[t] = ((m % N) + N) % N;
                }
                std::sort(moms.begin(), moms.end());
            }
            for (Eigen::Index t = k; t < end; ++t) out.levels.push_back({e[t], b.sz(), moms[t - k]});
            k = end;
        }
    }
    std::stable_sort(out.levels.begin(), out.levels.end(), [](const Level& a, const Level& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (a.sz != b.sz) return a.sz < b.sz;
        return a.momentum.value_or(0) < b.momentum.value_or(0);
    });
    return out;
}

PhasePoint phase_point(int N, double delta, double tol) {
    check_size(N);
    std::vector<std::pair<double, double>> levels;  // (energy, sz)
    for (int downs = 0; downs <= N; ++downs) {
        const SectorBasis b = sector_basis(N, downs);
        Eigen::SelfAdjointEigenSolver<Matrix> es(xxz_sector_matrix(b, delta, true), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw ConvergenceError("sector diagonalization failed");
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) levels.emplace_back(es.eigenvalues()[k], b.sz());
    }
    double e0 = levels.front().first;
    for (const auto& l : levels) e0 = std::min(e0, l.first);
    PhasePoint p;
    p.delta = delta;
    p.e0 = e0;
    for (const auto& l : levels)
        if (l.first - e0 < tol) {
            ++p.degeneracy;
            p.sz_abs = std::max(p.sz_abs, std::abs(l.second));
        }
    return p;
}

std::vector<PhasePoint> phase_scan(int N, const std::vector<double>& deltas, int threads) {
    for (double d : deltas)
        if (!std::isfinite(d)) throw std::invalid_argument("phase-scan grid must be finite");
    std::vector<PhasePoint> out(deltas.size());
    const int nt = std::max(1, std::min<int>(threads, static_cast<int>(deltas.size())));
    if (nt == 1) {
        for (size_t k = 0; k < deltas.size(); ++k) out[k] = phase_point(N, deltas[k]);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            try {
                for (size_t k = t; k < deltas.size(); k += nt) out[k] = phase_point(N, deltas[k]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

double neel_weight(int N, double delta) {
    check_size(N);
    if (N % 2) throw std::invalid_argument("Neel states need an even number of sites");
    const Matrix H = xxz_hamiltonian(N, delta, true).matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    const Eigen::VectorXd& e = es.eigenvalues();
    Eigen::Index g = 1;
    while (g < e.size() && e[g] - e[0] < 1e-8) ++g;
    unsigned a = 0;
    for (int k = 2; k <= N; k += 2) a |= 1u << (N - k);  // up, down, up, down ...
    const unsigned b = ((1u << N) - 1) ^ a;
    double w = 0.0;
    for (Eigen::Index k = 0; k < g; ++k)
        w += std::norm(es.eigenvectors()(a, k)) + std::norm(es.eigenvectors()(b, k));
    return w / static_cast<double>(g);
}

}  // namespace qis
