#pragma once

#include <optional>
#include <vector>

#include "qis/linalg.hpp"

namespace qis {

// -1/2 sum_i (sx sx + sy sy + delta sz sz) over bonds (i, i+1); periodic adds (N, 1).
Operator xxz_hamiltonian(int N, cplx delta, bool periodic = true);
// -1/2 sum_i sz_i sz_{i+1}
Operator ising_hamiltonian(int N, bool periodic = true);
// 1/2 sum_{i<N} (sx sx + sy sy + cosh(i mu) sz sz) + sinh(i mu)/2 (sz_N - sz_1)
Operator open_uq_hamiltonian(int N, cplx mu);
// sum_i P_{i,i+1} with periodic wrap
Operator xxx_permutation_hamiltonian(int N, bool periodic = true);
// sum_i Jz_i for arbitrary local dimensions
Operator total_sz(const std::vector<int>& dims);

// Basis states of N spin-1/2 sites with fixed number of down spins.
// Bit (N - k) of the index is site k (site 1 most significant); a set bit is down.
struct SectorBasis {
    int N = 0;
    int downs = 0;
    std::vector<unsigned> states;
    double sz() const { return 0.5 * N - downs; }
};
SectorBasis sector_basis(int N, int downs);
Matrix xxz_sector_matrix(const SectorBasis& basis, double delta, bool periodic);
// Shift operator (content of site k moves to site k+1) restricted to a sector.
Matrix shift_sector_matrix(const SectorBasis& basis);

struct Level {
    double energy = 0.0;
    double sz = 0.0;
    std::optional<int> momentum;  // m with shift eigenvalue e^{2 pi i m / N}
};

struct ChainSpectrum {
    int N = 0;
    double delta = 0.0;
    std::vector<Level> levels;  // sorted by energy, then sz, then momentum
};

ChainSpectrum xxz_spectrum(int N, double delta, bool periodic = true, double degeneracy_tol = 1e-8);

struct PhasePoint {
    double delta = 0.0;
    double e0 = 0.0;
    int degeneracy = 0;
    double sz_abs = 0.0;  // largest |Sz| in the ground manifold
};

PhasePoint phase_point(int N, double delta, double tol = 1e-8);
std::vector<PhasePoint> phase_scan(int N, const std::vector<double>& deltas, int threads = 1);

// Weight of the two Neel states in the ground manifold projector, averaged over the manifold.
double neel_weight(int N, double delta);

}  // namespace qis
