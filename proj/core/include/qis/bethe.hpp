#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qis/linalg.hpp"

namespace qis {

// Roots are stored in the variable u of the Bethe equations
//   (sinh(u_i + i mu s)/sinh(u_i - i mu s))^N = prod_{j != i} sinh(u_i - u_j + i mu)/sinh(u_i - u_j - i mu).
// The transfer-matrix eigenvalue uses the shifted roots u_i - i mu/2.
struct BetheSystem {
    int N = 0;
    int n = 2;  // local dimension 2s+1
    cplx mu{0.3, 0.0};
    std::vector<cplx> roots;

    int M() const { return static_cast<int>(roots.size()); }
    double spin() const { return 0.5 * (n - 1); }
};

struct BetheSolution {
    BetheSystem system;
    double residual = 0.0;
    std::optional<cplx> energy;    // spin-1/2 only, gap above the pseudo-vacuum of xxz_hamiltonian(N, cos mu)
    std::optional<cplx> momentum;  // spin-1/2 only, imaginary part in (-pi, pi]
    double sz = 0.0;
    std::optional<bool> matched;
    std::optional<int> matched_index;  // sector eigenvalue index at the first probe
};

class BetheError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SeedStrategy {
    std::uint64_t seed = 0;
    int restarts = 64;
    double box = 1.5;  // random seeds uniform in [-box, box] + i[-box, box]
    int max_iterations = 200;
    int threads = 1;
};

// Maximum log-form residual, imaginary parts reduced mod 2 pi.
double bae_residual(const BetheSystem& sys);
// Residual vector and Jacobian of the log-form equations.
void bae_system(const BetheSystem& sys, Vector& residual, Matrix& jacobian);

// Damped Newton from one starting point; returns the final roots and residual.
std::pair<std::vector<cplx>, double> newton_bae(const BetheSystem& start, int max_iterations = 200);

std::vector<BetheSolution> solve_bae(int N, int n, cplx mu, int M, const SeedStrategy& seeds = {});

int max_magnons(int N, int n);

cplx bethe_eigenvalue(const BetheSystem& sys, cplx lambda);
std::function<cplx(cplx)> eigenvalue_fn(const BetheSolution& sol);

// Printed form E = -(1/2pi) sum mu sinh(i mu) / (sinh(u + i mu/2) sinh(u - i mu/2)).
cplx bethe_energy(const BetheSystem& sys);
// Converts the printed form into the gap above the pseudo-vacuum of xxz_hamiltonian.
cplx energy_scale(cplx mu);
// Eigenvalue of xxz_hamiltonian(N, cos mu): -N cos(mu)/2 + energy_scale(mu) * bethe_energy.
cplx hamiltonian_energy(const BetheSystem& sys);
cplx bethe_momentum(const BetheSystem& sys);
double bethe_sz(const BetheSystem& sys);

// Two solutions agree as multisets with roots compared modulo i pi.
bool same_solution(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol = 1e-7);

struct SectorValidation {
    int M = 0;
    double sz = 0.0;
    int sector_dim = 0;
    int matched = 0;
    int unmatched_ed_levels = 0;
    std::vector<BetheSolution> solutions;
};

struct ValidationReport {
    int N = 0;
    int n = 2;
    cplx mu;
    std::vector<cplx> probes;
    std::vector<SectorValidation> sectors;
    bool all_matched() const;
};

ValidationReport validate_against_ed(int N, int n, cplx mu, const std::vector<int>& Ms, const SeedStrategy& seeds = {});

}  // namespace qis
