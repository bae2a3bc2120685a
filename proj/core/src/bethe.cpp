#include "qis/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qis/chain.hpp"
#include "qis/hamiltonian.hpp"

namespace qis {

namespace {

constexpr double kPoleGate = 1e-12;
constexpr double kCollisionGate = 1e-8;

cplx wrap(cplx z) {
    double im = std::remainder(z.imag(), 2.0 * M_PI);
    if (im <= -M_PI) im += 2.0 * M_PI;
    return {z.real(), im};
}

cplx coth(cplx z) { return std::cosh(z) / std::sinh(z); }

void check_roots(const BetheSystem& sys) {
    const cplx ims = I_UNIT * sys.mu * sys.spin();
    for (int i = 0; i < sys.M(); ++i) {
        const cplx u = sys.roots[i];
        if (std::abs(std::sinh(u - ims)) < kPoleGate || std::abs(std::sinh(u + ims)) < kPoleGate)
            throw BetheError("root at a pole of the Bethe equations");
        for (int j = 0; j < i; ++j)
            if (std::abs(std::sinh(u - sys.roots[j])) < kCollisionGate) throw BetheError("coincident Bethe roots");
    }
}

}  // namespace

int max_magnons(int N, int n) { return N * (n - 1) / 2; }

void bae_system(const BetheSystem& sys, Vector& g, Matrix& J) {
    const int M = sys.M();
    const cplx ims = I_UNIT * sys.mu * sys.spin();
    const cplx imu = I_UNIT * sys.mu;
    g = Vector::Zero(M);
    J = Matrix::Zero(M, M);
    for (int i = 0; i < M; ++i) {
        const cplx u = sys.roots[i];
        cplx gi = static_cast<double>(sys.N) * (std::log(std::sinh(u + ims)) - std::log(std::sinh(u - ims)));
        J(i, i) = static_cast<double>(sys.N) * (coth(u + ims) - coth(u - ims));
        for (int j = 0; j < M; ++j) {
            if (j == i) continue;
            const cplx x = u - sys.roots[j];
            gi -= std::log(std::sinh(x + imu)) - std::log(std::sinh(x - imu));
            const cplx dd = coth(x + imu) - coth(x - imu);
            J(i, i) -= dd;
            J(i, j) += dd;
        }
        g[i] = wrap(gi);
    }
}

double bae_residual(const BetheSystem& sys) {
    if (sys.M() == 0) return 0.0;
    check_roots(sys);
    Vector g;
    Matrix J;
    bae_system(sys, g, J);
    return g.cwiseAbs().maxCoeff();
}

std::pair<std::vector<cplx>, double> newton_bae(const BetheSystem& start, int max_iterations) {
    BetheSystem sys = start;
    const int M = sys.M();
    if (M == 0) return {{}, 0.0};
    Vector g;
    Matrix J;
    bae_system(sys, g, J);
    double norm = g.cwiseAbs().maxCoeff();
    for (int it = 0; it < max_iterations && norm > 1e-13; ++it) {
        Eigen::PartialPivLU<Matrix> lu(J);
        const Vector step = lu.solve(-g);
        if (!step.allFinite()) break;
        double t = 1.0;
        BetheSystem trial = sys;
        Vector gt;
        Matrix Jt;
        double nt = norm;
        // backtracking on the max-norm of the residual
        while (t > 1e-4) {
            for (int k = 0; k < M; ++k) trial.roots[k] = sys.roots[k] + t * step[k];
            bae_system(trial, gt, Jt);
            nt = gt.allFinite() ? gt.cwiseAbs().maxCoeff() : INFINITY;
            if (nt < norm) break;
            t *= 0.5;
        }
        if (!std::isfinite(nt)) break;
        sys = trial;
        g = gt;
        J = Jt;
        norm = nt;
    }
    return {sys.roots, norm};
}

namespace {

cplx canonical_root(cplx u) { return {u.real(), u.imag() - M_PI * std::round(u.imag() / M_PI)}; }

double root_distance(cplx a, cplx b) {
    const cplx d = a - b;
    return std::abs(cplx(d.real(), std::remainder(d.imag(), M_PI)));
}

std::vector<cplx> canonical_roots(std::vector<cplx> r) {
    for (auto& u : r) u = canonical_root(u);
    std::sort(r.begin(), r.end(), [](cplx a, cplx b) {
        const double ra = std::round(a.real() * 1e8), rb = std::round(b.real() * 1e8);
        if (ra != rb) return ra < rb;
        return a.imag() < b.imag();
    });
    return r;
}

bool acceptable(const BetheSystem& sys) {
    const cplx ims = I_UNIT * sys.mu * sys.spin();
    for (int i = 0; i < sys.M(); ++i) {
        const cplx u = sys.roots[i];
        if (!std::isfinite(u.real()) || !std::isfinite(u.imag()) || std::abs(u.real()) > 15.0) return false;
        if (std::abs(std::sinh(u - ims)) < 1e-8 || std::abs(std::sinh(u + ims)) < 1e-8) return false;
        for (int j = 0; j < i; ++j)
            if (std::abs(std::sinh(u - sys.roots[j])) < 1e-6) return false;
    }
    return true;
}

}  // namespace

bool same_solution(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (cplx u : a) {
        int best = -1;
        double bd = tol;
        for (size_t k = 0; k < b.size(); ++k) {
            if (used[k]) continue;
            const double d = root_distance(u, b[k]);
            if (d < bd) {
                bd = d;
                best = static_cast<int>(k);
            }
        }
        if (best < 0) return false;
        used[best] = true;
    }
    return true;
}

cplx bethe_energy(const BetheSystem& sys) {
    const cplx imu = I_UNIT * sys.mu;
    cplx e = 0.0;
    for (cplx u : sys.roots) e += sys.mu * std::sinh(imu) / (std::sinh(u + 0.5 * imu) * std::sinh(u - 0.5 * imu));
    return -e / (2.0 * M_PI);
}

cplx energy_scale(cplx mu) {
    if (std::abs(mu) < 1e-300) return {0.0, 2.0 * M_PI};
    return 2.0 * M_PI * std::sinh(I_UNIT * mu) / mu;
}

cplx hamiltonian_energy(const BetheSystem& sys) {
    return -0.5 * sys.N * std::cos(sys.mu) + energy_scale(sys.mu) * bethe_energy(sys);
}

cplx bethe_momentum(const BetheSystem& sys) {
    const cplx imu = I_UNIT * sys.mu;
    cplx p = 0.0;
    for (cplx u : sys.roots) p -= std::log(std::sinh(u + 0.5 * imu) / std::sinh(u - 0.5 * imu));
    return wrap(p);
}

double bethe_sz(const BetheSystem& sys) { return sys.N * sys.spin() - sys.M(); }

std::vector<BetheSolution> solve_bae(int N, int n, cplx mu, int M, const SeedStrategy& seeds) {
    if (N < 1 || n < 2) throw BetheError("need N >= 1 and spin >= 1/2");
    if (M < 0 || M > max_magnons(N, n)) throw BetheError("M outside [0, N s]");
    BetheSystem base{N, n, mu, {}};
    if (M == 0) {
        BetheSolution s;
        s.system = base;
        if (n == 2) {
            s.energy = 0.0;
            s.momentum = 0.0;
        }
        s.sz = bethe_sz(base);
        return {s};
    }

    // deterministic starting points: symmetric real spread, then seeded random restarts
    std::vector<std::vector<cplx>> starts;
    {
        // root spacing shrinks with mu (rational limit u = mu v)
        const double gap = 0.5 * std::min(1.0, std::abs(mu));
        std::vector<cplx> sym(M);
        for (int k = 0; k < M; ++k) sym[k] = gap * (k - 0.5 * (M - 1)) + cplx(0.0, 1e-3 * gap * (k + 1));
        starts.push_back(sym);
    }
    for (int r = 0; r < seeds.restarts; ++r) {
        std::seed_seq sq{static_cast<std::uint64_t>(seeds.seed), static_cast<std::uint64_t>(N),
                         static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(M), static_cast<std::uint64_t>(r)};
        std::mt19937_64 rng(sq);
        std::uniform_real_distribution<double> uni(-seeds.box, seeds.box);
        std::vector<cplx> x(M);
        for (auto& u : x) {
            const double re = uni(rng);
            u = cplx(re, uni(rng));
        }
        starts.push_back(std::move(x));
    }

    std::vector<std::optional<std::vector<cplx>>> found(starts.size());
    auto work = [&](size_t k) {
        BetheSystem s = base;
        s.roots = starts[k];
        auto [roots, res] = newton_bae(s, seeds.max_iterations);
        s.roots = roots;
        if (!(res < 1e-10) || !acceptable(s)) return;
        found[k] = roots;
    };
    const int nt = std::max(1, std::min<int>(seeds.threads, static_cast<int>(starts.size())));
    if (nt == 1) {
        for (size_t k = 0; k < starts.size(); ++k) work(k);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (size_t k = t; k < starts.size(); k += nt) work(k);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<BetheSolution> out;
    for (const auto& f : found) {
        if (!f) continue;
        const std::vector<cplx> c = canonical_roots(*f);
        bool dup = false;
        for (const auto& s : out)
            if (same_solution(s.system.roots, c)) {
                dup = true;
                break;
            }
        if (dup) continue;
        BetheSolution s;
        s.system = base;
        s.system.roots = c;
        s.residual = bae_residual(s.system);
        if (n == 2) {
            s.energy = energy_scale(mu) * bethe_energy(s.system);
            s.momentum = bethe_momentum(s.system);
        }
        s.sz = bethe_sz(s.system);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const BetheSolution& a, const BetheSolution& b) {
        const auto& ra = a.system.roots;
        const auto& rb = b.system.roots;
        for (size_t k = 0; k < ra.size(); ++k) {
            const double xa = std::round(ra[k].real() * 1e8), xb = std::round(rb[k].real() * 1e8);
            if (xa != xb) return xa < xb;
            const double ya = std::round(ra[k].imag() * 1e8), yb = std::round(rb[k].imag() * 1e8);
            if (ya != yb) return ya < yb;
        }
        return false;
    });
    return out;
}

namespace {

// Lambda(l) with the k-th pole factored out: h_k(l) / sinh(l - r_k).
cplx numerator_without(const BetheSystem& sys, const std::vector<cplx>& r, int k, cplx l) {
    const cplx imu = I_UNIT * sys.mu;
    const double s = sys.spin();
    cplx p1 = std::pow(std::sinh(l + imu * s + 0.5 * imu), sys.N);
    cplx p2 = std::pow(std::sinh(l - imu * s + 0.5 * imu), sys.N);
    for (size_t i = 0; i < r.size(); ++i) {
        const cplx x = l - r[i];
        if (static_cast<int>(i) == k) {
            p1 *= std::sinh(x - imu);
            p2 *= std::sinh(x + imu);
        } else {
            p1 *= std::sinh(x - imu) / std::sinh(x);
            p2 *= std::sinh(x + imu) / std::sinh(x);
        }
    }
    return p1 + p2;
}

}  // namespace

cplx bethe_eigenvalue(const BetheSystem& sys, cplx lambda) {
    const cplx imu = I_UNIT * sys.mu;
    std::vector<cplx> r(sys.roots.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = sys.roots[i] - 0.5 * imu;
    for (size_t k = 0; k < r.size(); ++k) {
        if (std::abs(std::sinh(lambda - r[k])) < 1e-6) {
            // move the root by a multiple of i pi next to lambda, then expand the removable singularity
            const cplx d = lambda - r[k];
            r[k] += cplx(0.0, M_PI * std::round(d.imag() / M_PI));
            const cplx rk = r[k];
            auto h = [&](cplx x) { return numerator_without(sys, r, static_cast<int>(k), x); };
            const double e = 1e-3;
            const cplx d1 = (8.0 * (h(rk + e / 2.0) - h(rk - e / 2.0)) - (h(rk + e) - h(rk - e))) / (6.0 * e);
            const cplx d2 = (h(rk + e) - 2.0 * h(rk) + h(rk - e)) / (e * e);
            return d1 + 0.5 * d2 * (lambda - rk);
        }
    }
    return numerator_without(sys, r, -1, lambda);
}

std::function<cplx(cplx)> eigenvalue_fn(const BetheSolution& sol) {
    return [sys = sol.system](cplx l) { return bethe_eigenvalue(sys, l); };
}

bool ValidationReport::all_matched() const {
    for (const auto& s : sectors)
        if (s.matched != static_cast<int>(s.solutions.size())) return false;
    return true;
}

namespace {

std::vector<int> sector_indices(const std::vector<int>& dims, double sz) {
    const int D = total_dim(dims);
    std::vector<int> idx;
    for (int c = 0; c < D; ++c) {
        int rem = c;
        double total = 0.0;
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            const int digit = rem % dims[k];
            rem /= dims[k];
            total += 0.5 * (dims[k] - 1) - digit;
        }
        if (std::abs(total - sz) < 1e-9) idx.push_back(c);
    }
    return idx;
}

Matrix restrict(const Matrix& m, const std::vector<int>& idx) {
    const Eigen::Index d = static_cast<Eigen::Index>(idx.size());
    Matrix out(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) out(r, c) = m(idx[r], idx[c]);
    return out;
}

}  // namespace

ValidationReport validate_against_ed(int N, int n, cplx mu, const std::vector<int>& Ms, const SeedStrategy& seeds) {
    const ChainSpec chain = ChainSpec::periodic_xxz(N, mu, Gradation::principal, n);
    if (total_dim(chain.site_dims) > 4096) throw DimensionError("Hilbert dimension exceeds 4096");
    const TransferFamily t(chain);
    ValidationReport rep;
    rep.N = N;
    rep.n = n;
    rep.mu = mu;
    rep.probes = {cplx(0.4, 0.0), cplx(-0.3, 0.2), cplx(0.15, 0.05)};
    std::vector<Matrix> full;
    for (cplx p : rep.probes) full.push_back(t(p).matrix());
    const Operator sz_op = total_sz(chain.site_dims);

    for (int M : Ms) {
        SectorValidation sv;
        sv.M = M;
        sv.sz = 0.5 * N * (n - 1) - M;
        const std::vector<int> idx = sector_indices(chain.site_dims, sv.sz);
        sv.sector_dim = static_cast<int>(idx.size());
        std::vector<Vector> evs;
        Matrix vecs0;
        for (size_t p = 0; p < full.size(); ++p) {
            Eigen::ComplexEigenSolver<Matrix> es(restrict(full[p], idx), p == 0);
            evs.push_back(es.eigenvalues());
            if (p == 0) vecs0 = es.eigenvectors();
        }
        std::vector<bool> level_hit(idx.size(), false);
        sv.solutions = solve_bae(N, n, mu, M, seeds);
        for (auto& s : sv.solutions) {
            bool ok = true;
            int first = -1;
            for (size_t p = 0; p < full.size(); ++p) {
                const cplx lam = bethe_eigenvalue(s.system, rep.probes[p]);
                double best = INFINITY;
                int arg = -1;
                for (Eigen::Index k = 0; k < evs[p].size(); ++k) {
                    const double d = std::abs(evs[p][k] - lam) / std::max(std::abs(lam), 1e-300);
                    if (d < best) {
                        best = d;
                        arg = static_cast<int>(k);
                    }
                }
                if (p == 0) first = arg;
                ok = ok && best < 1e-7;
            }
            if (ok && first >= 0) {
                // Sz of the matched eigenvector lifted to the full space
                Vector v = Vector::Zero(sz_op.size());
                for (size_t r = 0; r < idx.size(); ++r) v[idx[r]] = vecs0(r, first);
                const double sz = (v.adjoint() * sz_op.matrix() * v)(0, 0).real() / v.squaredNorm();
                ok = std::abs(sz - sv.sz) < 1e-10;
                level_hit[first] = true;
            }
            s.matched = ok;
            if (ok) {
                s.matched_index = first;
                ++sv.matched;
            }
        }
        for (bool h : level_hit)
            if (!h) ++sv.unmatched_ed_levels;
        rep.sectors.push_back(std::move(sv));
    }
    return rep;
}

}  // namespace qis
