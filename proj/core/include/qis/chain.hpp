#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qis/lax.hpp"
#include "qis/rmatrix.hpp"

namespace qis {

enum class Model { xxx, xxz };
enum class BoundaryType { periodic, open };

// c-number boundary matrix choice; the blob form acts as x(l) I + y(l) e.
struct KSpec {
    enum class Kind { identity, gz_dvgr, blob } kind = Kind::identity;
    cplx xi{0.5, 0.0};
    cplx kappa{0.0, 0.0};
    double blob_m = 0.4;      // Q = i e^{i mu m}
    double blob_gamma = 0.3;
    cplx blob_c{2.0, 0.0};
};

struct ChainSpec {
    Model model = Model::xxz;
    std::vector<int> site_dims;  // local dimension n = 2s+1 per site
    cplx mu{0.3, 0.0};
    Gradation gradation = Gradation::principal;
    BoundaryType boundary = BoundaryType::periodic;
    KSpec k_minus;
    KSpec k_plus;

    int N() const { return static_cast<int>(site_dims.size()); }
    std::vector<int> quantum_dims() const { return site_dims; }
    std::vector<int> full_dims() const;  // auxiliary first
    bool fundamental() const;

    static ChainSpec periodic_xxz(int N, cplx mu, Gradation g = Gradation::principal, int n = 2);
    static ChainSpec periodic_xxx(int N, int n = 2);
    static ChainSpec open_xxz(int N, cplx mu, Gradation g, KSpec minus, KSpec plus);
};

void validate(const ChainSpec& chain);

AlgebraRep site_rep(const ChainSpec& chain, int site);  // 1-based
LaxOperator site_lax(const ChainSpec& chain, int site);
SpectralMatrixFamily auxiliary_r(const ChainSpec& chain);

// Precomputed per-site Lax operators; T(l) = L_{aN}(l) ... L_{a1}(l).
class Monodromy {
public:
    explicit Monodromy(ChainSpec chain);
    Operator operator()(cplx lambda) const;
    const ChainSpec& chain() const { return chain_; }

private:
    ChainSpec chain_;
    std::vector<LaxOperator> lax_;
};

Operator monodromy(const ChainSpec& chain, cplx lambda);

// R_ab(l1-l2) T_a(l1) T_b(l2) = T_b(l2) T_a(l1) R_ab(l1-l2) on aux(x)aux(x)quantum.
double frt_residual(const ChainSpec& chain, cplx l1, cplx l2);

// Memoized evaluation of a lambda-dependent operator; safe for concurrent use.
class OperatorCache {
public:
    explicit OperatorCache(std::function<Operator(cplx)> f);
    Operator operator()(cplx lambda) const;
    size_t size() const;

private:
    struct State;
    std::function<Operator(cplx)> f_;
    std::shared_ptr<State> state_;
};

class TransferFamily {
public:
    explicit TransferFamily(const ChainSpec& chain);
    Operator operator()(cplx lambda) const { return cache_(lambda); }
    const ChainSpec& chain() const { return chain_; }
    size_t cached() const { return cache_.size(); }

private:
    ChainSpec chain_;
    OperatorCache cache_;
};

TransferFamily transfer(const ChainSpec& chain);

// One-site right shift P_12 P_23 ... P_{N-1,N}.
Operator shift_operator(int N, int d = 2);
// t(0) / c^N for a regular fundamental chain.
Operator momentum_operator(const ChainSpec& chain);

struct HamiltonianExtraction {
    Operator local_sum;       // sum_i dRcheck_{i,i+1}(0), periodic wrap
    Operator log_derivative;  // t(0)^-1 t'(0)
    cplx regularity;          // R(0) = c P, so c * log_derivative = local_sum
};
HamiltonianExtraction hamiltonian_from_transfer(const ChainSpec& chain, double step = 1e-5);

struct LinearFit {
    std::vector<cplx> coefficients;
    double residual = 0.0;  // |target - fit| / |target|
};
LinearFit fit_operator(const Operator& target, const std::vector<Operator>& basis);

// Yangian charges of an XXX chain as operators on aux (x) quantum.
struct YangianCharges {
    int N = 0;
    Operator q0;
    Operator q1;
    // Q_ab is read from auxiliary block (b, a); 0-based indices.
    Operator entry(int level, int a, int b) const;
};
YangianCharges yangian_charges(const ChainSpec& chain);
RelationReport check_yangian_relations(const YangianCharges& y);
// Residual of the co-product recursion splitting site 1 from the rest with parameter h.
// With reversed = true the rest of the chain is taken as the first tensor factor.
double yangian_coproduct_residual(const ChainSpec& chain, double h, bool reversed);
// Exact coefficients of the XXX monodromy polynomial, index k multiplies lambda^k.
std::vector<Operator> monodromy_coefficients(const ChainSpec& chain);

}  // namespace qis
