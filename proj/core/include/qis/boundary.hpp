#pragma once

#include <functional>
#include <string>
#include <utility>

#include "qis/chain.hpp"

namespace qis {

// c-number boundary matrix on the auxiliary space.
struct KMatrixFamily {
    std::string name;
    std::function<Operator(cplx)> eval;

    Operator operator()(cplx lambda) const { return eval(lambda); }
};

KMatrixFamily k_identity();
// Non-diagonal solution for the XXZ R; written in the homogeneous gradation and
// mapped to the principal one by K_p(l) = V(-l) K_h(l) V(-l).
KMatrixFamily k_gz_dvgr(cplx xi, cplx kappa, Gradation gradation);
// x(l) I + y(l) e with the boundary generator e of the blob algebra, Q = i e^{i mu m}.
KMatrixFamily k_blob(cplx mu, double m, double gamma, cplx c, Gradation gradation = Gradation::homogeneous);
KMatrixFamily k_from_spec(const KSpec& spec, const ChainSpec& chain);

// Crossing parameter: i mu for XXZ, i for XXX.
cplx crossing_shift(const ChainSpec& chain);
// diag(q, q^-1) for homogeneous XXZ, identity otherwise.
Operator boundary_twist(const ChainSpec& chain);
// K+(l) = M K^t(-l - crossing).
KMatrixFamily k_plus(const KMatrixFamily& k_minus, const ChainSpec& chain);

// R12(l1-l2) K1(l1) R21(l1+l2) K2(l2) = K2(l2) R12(l1+l2) K1(l1) R21(l1-l2).
// K may act on aux (x) quantum; the quantum factors are shared between K1 and K2.
double re_residual(const SpectralMatrixFamily& R, const std::function<Operator(cplx)>& K, cplx l1, cplx l2);
double re_residual(const SpectralMatrixFamily& R, const KMatrixFamily& K, cplx l1, cplx l2);

// L(l) K(l) L^-1(-l) on aux (x) quantum.
Operator dressed_k(const LaxOperator& L, const KMatrixFamily& K, cplx lambda);
// T(l) K(l) T^-1(-l) on aux (x) chain.
Operator double_row_monodromy(const ChainSpec& chain, const KMatrixFamily& K, cplx lambda);

// t(l) = Tr_0[K+(l) T(l) K-(l) T^-1(-l)], memoized.
class OpenTransferFamily {
public:
    explicit OpenTransferFamily(const ChainSpec& chain);
    Operator operator()(cplx lambda) const { return cache_(lambda); }
    const ChainSpec& chain() const { return chain_; }

private:
    ChainSpec chain_;
    OperatorCache cache_;
};

OpenTransferFamily open_transfer(const ChainSpec& chain);

// d/dl t(l) at 0, two Richardson levels.
Operator open_hamiltonian(const ChainSpec& chain);

// Max over X in {J+, J-, q^Jz} of comm_norm(op, image of X on the chain).
double uq_symmetry_residual(const Operator& op, const ChainSpec& chain);

struct CasimirAsymptotics {
    Operator t_plus;   // -Tr_0[M L+ (L-)^-1]
    Operator t_minus;  // -Tr_0[M L- (L+)^-1]
    cplx scale;        // t_plus = scale * casimir_uq
    double proportionality_residual = 0.0;
};
// Leading coefficients of the one-site open transfer matrix (K- = I, K+ = M) for l -> +-inf.
CasimirAsymptotics casimir_from_asymptotics(const AlgebraRep& uq_rep);

}  // namespace qis
