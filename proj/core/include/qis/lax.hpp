#pragma once

#include <functional>
#include <string>

#include "qis/algebra.hpp"
#include "qis/rmatrix.hpp"

namespace qis {

// Lax operator on aux (x) quantum. The matching R is evaluated at
// spectral_scale * (l1 - l2); the scale is mu for the cyclic-rep families
// that are written in the variable mu*lambda.
struct LaxOperator {
    std::string name;
    int aux_dim = 2;
    AlgebraRep rep;
    Gradation gradation = Gradation::principal;
    cplx spectral_scale{1.0, 0.0};
    std::function<Operator(cplx)> eval;

    Operator operator()(cplx lambda) const { return eval(lambda); }
    int quantum_dim() const { return rep.n; }
};

// Auxiliary 2x2 matrix of quantum operators, as an operator on C^2 (x) V.
Operator aux_matrix(const Operator& a11, const Operator& a12, const Operator& a21, const Operator& a22);

// [[Jz + 1/2, J-], [J+, -Jz + 1/2]]
Operator sl2_p_matrix(const AlgebraRep& rep);

LaxOperator lax_xxx(const AlgebraRep& rep);
LaxOperator lax_xxz(const AlgebraRep& uq_rep, Gradation gradation);

// Homogeneous-gradation triangular pieces: L = (e^l L+ - e^-l L-)/2 with c = q^{1/2}.
struct TriangularLax {
    Operator plus;
    Operator minus;
};
TriangularLax lax_xxz_limits(const AlgebraRep& uq_rep);
// Triangular pieces of the homogeneous R in the same normalization.
TriangularLax r_xxz_limits(cplx mu);

LaxOperator lax_sine_gordon(int p, int k, double s);
LaxOperator lax_liouville(int p, int k, cplx alpha);
LaxOperator lax_qoscillator(int p, int k);

double rll_residual(const SpectralMatrixFamily& R, const LaxOperator& L, cplx l1, cplx l2);

// Relations R+ L+ L+ = L+ L+ R+, R- L- L- = L- L- R-, R+ L+ L- = L- L+ R+.
RelationReport check_triangular_limits(cplx mu, const AlgebraRep& uq_rep);

}  // namespace qis
