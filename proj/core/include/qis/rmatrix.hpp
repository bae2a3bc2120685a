#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qis/algebra.hpp"
#include "qis/braid.hpp"
#include "qis/linalg.hpp"

namespace qis {

enum class Gradation { principal, homogeneous };

struct SpectralMatrixFamily {
    std::string name;
    int dim_left = 2;
    int dim_right = 2;
    std::function<Operator(cplx)> eval;
    std::optional<cplx> regularity;  // c in R(0) = c P

    Operator operator()(cplx lambda) const { return eval(lambda); }
};

SpectralMatrixFamily r_xxx();
SpectralMatrixFamily r_xxz(cplx mu, Gradation gradation);
SpectralMatrixFamily braided(const SpectralMatrixFamily& R);

// R21 = P R12 P for square local dims.
Operator flip(const Operator& r12);

double ybe_residual(const SpectralMatrixFamily& R, cplx l1, cplx l2);
double braided_ybe_residual(const SpectralMatrixFamily& Rcheck, cplx l1, cplx l2);

// e^l g_i - e^-l g_i^-1, requires the Hecke relations to hold (gate 1e-8).
Operator baxterize(const BraidFamily& fam, int bond, cplx lambda);
SpectralMatrixFamily baxterized_local(int n, cplx q);  // two-site family from hecke_generator

// V(l) = diag(e^{l/2}, e^{-l/2}).
Operator gauge_v(cplx lambda);
// principal R(l) = V_1(-l) R_hom(l) V_1(l)
SpectralMatrixFamily gauge_to_principal(const SpectralMatrixFamily& R_hom);

// max over X in {q^Jz, J+, J-} of |D'(X) R - R D(X)| and of |[D(X), Rcheck]|.
double intertwiner_residual(const SpectralMatrixFamily& R, const AlgebraRep& rep, cplx lambda);

// Central finite difference with one Richardson level: (4 D(h/2) - D(h)) / 3.
Operator derivative(const std::function<Operator(cplx)>& f, cplx at, double h = 1e-5);
// Two Richardson levels, error O(h^6).
Operator derivative_fine(const std::function<Operator(cplx)>& f, cplx at, double h = 1e-3);

}  // namespace qis
