#include "qis/rmatrix.hpp"

#include <cmath>

namespace qis {

SpectralMatrixFamily r_xxx() {
    SpectralMatrixFamily f;
    f.name = "xxx";
    const Operator P = permutation(2);
    f.eval = [P](cplx l) { return l * Operator::identity({2, 2}) + I_UNIT * P; };
    f.regularity = I_UNIT;
    return f;
}

SpectralMatrixFamily r_xxz(cplx mu, Gradation gradation) {
    SpectralMatrixFamily f;
    f.name = gradation == Gradation::principal ? "xxz_principal" : "xxz_homogeneous";
    const cplx im = I_UNIT * mu;
    f.eval = [im, gradation](cplx l) {
        const cplx corner = std::sinh(l + im);
        const cplx mid = std::sinh(l);
        const cplx s = std::sinh(im);
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = corner;
        m(3, 3) = corner;
        m(1, 1) = mid;
        m(2, 2) = mid;
        if (gradation == Gradation::principal) {
            m(1, 2) = s;
            m(2, 1) = s;
        } else {
            m(1, 2) = std::exp(l) * s;
            m(2, 1) = std::exp(-l) * s;
        }
        return Operator({2, 2}, std::move(m));
    };
    f.regularity = std::sinh(im);
    return f;
}

Operator flip(const Operator& r12) {
    if (r12.factors() != 2 || r12.dims()[0] != r12.dims()[1])
        throw DimensionError("flip needs a two-factor operator with equal local dims");
    const Operator P = permutation(r12.dims()[0]);
    return P * r12 * P;
}

SpectralMatrixFamily braided(const SpectralMatrixFamily& R) {
    if (R.dim_left != R.dim_right) throw DimensionError("braided form needs square local dims");
    SpectralMatrixFamily f;
    f.name = R.name + "_braided";
    f.dim_left = R.dim_left;
    f.dim_right = R.dim_right;
    const Operator P = permutation(R.dim_left);
    auto eval = R.eval;
    f.eval = [P, eval](cplx l) { return P * eval(l); };
    f.regularity = R.regularity;
    return f;
}

double ybe_residual(const SpectralMatrixFamily& R, cplx l1, cplx l2) {
    const int n = R.dim_left;
    const std::vector<int> d{n, n, n};
    auto at = [&](cplx l, int i, int j) { return embed_pair(R(l), i, j, d); };
    const Operator lhs = at(l1 - l2, 1, 2) * at(l1, 1, 3) * at(l2, 2, 3);
    const Operator rhs = at(l2, 2, 3) * at(l1, 1, 3) * at(l1 - l2, 1, 2);
    return relative_residual(lhs, rhs);
}

double braided_ybe_residual(const SpectralMatrixFamily& Rc, cplx l1, cplx l2) {
    const int n = Rc.dim_left;
    const std::vector<int> d{n, n, n};
    auto b12 = [&](cplx l) { return embed_pair(Rc(l), 1, 2, d); };
    auto b23 = [&](cplx l) { return embed_pair(Rc(l), 2, 3, d); };
    const Operator lhs = b12(l1 - l2) * b23(l1) * b12(l2);
    const Operator rhs = b23(l2) * b12(l1) * b23(l1 - l2);
    return relative_residual(lhs, rhs);
}

Operator baxterize(const BraidFamily& fam, int bond, cplx lambda) {
    if (check_hecke(fam).max() > 1e-8) throw std::invalid_argument("family fails the Hecke relations");
    return std::exp(lambda) * fam.g(bond) - std::exp(-lambda) * fam.g_inverse(bond);
}

SpectralMatrixFamily baxterized_local(int n, cplx q) {
    const BraidFamily fam = hecke_rep(n, 2, q);
    if (check_hecke(fam).max() > 1e-8) throw std::invalid_argument("family fails the Hecke relations");
    SpectralMatrixFamily f;
    f.name = "baxterized_hecke_" + std::to_string(n);
    f.dim_left = n;
    f.dim_right = n;
    const Operator g = fam.g(1), ginv = fam.g_inverse(1);
    f.eval = [g, ginv](cplx l) { return std::exp(l) * g - std::exp(-l) * ginv; };
    return f;
}

Operator gauge_v(cplx lambda) {
    Matrix v = Matrix::Zero(2, 2);
    v(0, 0) = std::exp(0.5 * lambda);
    v(1, 1) = std::exp(-0.5 * lambda);
    return Operator(v);
}

SpectralMatrixFamily gauge_to_principal(const SpectralMatrixFamily& R) {
    SpectralMatrixFamily f = R;
    f.name = R.name + "_gauged";
    auto eval = R.eval;
    const int m = R.dim_right;
    f.eval = [eval, m](cplx l) {
        const Operator I2 = Operator::identity({m});
        return kron(gauge_v(-l), I2) * eval(l) * kron(gauge_v(l), I2);
    };
    return f;
}

double intertwiner_residual(const SpectralMatrixFamily& R, const AlgebraRep& rep, cplx lambda) {
    if (rep.n != R.dim_left || rep.n != R.dim_right) throw DimensionError("rep does not match R local dims");
    const Coproduct d = coproduct_uq(rep, rep);
    const Coproduct dp = opposite_coproduct_uq(rep, rep);
    const Operator r = R(lambda);
    const Operator rc = permutation(rep.n) * r;
    double worst = 0.0;
    for (const char* x : {"qJz", "Jp", "Jm"}) {
        worst = std::max(worst, relative_residual(dp.image(x) * r, r * d.image(x)));
        worst = std::max(worst, comm_norm(d.image(x), rc));
    }
    return worst;
}

Operator derivative(const std::function<Operator(cplx)>& f, cplx at, double h) {
    auto central = [&](double s) { return (1.0 / (2.0 * s)) * (f(at + s) - f(at - s)); };
    const Operator d1 = central(h);
    const Operator d2 = central(0.5 * h);
    return (1.0 / 3.0) * (4.0 * d2 - d1);
}

Operator derivative_fine(const std::function<Operator(cplx)>& f, cplx at, double h) {
    auto central = [&](double s) { return (1.0 / (2.0 * s)) * (f(at + s) - f(at - s)); };
    const Operator d1 = central(h);
    const Operator d2 = central(0.5 * h);
    const Operator d4 = central(0.25 * h);
    const Operator r1 = (1.0 / 3.0) * (4.0 * d2 - d1);
    const Operator r2 = (1.0 / 3.0) * (4.0 * d4 - d2);
    return (1.0 / 15.0) * (16.0 * r2 - r1);
}

}  // namespace qis
