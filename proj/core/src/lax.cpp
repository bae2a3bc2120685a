#include "qis/lax.hpp"

#include <cmath>

namespace qis {

Operator aux_matrix(const Operator& a11, const Operator& a12, const Operator& a21, const Operator& a22) {
    const Eigen::Index n = a11.size();
    Matrix m(2 * n, 2 * n);
    m.block(0, 0, n, n) = a11.matrix();
    m.block(0, n, n, n) = a12.matrix();
    m.block(n, 0, n, n) = a21.matrix();
    m.block(n, n, n, n) = a22.matrix();
    std::vector<int> dims{2};
    dims.insert(dims.end(), a11.dims().begin(), a11.dims().end());
    return {std::move(dims), std::move(m)};
}

Operator sl2_p_matrix(const AlgebraRep& rep) {
    const Operator& z = rep["Jz"];
    const Operator half = 0.5 * Operator::identity(z.dims());
    return aux_matrix(z + half, rep["Jm"], rep["Jp"], half - z);
}

LaxOperator lax_xxx(const AlgebraRep& rep) {
    LaxOperator L;
    L.name = "xxx_" + rep.name;
    L.rep = rep;
    const Operator P = sl2_p_matrix(rep);
    const Operator one = Operator::identity(P.dims());
    L.eval = [P, one](cplx l) { return l * one + I_UNIT * P; };
    return L;
}

namespace {

// sinh(shift + i mu Jz * sign) for diagonal Jz
Operator sinh_diag(const Operator& jz, cplx shift, cplx imu, double sign) {
    Matrix m = Matrix::Zero(jz.size(), jz.size());
    for (Eigen::Index k = 0; k < jz.size(); ++k) m(k, k) = std::sinh(shift + sign * imu * jz(k, k));
    return {jz.dims(), std::move(m)};
}

cplx mu_of(const AlgebraRep& r) { return r.mu ? *r.mu : -I_UNIT * std::log(r.q); }

}  // namespace

LaxOperator lax_xxz(const AlgebraRep& rep, Gradation gradation) {
    if (rep.kind != AlgebraKind::uq_sl2) throw std::invalid_argument("lax_xxz needs a Uq(sl2) rep");
    LaxOperator L;
    L.name = std::string("xxz_") + (gradation == Gradation::principal ? "p_" : "h_") + rep.name;
    L.rep = rep;
    L.gradation = gradation;
    const cplx imu = I_UNIT * mu_of(rep);
    const Operator jz = rep["Jz"], jp = rep["Jp"], jm = rep["Jm"];
    const int n = rep.n;
    L.eval = [=](cplx l) {
        const cplx s = std::sinh(imu);
        Operator lp = aux_matrix(sinh_diag(jz, l + 0.5 * imu, imu, 1.0), s * jm, s * jp,
                                 sinh_diag(jz, l + 0.5 * imu, imu, -1.0));
        if (gradation == Gradation::principal) return lp;
        const Operator In = Operator::identity({n});
        return kron(gauge_v(l), In) * lp * kron(gauge_v(-l), In);
    };
    return L;
}

TriangularLax lax_xxz_limits(const AlgebraRep& rep) {
    const cplx q = rep.q;
    const cplx c = std::exp(0.5 * I_UNIT * mu_of(rep));
    const cplx d = q - 1.0 / q;
    const Operator& A = rep["qJz"];
    const Operator& D = rep["qJzInv"];
    const Operator zero = Operator::zero(A.dims());
    TriangularLax t;
    t.plus = aux_matrix(c * A, d * rep["Jm"], zero, c * D);
    t.minus = aux_matrix((1.0 / c) * D, zero, -d * rep["Jp"], (1.0 / c) * A);
    return t;
}

TriangularLax r_xxz_limits(cplx mu) {
    const cplx q = std::exp(I_UNIT * mu);
    const cplx d = q - 1.0 / q;
    Matrix p = Matrix::Zero(4, 4), m = Matrix::Zero(4, 4);
    p(0, 0) = q;
    p(1, 1) = 1.0;
    p(1, 2) = d;
    p(2, 2) = 1.0;
    p(3, 3) = q;
    m(0, 0) = 1.0 / q;
    m(1, 1) = 1.0;
    m(2, 1) = -d;
    m(2, 2) = 1.0;
    m(3, 3) = 1.0 / q;
    return {Operator({2, 2}, p), Operator({2, 2}, m)};
}

LaxOperator lax_sine_gordon(int p, int k, double s) {
    const AlgebraRep hw = cyclic_rep(p, k);
    const cplx q = hw.q;
    const cplx d = q - 1.0 / q;
    const Operator X = hw["X"], Xi = hw["X"].inverse();
    const Operator Y = hw["Y"], Yi = hw["Y"].inverse();
    const cplx qs = std::pow(q, s), qms = std::pow(q, -s);
    // A = D^-1 = X, B and C from the cyclic generators
    const Operator B = (1.0 / d) * ((qms * Xi - qs * X) * Yi);
    const Operator C = (1.0 / d) * ((qms * X - qs * Xi) * Y);
    LaxOperator L;
    L.name = "sine_gordon_" + std::to_string(p);
    L.rep = hw;
    L.eval = [=](cplx l) {
        const cplx e = std::exp(l), ei = std::exp(-l);
        return aux_matrix(e * X - ei * Xi, d * B, d * C, e * Xi - ei * X);
    };
    return L;
}

LaxOperator lax_liouville(int p, int k, cplx alpha) {
    const AlgebraRep hw = cyclic_rep(p, k);
    const cplx q = hw.q;
    const cplx mu = 2.0 * M_PI * k / p;
    const Operator X = hw["X"], Xi = hw["X"].inverse();
    const Operator Z = X * hw["Y"];  // e^{i Pi}
    const Operator Zi = Z.inverse();
    const Operator h = Operator::identity(X.dims()) + (alpha * alpha * q) * (X * X);
    LaxOperator L;
    L.name = "liouville_" + std::to_string(p);
    L.rep = hw;
    L.spectral_scale = mu;
    L.eval = [=](cplx l) {
        const cplx u = mu * l;
        return aux_matrix(Z, (alpha * std::exp(-u)) * X, alpha * (std::exp(u) * X - std::exp(-u) * Xi), h * Zi);
    };
    return L;
}

LaxOperator lax_qoscillator(int p, int k) {
    const AlgebraRep osc = q_oscillator_rep(p, k);
    const cplx mu = 2.0 * M_PI * k / p;
    const Operator V = osc["V"], Vi = osc["V"].inverse();
    const Operator ap = osc["a_plus"], a = osc["a"];
    LaxOperator L;
    L.name = "q_oscillator_" + std::to_string(p);
    L.rep = osc;
    L.spectral_scale = mu;
    L.eval = [=](cplx l) {
        const cplx u = mu * l;
        return aux_matrix(std::exp(u) * V - std::exp(-u) * Vi, ap, a, -std::exp(-u) * V);
    };
    return L;
}

double rll_residual(const SpectralMatrixFamily& R, const LaxOperator& L, cplx l1, cplx l2) {
    const std::vector<int> d{2, 2, L.quantum_dim()};
    const Operator r = embed_pair(R(L.spectral_scale * (l1 - l2)), 1, 2, d);
    const Operator a = embed_pair(L(l1), 1, 3, d);
    const Operator b = embed_pair(L(l2), 2, 3, d);
    return relative_residual(r * a * b, b * a * r);
}

RelationReport check_triangular_limits(cplx mu, const AlgebraRep& rep) {
    const TriangularLax Rt = r_xxz_limits(mu);
    const TriangularLax Lt = lax_xxz_limits(rep);
    const std::vector<int> d{2, 2, rep.n};
    auto r12 = [&](const Operator& r) { return embed_pair(r, 1, 2, d); };
    auto l1 = [&](const Operator& l) { return embed_pair(l, 1, 3, d); };
    auto l2 = [&](const Operator& l) { return embed_pair(l, 2, 3, d); };
    RelationReport rep_out;
    rep_out.add("R+ L1+ L2+ = L2+ L1+ R+", relative_residual(r12(Rt.plus) * l1(Lt.plus) * l2(Lt.plus),
                                                           l2(Lt.plus) * l1(Lt.plus) * r12(Rt.plus)));
    rep_out.add("R- L1- L2- = L2- L1- R-", relative_residual(r12(Rt.minus) * l1(Lt.minus) * l2(Lt.minus),
                                                           l2(Lt.minus) * l1(Lt.minus) * r12(Rt.minus)));
    rep_out.add("R+ L1+ L2- = L2- L1+ R+", relative_residual(r12(Rt.plus) * l1(Lt.plus) * l2(Lt.minus),
                                                           l2(Lt.minus) * l1(Lt.plus) * r12(Rt.plus)));
    return rep_out;
}

}  // namespace qis
