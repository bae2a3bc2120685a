#include "qis/boundary.hpp"

#include <cmath>

namespace qis {

namespace {

Operator aux2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return Operator(m);
}

KMatrixFamily to_principal(KMatrixFamily k) {
    auto h = k.eval;
    k.eval = [h](cplx l) { return gauge_v(-l) * h(l) * gauge_v(-l); };
    return k;
}

}  // namespace

KMatrixFamily k_identity() {
    return {"identity", [](cplx) { return Operator::identity({2}); }};
}

KMatrixFamily k_gz_dvgr(cplx xi, cplx kappa, Gradation gradation) {
    KMatrixFamily k{"gz_dvgr", [xi, kappa](cplx l) {
                        const cplx off = kappa * std::sinh(2.0 * l);
                        return aux2(std::sinh(-l + I_UNIT * xi) * std::exp(l), off, off,
                                    std::sinh(l + I_UNIT * xi) * std::exp(-l));
                    }};
    return gradation == Gradation::principal ? to_principal(k) : k;
}

KMatrixFamily k_blob(cplx mu, double m, double gamma, cplx c, Gradation gradation) {
    const cplx imu = I_UNIT * mu;
    const cplx q = std::exp(imu);
    const cplx Q = I_UNIT * std::exp(imu * m);
    const cplx kappa = q / Q + Q / q;
    const Operator e = blob_generator(Q, c);
    KMatrixFamily k{"blob", [=](cplx l) {
                        const cplx y = 2.0 * std::sinh(imu) * std::sinh(2.0 * l);
                        const cplx x = (Q + 1.0 / Q) * std::cosh(2.0 * l + imu) - std::cosh(2.0 * imu * gamma) -
                                       kappa * std::cosh(2.0 * l);
                        return x * Operator::identity({2}) + y * e;
                    }};
    return gradation == Gradation::principal ? to_principal(k) : k;
}

KMatrixFamily k_from_spec(const KSpec& spec, const ChainSpec& chain) {
    switch (spec.kind) {
        case KSpec::Kind::identity:
            return k_identity();
        case KSpec::Kind::gz_dvgr:
            if (chain.model != Model::xxz) throw std::invalid_argument("gz_dvgr K needs an XXZ chain");
            return k_gz_dvgr(spec.xi, spec.kappa, chain.gradation);
        case KSpec::Kind::blob:
            if (chain.model != Model::xxz) throw std::invalid_argument("blob K needs an XXZ chain");
            return k_blob(chain.mu, spec.blob_m, spec.blob_gamma, spec.blob_c, chain.gradation);
    }
    throw std::invalid_argument("unknown K kind");
}

cplx crossing_shift(const ChainSpec& chain) { return chain.model == Model::xxx ? I_UNIT : I_UNIT * chain.mu; }

Operator boundary_twist(const ChainSpec& chain) {
    if (chain.model == Model::xxz && chain.gradation == Gradation::homogeneous) {
        const cplx q = std::exp(I_UNIT * chain.mu);
        return aux2(q, 0.0, 0.0, 1.0 / q);
    }
    return Operator::identity({2});
}

KMatrixFamily k_plus(const KMatrixFamily& k_minus, const ChainSpec& chain) {
    const Operator M = boundary_twist(chain);
    const cplx shift = crossing_shift(chain);
    auto k = k_minus.eval;
    return {k_minus.name + "_plus", [=](cplx l) { return M * k(-l - shift).transpose(); }};
}

double re_residual(const SpectralMatrixFamily& R, const std::function<Operator(cplx)>& K, cplx l1, cplx l2) {
    const Operator k1 = K(l1), k2 = K(l2);
    if (k1.factors() < 1 || k1.dims()[0] != R.dim_left || R.dim_left != R.dim_right)
        throw DimensionError("K and R auxiliary dimensions differ");
    if (k1.dims() != k2.dims()) throw DimensionError("K changes shape with the spectral parameter");
    std::vector<int> dims{R.dim_left, R.dim_right};
    std::vector<int> s1{1}, s2{2};
    for (size_t k = 1; k < k1.dims().size(); ++k) {
        dims.push_back(k1.dims()[k]);
        s1.push_back(static_cast<int>(k) + 2);
        s2.push_back(static_cast<int>(k) + 2);
    }
    auto r12 = [&](cplx x) { return embed_pair(R(x), 1, 2, dims); };
    auto r21 = [&](cplx x) { return embed_pair(flip(R(x)), 1, 2, dims); };
    const Operator K1 = embed_sites(k1, s1, dims);
    const Operator K2 = embed_sites(k2, s2, dims);
    const Operator lhs = r12(l1 - l2) * K1 * r21(l1 + l2) * K2;
    const Operator rhs = K2 * r12(l1 + l2) * K1 * r21(l1 - l2);
    return relative_residual(lhs, rhs);
}

double re_residual(const SpectralMatrixFamily& R, const KMatrixFamily& K, cplx l1, cplx l2) {
    return re_residual(R, K.eval, l1, l2);
}

Operator dressed_k(const LaxOperator& L, const KMatrixFamily& K, cplx lambda) {
    const Operator Lm = L(-lambda);
    if (Lm.matrix().fullPivLu().rank() < Lm.size()) throw std::domain_error("L(-lambda) is singular");
    const Operator k = kron(K(lambda), Operator::identity({L.quantum_dim()}));
    return L(lambda) * k * Lm.inverse();
}

Operator double_row_monodromy(const ChainSpec& chain, const KMatrixFamily& K, cplx lambda) {
    const Monodromy T(chain);
    const Operator k = kron(K(lambda), Operator::identity(chain.quantum_dims()));
    return T(lambda) * k.with_dims(chain.full_dims()) * T(-lambda).inverse();
}

OpenTransferFamily::OpenTransferFamily(const ChainSpec& chain)
    : chain_(chain), cache_([chain](cplx) { return Operator(); }) {
    if (chain.boundary != BoundaryType::open) throw std::invalid_argument("open transfer needs an open chain");
    validate(chain);
    const KMatrixFamily km = k_from_spec(chain.k_minus, chain);
    const KMatrixFamily kp = k_plus(k_from_spec(chain.k_plus, chain), chain);
    const Monodromy T(chain);
    const std::vector<int> q = chain.quantum_dims();
    const std::vector<int> full = chain.full_dims();
    cache_ = OperatorCache([=](cplx l) {
        const Operator Kp = kron(kp(l), Operator::identity(q)).with_dims(full);
        const Operator Km = kron(km(l), Operator::identity(q)).with_dims(full);
        return partial_trace_first(Kp * T(l) * Km * T(-l).inverse());
    });
}

OpenTransferFamily open_transfer(const ChainSpec& chain) { return OpenTransferFamily(chain); }

Operator open_hamiltonian(const ChainSpec& chain) {
    if (!chain.fundamental()) throw std::invalid_argument("open Hamiltonian needs spin-1/2 sites");
    const OpenTransferFamily t(chain);
    const Operator t0 = t(0.0);
    if (t0.matrix().fullPivLu().rank() < t0.size()) throw std::domain_error("t(0) is singular");
    return derivative_fine([&t](cplx l) { return t(l); }, 0.0);
}

double uq_symmetry_residual(const Operator& op, const ChainSpec& chain) {
    std::vector<AlgebraRep> reps;
    for (int i = 1; i <= chain.N(); ++i) reps.push_back(site_rep(chain, i));
    const Coproduct d = ncoproduct(reps);
    double worst = 0.0;
    for (const char* x : {"Jp", "Jm", chain.model == Model::xxz ? "qJz" : "Jz"})
        worst = std::max(worst, comm_norm(op, d.image(x).with_dims(op.dims())));
    return worst;
}

CasimirAsymptotics casimir_from_asymptotics(const AlgebraRep& rep) {
    if (rep.kind != AlgebraKind::uq_sl2) throw std::invalid_argument("Casimir asymptotics need a Uq(sl2) rep");
    const TriangularLax L = lax_xxz_limits(rep);
    const cplx q = rep.q;
    const Operator M = kron(aux2(q, 0.0, 0.0, 1.0 / q), Operator::identity({rep.n}));
    CasimirAsymptotics out;
    // L(l) L^-1(-l) -> -L+ (L-)^-1 as l -> +inf and -L- (L+)^-1 as l -> -inf
    out.t_plus = cplx(-1.0) * partial_trace_first(M * L.plus * L.minus.inverse());
    out.t_minus = cplx(-1.0) * partial_trace_first(M * L.minus * L.plus.inverse());
    const Matrix c = casimir_uq(rep).matrix();
    const Matrix& t = out.t_plus.matrix();
    out.scale = c.cwiseProduct(c.conjugate()).sum() == cplx(0.0) ? cplx(0.0)
                                                                  : (c.conjugate().cwiseProduct(t)).sum() / c.squaredNorm();
    out.proportionality_residual = (t - out.scale * c).norm() / std::max(1e-300, t.norm());
    return out;
}

}  // namespace qis
