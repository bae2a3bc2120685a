#include "qis/braid.hpp"

#include <string>

namespace qis {

const Operator& BraidFamily::U(int i) const {
    if (i == 0) {
        if (!boundary) throw std::invalid_argument("family has no boundary generator");
        return *boundary;
    }
    if (i < 1 || i > static_cast<int>(bonds.size())) throw std::out_of_range("bond index out of range");
    return bonds[i - 1];
}

Operator BraidFamily::g(int i) const {
    const Operator& u = U(i);
    return u + (i == 0 ? Q : q) * Operator::identity(u.dims());
}

Operator BraidFamily::g_inverse(int i) const {
    if (i == 0) throw std::invalid_argument("g_0 inverse is not fixed by the Hecke condition");
    return g(i) - (q - 1.0 / q) * Operator::identity(U(i).dims());
}

Operator hecke_generator(int n, cplx q) {
    if (n < 2) throw std::invalid_argument("Hecke generator needs n >= 2");
    if (q == cplx(0.0)) throw std::invalid_argument("q must be nonzero");
    Matrix u = Matrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // e_ij (x) e_ji : |j,i> -> |i,j>
            u(i * n + j, j * n + i) += 1.0;
            const double sgn = i > j ? 1.0 : -1.0;
            u(i * n + j, i * n + j) -= std::pow(q, -sgn);
        }
    return {{n, n}, std::move(u)};
}

Operator blob_generator(cplx Q, cplx c) {
    if (Q == cplx(0.0) || c == cplx(0.0)) throw std::invalid_argument("Q and c must be nonzero");
    Matrix e(2, 2);
    e << -1.0 / Q, c, 1.0 / c, -Q;
    return Operator(e);
}

BraidFamily hecke_rep(int n, int N, cplx q) {
    if (N < 2) throw std::invalid_argument("Hecke rep needs N >= 2");
    BraidFamily f;
    f.N = N;
    f.local_dim = n;
    f.kind = BraidKind::hecke;
    f.q = q;
    const Operator u = hecke_generator(n, q);
    const std::vector<int> dims(N, n);
    for (int i = 1; i < N; ++i) f.bonds.push_back(embed_pair(u, i, i + 1, dims));
    return f;
}

BraidFamily blob_rep(int N, cplx q, cplx Q, cplx c) {
    BraidFamily f;
    if (N >= 2) {
        f = hecke_rep(2, N, q);
    } else {
        f.N = N;
        f.local_dim = 2;
        f.q = q;
    }
    f.kind = BraidKind::blob;
    f.Q = Q;
    f.c = c;
    f.boundary = embed(blob_generator(Q, c), 1, std::vector<int>(N, 2));
    return f;
}

namespace {

void far_commutation(const BraidFamily& f, RelationReport& r, bool with_g) {
    double worst = 0.0;
    for (int i = 1; i < f.N; ++i)
        for (int j = i + 2; j < f.N; ++j) {
            const Operator a = with_g ? f.g(i) : f.U(i);
            const Operator b = with_g ? f.g(j) : f.U(j);
            worst = std::max(worst, relative_residual(a * b, b * a));
        }
    r.add(with_g ? "[g_i,g_j]=0 |i-j|>1" : "[U_i,U_j]=0 |i-j|>1", worst);
}

}  // namespace

double polynomial_residual(const Operator& g, const std::vector<cplx>& roots) {
    Operator acc = Operator::identity(g.dims());
    const Operator one = Operator::identity(g.dims());
    for (cplx r : roots) acc = acc * (g - r * one);
    return acc.norm() / std::max(1.0, std::pow(g.norm(), static_cast<double>(roots.size())));
}

RelationReport check_hecke(const BraidFamily& f) {
    RelationReport r;
    const cplx q = f.q;
    double quad = 0.0, inv = 0.0, braid = 0.0;
    for (int i = 1; i < f.N; ++i) {
        const Operator gi = f.g(i);
        quad = std::max(quad, polynomial_residual(gi, {q, -1.0 / q}));
        inv = std::max(inv, relative_residual(gi * f.g_inverse(i), Operator::identity(gi.dims())));
        if (i + 1 < f.N) {
            const Operator gj = f.g(i + 1);
            braid = std::max(braid, relative_residual(gi * gj * gi, gj * gi * gj));
        }
    }
    r.add("(g-q)(g+q^-1)=0", quad);
    r.add("g g^-1=I", inv);
    r.add("g_i g_i+1 g_i=g_i+1 g_i g_i+1", braid);
    far_commutation(f, r, true);
    return r;
}

RelationReport check_temperley_lieb(const BraidFamily& f) {
    RelationReport r;
    const cplx s = f.q + 1.0 / f.q;
    double sq = 0.0, adj = 0.0;
    for (int i = 1; i < f.N; ++i) {
        const Operator& u = f.U(i);
        sq = std::max(sq, relative_residual(u * u, -s * u));
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= f.N) continue;
            const Operator& v = f.U(j);
            adj = std::max(adj, relative_residual(v * u * v, v));
        }
    }
    r.add("U^2=-(q+q^-1)U", sq);
    r.add("U_i+-1 U_i U_i+-1=U_i+-1", adj);
    far_commutation(f, r, false);
    return r;
}

RelationReport check_blob(const BraidFamily& f) {
    if (!f.boundary) throw std::invalid_argument("not a blob family");
    RelationReport r = check_temperley_lieb(f);
    const cplx Q = f.Q;
    const Operator& u0 = f.U(0);
    r.add("U0^2=-(Q+Q^-1)U0", relative_residual(u0 * u0, -(Q + 1.0 / Q) * u0));
    if (f.N >= 2) {
        const cplx kappa = f.q / Q + Q / f.q;
        const Operator& u1 = f.U(1);
        r.add("U1 U0 U1=kappa U1", relative_residual(u1 * u0 * u1, kappa * u1));
        double far = 0.0;
        for (int i = 2; i < f.N; ++i) far = std::max(far, comm_norm(u0, f.U(i)));
        r.add("[U0,U_i]=0 i>1", far);
        const Operator g0 = f.g(0), g1 = f.g(1);
        r.add("g0 g1 g0 g1=g1 g0 g1 g0", relative_residual(g0 * g1 * g0 * g1, g1 * g0 * g1 * g0));
    }
    return r;
}

RelationReport check_btype_quotients(const BraidFamily& f, const std::optional<std::vector<cplx>>& gammas) {
    RelationReport r;
    const Operator g0 = f.g(0);
    r.add("(g0-Q1)(g0-Q2)=0", polynomial_residual(g0, {f.Q, -1.0 / f.Q}));
    if (gammas) r.add("prod(g0-gamma)=0", polynomial_residual(g0, *gammas));
    return r;
}

}  // namespace qis
