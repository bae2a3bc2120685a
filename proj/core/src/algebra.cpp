#include "qis/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace qis {

const Operator& AlgebraRep::operator[](const std::string& label) const {
    auto it = generators.find(label);
    if (it == generators.end())
        throw std::invalid_argument("representation '" + name + "' has no generator " + label);
    return it->second;
}

std::vector<int> AlgebraRep::dims() const {
    if (generators.empty()) return {n};
    return generators.begin()->second.dims();
}

double RelationReport::max() const {
    double m = 0.0;
    for (const auto& r : items) m = std::max(m, r.residual);
    return m;
}

cplx q_number(double k, cplx q) {
    const cplx d = q - 1.0 / q;
    if (std::abs(d) < 1e-12) {
        // q = +-1: limit k q^(k-1)
        return k * std::pow(q, k - 1.0);
    }
    return (std::pow(q, k) - std::pow(q, -k)) / d;
}

Operator q_power(const Operator& jz, cplx q, double e) {
    const Eigen::Index n = jz.size();
    Matrix m = Matrix::Zero(n, n);
    const cplx lq = std::log(q);
    for (Eigen::Index k = 0; k < n; ++k) m(k, k) = std::exp(e * lq * jz(k, k));
    return {jz.dims(), std::move(m)};
}

namespace {

Matrix diag_exponents(int n) {
    Matrix jz = Matrix::Zero(n, n);
    for (int k = 1; k <= n; ++k) jz(k - 1, k - 1) = 0.5 * (n + 1) - k;
    return jz;
}

}  // namespace

AlgebraRep sl2_spin_rep(int n) {
    if (n < 1) throw std::invalid_argument("sl2 rep dimension must be >= 1");
    Matrix jp = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) jp(k - 1, k) = std::sqrt(static_cast<double>(k * (n - k)));
    AlgebraRep r;
    r.name = "sl2_spin_" + std::to_string(n);
    r.kind = AlgebraKind::sl2;
    r.n = n;
    r.generators.emplace("Jz", Operator(diag_exponents(n)));
    r.generators.emplace("Jp", Operator(jp));
    r.generators.emplace("Jm", Operator(Matrix(jp.transpose())));
    return r;
}

namespace {

// Raising-operator entries sqrt([k][n-k]) from a q-number evaluator.
template <class QNumber>
Matrix uq_raising(int n, QNumber qn) {
    Matrix jp = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const cplx prod = qn(k) * qn(n - k);
        if (std::abs(prod) < 1e-12)
            throw std::invalid_argument("q is degenerate for dimension " + std::to_string(n));
        jp(k - 1, k) = std::sqrt(prod);
    }
    return jp;
}

AlgebraRep uq_from_raising(int n, cplx q, const Matrix& jp) {
    AlgebraRep r;
    r.name = "uq_sl2_spin_" + std::to_string(n);
    r.kind = AlgebraKind::uq_sl2;
    r.n = n;
    r.q = q;
    Operator jz(diag_exponents(n));
    r.generators.emplace("qJz", q_power(jz, q, 1.0));
    r.generators.emplace("qJzInv", q_power(jz, q, -1.0));
    r.generators.emplace("Jz", jz);
    r.generators.emplace("Jp", Operator(jp));
    r.generators.emplace("Jm", Operator(Matrix(jp.transpose())));
    return r;
}

}  // namespace

AlgebraRep uq_sl2_spin_rep(int n, cplx q) {
    if (n < 1) throw std::invalid_argument("Uq(sl2) rep dimension must be >= 1");
    if (std::abs(q) == 0.0) throw std::invalid_argument("q must be nonzero");
    return uq_from_raising(n, q, uq_raising(n, [q](int k) { return q_number(k, q); }));
}

AlgebraRep uq_sl2_spin_rep_mu(int n, cplx mu) {
    if (n < 1) throw std::invalid_argument("Uq(sl2) rep dimension must be >= 1");
    // sin(k mu)/sin(mu) keeps full precision as mu -> 0
    const bool small = std::abs(std::sin(mu)) < 1e-12;
    auto qn = [mu, small](int k) {
        const double kd = k;
        return small ? kd * std::cos(kd * mu) / std::cos(mu) : std::sin(kd * mu) / std::sin(mu);
    };
    AlgebraRep r = uq_from_raising(n, std::exp(I_UNIT * mu), uq_raising(n, qn));
    r.mu = mu;
    // half-integer powers of q follow mu rather than the principal log of q
    const Operator& jz = r["Jz"];
    Matrix a = Matrix::Zero(n, n), d = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        a(k, k) = std::exp(I_UNIT * mu * jz(k, k));
        d(k, k) = 1.0 / a(k, k);
    }
    r.generators.at("qJz") = Operator(a);
    r.generators.at("qJzInv") = Operator(d);
    return r;
}

AlgebraRep cyclic_rep(int p, int k) {
    if (p < 2) throw std::invalid_argument("cyclic rep needs p >= 2");
    const cplx q = std::exp(cplx(0.0, 2.0 * M_PI * k / p));
    Matrix x = Matrix::Zero(p, p);
    Matrix y = Matrix::Zero(p, p);
    for (int j = 1; j <= p; ++j) x(j - 1, j - 1) = std::pow(q, -j);
    for (int j = 1; j < p; ++j) y(j - 1, j) = 1.0;
    y(p - 1, 0) = 1.0;
    AlgebraRep r;
    r.name = "cyclic_" + std::to_string(p) + "_" + std::to_string(k);
    r.kind = AlgebraKind::heisenberg_weyl;
    r.n = p;
    r.p = p;
    r.q = q;
    r.mu = 2.0 * M_PI * k / p;
    r.generators.emplace("X", Operator(x));
    r.generators.emplace("Y", Operator(y));
    return r;
}

AlgebraRep q_oscillator_rep(int p, int k) {
    AlgebraRep c = cyclic_rep(p, k);
    const Operator& X = c["X"];
    const Operator& Y = c["Y"];
    const Operator one = Operator::identity(X.dims());
    AlgebraRep r;
    r.name = "q_oscillator_" + std::to_string(p) + "_" + std::to_string(k);
    r.kind = AlgebraKind::q_oscillator;
    r.n = p;
    r.p = p;
    r.q = c.q;
    r.generators.emplace("V", X);
    r.generators.emplace("a_plus", (X.inverse() - c.q * X) * Y.inverse());
    r.generators.emplace("a", Y * X);
    return r;
}

namespace {

bool is_deformed(const AlgebraRep& r) { return r.kind == AlgebraKind::uq_sl2; }

AlgebraRep combine(const AlgebraRep& L, const AlgebraRep& R) {
    const bool deformed = is_deformed(L) || is_deformed(R);
    if (deformed && (!is_deformed(L) || !is_deformed(R)))
        throw std::invalid_argument("cannot mix deformed and undeformed reps in a co-product");
    if (deformed && std::abs(L.q - R.q) > 1e-14 * std::max(1.0, std::abs(L.q)))
        throw std::invalid_argument("co-product factors have different q");
    if (!deformed && (L.kind != AlgebraKind::sl2 || R.kind != AlgebraKind::sl2))
        throw std::invalid_argument("co-product defined for sl2 and Uq(sl2) reps only");

    const Operator IL = Operator::identity(L.dims());
    const Operator IR = Operator::identity(R.dims());
    AlgebraRep out;
    out.kind = L.kind;
    out.q = L.q;
    out.mu = L.mu;
    out.n = L.n * R.n;
    out.name = L.name + "*" + R.name;
    out.generators.emplace("Jz", kron(L["Jz"], IR) + kron(IL, R["Jz"]));
    if (deformed) {
        out.generators.emplace("qJz", kron(L["qJz"], R["qJz"]));
        out.generators.emplace("qJzInv", kron(L["qJzInv"], R["qJzInv"]));
        for (const char* g : {"Jp", "Jm"})
            out.generators.emplace(g, kron(L["qJzInv"], R[g]) + kron(L[g], R["qJz"]));
    } else {
        for (const char* g : {"Jp", "Jm"}) out.generators.emplace(g, kron(L[g], IR) + kron(IL, R[g]));
    }
    return out;
}

}  // namespace

Coproduct coproduct_uq(const AlgebraRep& left, const AlgebraRep& right) {
    return {combine(left, right), 2};
}

Coproduct opposite_coproduct_uq(const AlgebraRep& left, const AlgebraRep& right) {
    // sigma o Delta: swap the factors of Delta computed on (right, left)
    AlgebraRep swapped = combine(right, left);
    const Operator S = swap_operator(right.n, left.n);  // maps right(x)left -> left(x)right
    std::vector<int> dims = left.dims();
    const auto rd = right.dims();
    dims.insert(dims.end(), rd.begin(), rd.end());
    for (auto& [label, op] : swapped.generators)
        op = Operator(dims, S.matrix() * op.matrix() * S.matrix().transpose());
    swapped.name = "opposite(" + left.name + "*" + right.name + ")";
    return {swapped, 2};
}

Coproduct ncoproduct(const std::vector<AlgebraRep>& reps) {
    if (reps.empty()) throw std::invalid_argument("co-product needs at least one copy");
    // Delta^(l) = (id (x) Delta^(l-1)) Delta, folded from the right
    AlgebraRep acc = reps.back();
    for (int k = static_cast<int>(reps.size()) - 2; k >= 0; --k) acc = combine(reps[k], acc);
    return {acc, static_cast<int>(reps.size())};
}

Coproduct ncoproduct(const AlgebraRep& rep, int copies) {
    if (copies < 1) throw std::invalid_argument("co-product needs at least one copy");
    return ncoproduct(std::vector<AlgebraRep>(copies, rep));
}

Operator casimir_uq(const AlgebraRep& rep) {
    const cplx q = rep.q;
    const Operator& A = rep["qJz"];
    const Operator& D = rep["qJzInv"];
    const cplx d = q - 1.0 / q;
    return q * (A * A) + (1.0 / q) * (D * D) + (d * d) * (rep["Jm"] * rep["Jp"]);
}

namespace {

Operator comm(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace

RelationReport check_relations(const AlgebraRep& rep) {
    RelationReport r;
    switch (rep.kind) {
    case AlgebraKind::sl2: {
        const Operator &z = rep["Jz"], &p = rep["Jp"], &m = rep["Jm"];
        r.add("[Jz,J+]=J+", relative_residual(comm(z, p), p));
        r.add("[Jz,J-]=-J-", relative_residual(comm(z, m), cplx(-1.0) * m));
        r.add("[J+,J-]=2Jz", relative_residual(comm(p, m), cplx(2.0) * z));
        break;
    }
    case AlgebraKind::uq_sl2: {
        const cplx q = rep.q;
        const cplx d = q - 1.0 / q;
        const Operator &A = rep["qJz"], &D = rep["qJzInv"];
        const Operator B = d * rep["Jp"];
        const Operator C = d * rep["Jm"];
        const Operator one = Operator::identity(A.dims());
        r.add("AD=I", relative_residual(A * D, one));
        r.add("DA=I", relative_residual(D * A, one));
        r.add("AB=qBA", relative_residual(A * B, q * (B * A)));
        r.add("AC=q^-1CA", relative_residual(A * C, (1.0 / q) * (C * A)));
        r.add("[B,C]=(q-q^-1)(A^2-D^2)", relative_residual(comm(B, C), d * (A * A - D * D)));
        if (std::abs(d) > 1e-12)
            r.add("[J+,J-]=(q^2Jz-q^-2Jz)/(q-q^-1)",
                  relative_residual(comm(rep["Jp"], rep["Jm"]), (1.0 / d) * (A * A - D * D)));
        break;
    }
    case AlgebraKind::heisenberg_weyl: {
        const Operator &X = rep["X"], &Y = rep["Y"];
        const Operator one = Operator::identity(X.dims());
        Operator xp = one, yp = one;
        for (int k = 0; k < rep.p; ++k) {
            xp = xp * X;
            yp = yp * Y;
        }
        r.add("XY=qYX", relative_residual(X * Y, rep.q * (Y * X)));
        r.add("X^p=I", relative_residual(xp, one));
        r.add("Y^p=I", relative_residual(yp, one));
        break;
    }
    case AlgebraKind::q_oscillator: {
        const cplx q = rep.q;
        const Operator &V = rep["V"], &ap = rep["a_plus"], &a = rep["a"];
        const Operator one = Operator::identity(V.dims());
        r.add("a+a=1-qV^2", relative_residual(ap * a, one - q * (V * V)));
        r.add("aa+=1-q^-1V^2", relative_residual(a * ap, one - (1.0 / q) * (V * V)));
        r.add("Va=qaV", relative_residual(V * a, q * (a * V)));
        r.add("Va+=q^-1a+V", relative_residual(V * ap, (1.0 / q) * (ap * V)));
        break;
    }
    }
    return r;
}

}  // namespace qis
