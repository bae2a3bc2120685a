#include "qis/chain.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include <Eigen/QR>

namespace qis {

std::vector<int> ChainSpec::full_dims() const {
    std::vector<int> d{2};
    d.insert(d.end(), site_dims.begin(), site_dims.end());
    return d;
}

bool ChainSpec::fundamental() const {
    for (int n : site_dims)
        if (n != 2) return false;
    return true;
}

ChainSpec ChainSpec::periodic_xxz(int N, cplx mu, Gradation g, int n) {
    ChainSpec c;
    c.model = Model::xxz;
    c.site_dims.assign(N, n);
    c.mu = mu;
    c.gradation = g;
    return c;
}

ChainSpec ChainSpec::periodic_xxx(int N, int n) {
    ChainSpec c;
    c.model = Model::xxx;
    c.site_dims.assign(N, n);
    return c;
}

ChainSpec ChainSpec::open_xxz(int N, cplx mu, Gradation g, KSpec minus, KSpec plus) {
    ChainSpec c = periodic_xxz(N, mu, g);
    c.boundary = BoundaryType::open;
    c.k_minus = minus;
    c.k_plus = plus;
    return c;
}

void validate(const ChainSpec& chain) {
    if (chain.N() < 1) throw std::invalid_argument("chain needs at least one site");
    for (int n : chain.site_dims)
        if (n < 1) throw std::invalid_argument("site dimension must be positive");
}

AlgebraRep site_rep(const ChainSpec& chain, int site) {
    const int n = chain.site_dims.at(site - 1);
    return chain.model == Model::xxx ? sl2_spin_rep(n) : uq_sl2_spin_rep_mu(n, chain.mu);
}

LaxOperator site_lax(const ChainSpec& chain, int site) {
    const AlgebraRep rep = site_rep(chain, site);
    return chain.model == Model::xxx ? lax_xxx(rep) : lax_xxz(rep, chain.gradation);
}

SpectralMatrixFamily auxiliary_r(const ChainSpec& chain) {
    return chain.model == Model::xxx ? r_xxx() : r_xxz(chain.mu, chain.gradation);
}

Monodromy::Monodromy(ChainSpec chain) : chain_(std::move(chain)) {
    validate(chain_);
    for (int i = 1; i <= chain_.N(); ++i) lax_.push_back(site_lax(chain_, i));
}

Operator Monodromy::operator()(cplx lambda) const {
    const std::vector<int> dims = chain_.full_dims();
    Operator T = embed_pair(lax_[0](lambda), 1, 2, dims);
    for (int i = 2; i <= chain_.N(); ++i) T = embed_pair(lax_[i - 1](lambda), 1, i + 1, dims) * T;
    return T;
}

Operator monodromy(const ChainSpec& chain, cplx lambda) { return Monodromy(chain)(lambda); }

double frt_residual(const ChainSpec& chain, cplx l1, cplx l2) {
    const Monodromy T(chain);
    const SpectralMatrixFamily R = auxiliary_r(chain);
    std::vector<int> dims{2, 2};
    dims.insert(dims.end(), chain.site_dims.begin(), chain.site_dims.end());
    std::vector<int> a_sites{1}, b_sites{2};
    for (int i = 0; i < chain.N(); ++i) {
        a_sites.push_back(i + 3);
        b_sites.push_back(i + 3);
    }
    const Operator r = embed_pair(R(l1 - l2), 1, 2, dims);
    const Operator ta = embed_sites(T(l1), a_sites, dims);
    const Operator tb = embed_sites(T(l2), b_sites, dims);
    return relative_residual(r * ta * tb, tb * ta * r);
}

struct OperatorCache::State {
    mutable std::shared_mutex mutex;
    std::map<std::pair<double, double>, Operator> values;
};

OperatorCache::OperatorCache(std::function<Operator(cplx)> f)
    : f_(std::move(f)), state_(std::make_shared<State>()) {}

Operator OperatorCache::operator()(cplx lambda) const {
    const std::pair<double, double> key{lambda.real(), lambda.imag()};
    {
        std::shared_lock lock(state_->mutex);
        auto it = state_->values.find(key);
        if (it != state_->values.end()) return it->second;
    }
    Operator v = f_(lambda);
    std::unique_lock lock(state_->mutex);
    // first writer wins; later writers computed the same pure value
    return state_->values.emplace(key, std::move(v)).first->second;
}

size_t OperatorCache::size() const {
    std::shared_lock lock(state_->mutex);
    return state_->values.size();
}

TransferFamily::TransferFamily(const ChainSpec& chain)
    : chain_(chain), cache_([T = Monodromy(chain)](cplx l) { return partial_trace_first(T(l)); }) {
    if (chain.boundary != BoundaryType::periodic)
        throw std::invalid_argument("open chains use the boundary transfer matrix");
}

TransferFamily transfer(const ChainSpec& chain) { return TransferFamily(chain); }

Operator shift_operator(int N, int d) {
    const std::vector<int> dims(N, d);
    Operator pi = Operator::identity(dims);
    const Operator P = permutation(d);
    for (int i = 1; i < N; ++i) pi = pi * embed_pair(P, i, i + 1, dims);
    return pi;
}

namespace {

cplx regularity_of(const ChainSpec& chain) {
    const SpectralMatrixFamily R = auxiliary_r(chain);
    if (!R.regularity) throw std::invalid_argument("R family is not regular");
    return *R.regularity;
}

}  // namespace

Operator momentum_operator(const ChainSpec& chain) {
    if (!chain.fundamental()) throw std::invalid_argument("momentum operator needs spin-1/2 sites");
    const cplx c = regularity_of(chain);
    const Operator t0 = partial_trace_first(monodromy(chain, 0.0));
    return (1.0 / std::pow(c, chain.N())) * t0;
}

HamiltonianExtraction hamiltonian_from_transfer(const ChainSpec& chain, double step) {
    if (!chain.fundamental()) throw std::invalid_argument("Hamiltonian extraction needs spin-1/2 sites");
    const int N = chain.N();
    if (N < 2) throw std::invalid_argument("Hamiltonian extraction needs N >= 2");
    const SpectralMatrixFamily Rc = braided(auxiliary_r(chain));
    const Operator dR = derivative(Rc.eval, 0.0, step);
    const std::vector<int> dims = chain.quantum_dims();
    Operator sum = Operator::zero(dims);
    for (int i = 1; i <= N; ++i) {
        const int j = i == N ? 1 : i + 1;
        sum += embed_pair(dR, i, j, dims);
    }
    const Monodromy T(chain);
    auto t = [&T](cplx l) { return partial_trace_first(T(l)); };
    const Operator t0 = t(0.0);
    Eigen::PartialPivLU<Matrix> lu(t0.matrix());
    if (std::abs(lu.determinant()) < 1e-300) throw std::domain_error("t(0) is singular");
    const Operator dt = derivative(t, 0.0, step);
    Operator logd(dims, lu.solve(dt.matrix()));
    return {sum, logd, regularity_of(chain)};
}

LinearFit fit_operator(const Operator& target, const std::vector<Operator>& basis) {
    const Eigen::Index D2 = target.size() * target.size();
    Matrix A(D2, static_cast<Eigen::Index>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].size() != target.size()) throw DimensionError("fit basis size mismatch");
        A.col(static_cast<Eigen::Index>(k)) = basis[k].matrix().reshaped();
    }
    const Vector b = target.matrix().reshaped();
    const Vector x = A.completeOrthogonalDecomposition().solve(b);
    LinearFit fit;
    for (Eigen::Index k = 0; k < x.size(); ++k) fit.coefficients.push_back(x[k]);
    fit.residual = (A * x - b).norm() / std::max(b.norm(), 1e-300);
    return fit;
}

namespace {

void require_xxx(const ChainSpec& chain) {
    if (chain.model != Model::xxx) throw std::invalid_argument("Yangian charges need an XXX chain");
    validate(chain);
}

std::vector<Operator> p_operators(const ChainSpec& chain) {
    const std::vector<int> dims = chain.full_dims();
    std::vector<Operator> ps;
    for (int i = 1; i <= chain.N(); ++i) ps.push_back(embed_pair(sl2_p_matrix(site_rep(chain, i)), 1, i + 1, dims));
    return ps;
}

ChainSpec sub_chain(const ChainSpec& chain, int first, int last) {
    ChainSpec c = chain;
    c.site_dims.assign(chain.site_dims.begin() + (first - 1), chain.site_dims.begin() + last);
    return c;
}

}  // namespace

Operator YangianCharges::entry(int level, int a, int b) const {
    const Operator& q = level == 0 ? q0 : q1;
    return first_factor_block(q, b, a);
}

YangianCharges yangian_charges(const ChainSpec& chain) {
    require_xxx(chain);
    const std::vector<Operator> ps = p_operators(chain);
    const std::vector<int> dims = chain.full_dims();
    Operator q0 = Operator::zero(dims), q1 = Operator::zero(dims);
    for (size_t i = 0; i < ps.size(); ++i) {
        q0 += I_UNIT * ps[i];
        q1 += 0.5 * (ps[i] * ps[i]);
        for (size_t j = i + 1; j < ps.size(); ++j) q1 += 0.5 * (ps[i] * ps[j] - ps[j] * ps[i]);
    }
    return {chain.N(), q0, q1};
}

RelationReport check_yangian_relations(const YangianCharges& y) {
    RelationReport r;
    double r00 = 0.0, r01 = 0.0;
    auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    const Operator qab = y.entry(0, a, b);
                    for (int level : {0, 1}) {
                        const Operator qcd = y.entry(level, c, d);
                        const Operator lhs = qab * qcd - qcd * qab;
                        const Operator rhs = (I_UNIT * delta(c, b)) * y.entry(level, a, d) -
                                             (I_UNIT * delta(a, d)) * y.entry(level, c, b);
                        const double res = relative_residual(lhs, rhs);
                        (level == 0 ? r00 : r01) = std::max(level == 0 ? r00 : r01, res);
                    }
                }
    r.add("[Q0_ab,Q0_cd]", r00);
    r.add("[Q0_ab,Q1_cd]", r01);
    return r;
}

double yangian_coproduct_residual(const ChainSpec& chain, double h, bool reversed) {
    require_xxx(chain);
    if (chain.N() < 2) throw std::invalid_argument("co-product recursion needs N >= 2");
    const YangianCharges whole = yangian_charges(chain);
    const YangianCharges A = yangian_charges(sub_chain(chain, 1, 1));
    const YangianCharges B = yangian_charges(sub_chain(chain, 2, chain.N()));
    const YangianCharges& first = reversed ? B : A;
    const YangianCharges& second = reversed ? A : B;
    const std::vector<int> fd = first.q0.dims(), sd = second.q0.dims();
    const Operator I1 = Operator::identity(std::vector<int>(fd.begin() + 1, fd.end()));
    const Operator I2 = Operator::identity(std::vector<int>(sd.begin() + 1, sd.end()));
    const int d1 = static_cast<int>(I1.size()), d2 = static_cast<int>(I2.size());
    const Matrix S = swap_operator(d1, d2).matrix();  // first(x)second -> second(x)first

    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Operator c0 = kron(first.entry(0, a, b), I2) + kron(I1, second.entry(0, a, b));
            Operator c1 = kron(first.entry(1, a, b), I2) + kron(I1, second.entry(1, a, b));
            for (int d = 0; d < 2; ++d)
                c1 += (0.5 * h) * (kron(first.entry(0, a, d), second.entry(0, d, b)) -
                                   kron(first.entry(0, d, b), second.entry(0, a, d)));
            Matrix m0 = c0.matrix(), m1 = c1.matrix();
            if (reversed) {
                m0 = S * m0 * S.transpose();
                m1 = S * m1 * S.transpose();
            }
            worst = std::max(worst, relative_residual(whole.entry(0, a, b).matrix(), m0));
            worst = std::max(worst, relative_residual(whole.entry(1, a, b).matrix(), m1));
        }
    return worst;
}

std::vector<Operator> monodromy_coefficients(const ChainSpec& chain) {
    require_xxx(chain);
    const std::vector<Operator> ps = p_operators(chain);
    const std::vector<int> dims = chain.full_dims();
    std::vector<Operator> c{Operator::identity(dims)};
    for (const Operator& p : ps) {
        // (lambda + i P_i) * sum_k c_k lambda^k
        std::vector<Operator> next(c.size() + 1, Operator::zero(dims));
        for (size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] += I_UNIT * (p * c[k]);
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace qis
