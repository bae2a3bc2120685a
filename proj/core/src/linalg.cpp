#include "qis/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace qis {

int total_dim(const std::vector<int>& dims) {
    int d = 1;
    for (int x : dims) d *= x;
    return d;
}

namespace {

void check_dims(const std::vector<int>& dims) {
    if (dims.empty()) throw DimensionError("operator needs at least one factor");
    for (int d : dims)
        if (d < 1) throw DimensionError("local dimension must be positive");
}

void check_same_size(const Operator& a, const Operator& b, const char* what) {
    if (a.size() != b.size())
        throw DimensionError(std::string(what) + ": size mismatch " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
}

std::vector<int> strides_of(const std::vector<int>& dims) {
    std::vector<int> s(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
    return s;
}

}  // namespace

Operator::Operator(std::vector<int> dims, Matrix m) : dims_(std::move(dims)), m_(std::move(m)) {
    check_dims(dims_);
    const int d = total_dim(dims_);
    if (m_.rows() != d || m_.cols() != d)
        throw DimensionError("matrix side does not match product of dims");
}

Operator::Operator(Matrix m) : dims_{static_cast<int>(m.rows())}, m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("operator matrix must be square");
    check_dims(dims_);
}

Operator Operator::identity(const std::vector<int>& dims) {
    const int d = total_dim(dims);
    return {dims, Matrix::Identity(d, d)};
}

Operator Operator::zero(const std::vector<int>& dims) {
    const int d = total_dim(dims);
    return {dims, Matrix::Zero(d, d)};
}

Operator Operator::inverse() const {
    Eigen::PartialPivLU<Matrix> lu(m_);
    Matrix inv = lu.inverse();
    if (!inv.allFinite()) throw std::domain_error("singular operator");
    return {dims_, std::move(inv)};
}

Operator& Operator::operator+=(const Operator& o) {
    check_same_size(*this, o, "operator+");
    m_ += o.m_;
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    check_same_size(*this, o, "operator-");
    m_ -= o.m_;
    return *this;
}

Operator& Operator::operator*=(cplx s) {
    m_ *= s;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    check_same_size(a, b, "operator*");
    return {a.dims(), a.matrix() * b.matrix()};
}

Operator operator+(const Operator& a, const Operator& b) {
    Operator r = a;
    r += b;
    return r;
}

Operator operator-(const Operator& a, const Operator& b) {
    Operator r = a;
    r -= b;
    return r;
}

Operator operator*(cplx s, const Operator& a) { return {a.dims(), s * a.matrix()}; }
Operator operator*(const Operator& a, cplx s) { return {a.dims(), a.matrix() * s}; }

Operator kron(const Operator& a, const Operator& b) {
    const Matrix& A = a.matrix();
    const Matrix& B = b.matrix();
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return {std::move(dims), std::move(out)};
}

Operator kron(const std::vector<Operator>& factors) {
    if (factors.empty()) throw DimensionError("kron of an empty list");
    Operator acc = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) acc = kron(acc, factors[k]);
    return acc;
}

Operator embed(const Operator& a, int site, const std::vector<int>& dims) {
    return embed_sites(a, {site}, dims);
}

Operator embed_pair(const Operator& a, int site_i, int site_j, const std::vector<int>& dims) {
    return embed_sites(a, {site_i, site_j}, dims);
}

Operator embed_sites(const Operator& a, const std::vector<int>& sites, const std::vector<int>& dims) {
    check_dims(dims);
    const int nf = static_cast<int>(dims.size());
    const int k = static_cast<int>(sites.size());
    if (k == 0) throw DimensionError("embed needs at least one site");
    std::vector<int> local(k);
    for (int t = 0; t < k; ++t) {
        const int s = sites[t];
        if (s < 1 || s > nf) throw DimensionError("site " + std::to_string(s) + " out of range");
        for (int u = 0; u < t; ++u)
            if (sites[u] == s) throw DimensionError("repeated site in embedding");
        local[t] = dims[s - 1];
    }
    if (a.size() != total_dim(local)) throw DimensionError("operator does not match the local dimensions");

    const std::vector<int> stride = strides_of(dims);
    const std::vector<int> lstride = strides_of(local);
    const int D = total_dim(dims);
    const int d = static_cast<int>(a.size());

    // offset of each local multi-index inside the global index
    std::vector<int> offset(d, 0);
    for (int l = 0; l < d; ++l)
        for (int t = 0; t < k; ++t) offset[l] += ((l / lstride[t]) % local[t]) * stride[sites[t] - 1];

    Matrix out = Matrix::Zero(D, D);
    const Matrix& A = a.matrix();
    for (int c = 0; c < D; ++c) {
        int lc = 0;
        for (int t = 0; t < k; ++t) lc += ((c / stride[sites[t] - 1]) % local[t]) * lstride[t];
        const int base = c - offset[lc];
        for (int lr = 0; lr < d; ++lr) {
            const cplx v = A(lr, lc);
            if (v != cplx(0.0)) out(base + offset[lr], c) = v;
        }
    }
    return {dims, std::move(out)};
}

Operator permutation(int n) { return swap_operator(n, n); }

Operator swap_operator(int n, int m) {
    if (n < 1 || m < 1) throw DimensionError("permutation needs positive dimension");
    Matrix P = Matrix::Zero(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) P(j * n + i, i * m + j) = 1.0;
    return {{n, m}, std::move(P)};
}

Operator partial_trace_first(const Operator& op) {
    if (op.factors() < 2) throw DimensionError("partial trace needs at least two factors");
    std::vector<int> rest(op.dims().begin() + 1, op.dims().end());
    const int Dr = total_dim(rest);
    Matrix out = Matrix::Zero(Dr, Dr);
    for (int a = 0; a < op.dims().front(); ++a) out += op.matrix().block(a * Dr, a * Dr, Dr, Dr);
    return {std::move(rest), std::move(out)};
}

Operator first_factor_block(const Operator& op, int a, int b) {
    if (op.factors() < 2) throw DimensionError("block extraction needs at least two factors");
    const int n = op.dims().front();
    if (a < 0 || b < 0 || a >= n || b >= n) throw DimensionError("block index out of range");
    std::vector<int> rest(op.dims().begin() + 1, op.dims().end());
    const int Dr = total_dim(rest);
    return {std::move(rest), op.matrix().block(a * Dr, b * Dr, Dr, Dr)};
}

Spectrum eig(const Operator& op, bool hermitian, bool vectors) {
    const Eigen::Index n = op.size();
    Vector vals(n);
    Matrix vecs;
    if (hermitian) {
        Matrix h = 0.5 * (op.matrix() + op.matrix().adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigen-solver did not converge");
        vals = es.eigenvalues().cast<cplx>();
        if (vectors) vecs = es.eigenvectors();
    } else {
        Eigen::ComplexEigenSolver<Matrix> es(op.matrix(), vectors);
        if (es.info() != Eigen::Success) throw ConvergenceError("eigen-solver did not converge");
        vals = es.eigenvalues();
        if (vectors) vecs = es.eigenvectors();
    }
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        if (vals[i].real() != vals[j].real()) return vals[i].real() < vals[j].real();
        return vals[i].imag() < vals[j].imag();
    });
    Spectrum s;
    s.eigenvalues.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) s.eigenvalues[k] = vals[order[k]];
    if (vectors) {
        Matrix sorted(n, n);
        for (Eigen::Index k = 0; k < n; ++k) sorted.col(k) = vecs.col(order[k]);
        s.eigenvectors = std::move(sorted);
    }
    return s;
}

double comm_norm(const Operator& a, const Operator& b) {
    check_same_size(a, b, "comm_norm");
    const Matrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    return c.norm() / std::max(1.0, a.norm() * b.norm());
}

double relative_residual(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("residual: size mismatch");
    return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

double relative_residual(const Operator& a, const Operator& b) {
    return relative_residual(a.matrix(), b.matrix());
}

Operator pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Operator(m);
}

Operator pauli_y() {
    Matrix m(2, 2);
    m << 0, -I_UNIT, I_UNIT, 0;
    return Operator(m);
}

Operator pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Operator(m);
}

Operator sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return Operator(m);
}

Operator sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return Operator(m);
}

Operator diagonal(const Vector& d) { return Operator(Matrix(d.asDiagonal())); }

}  // namespace qis
