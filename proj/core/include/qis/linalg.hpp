#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qis {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr cplx I_UNIT{0.0, 1.0};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense operator on a tensor product of local spaces. The first entry of
// dims is the most significant index of the matrix.
class Operator {
public:
    Operator() = default;
    Operator(std::vector<int> dims, Matrix m);
    explicit Operator(Matrix m);  // single factor

    static Operator identity(const std::vector<int>& dims);
    static Operator zero(const std::vector<int>& dims);

    const std::vector<int>& dims() const { return dims_; }
    const Matrix& matrix() const { return m_; }
    Matrix& matrix() { return m_; }
    Eigen::Index size() const { return m_.rows(); }
    int factors() const { return static_cast<int>(dims_.size()); }
    cplx operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    Operator adjoint() const { return {dims_, m_.adjoint()}; }
    Operator transpose() const { return {dims_, m_.transpose()}; }
    Operator inverse() const;
    Operator with_dims(std::vector<int> dims) const { return {std::move(dims), m_}; }
    double norm() const { return m_.norm(); }

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(cplx s);

private:
    std::vector<int> dims_;
    Matrix m_;
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(cplx s, const Operator& a);
Operator operator*(const Operator& a, cplx s);

struct Spectrum {
    Vector eigenvalues;
    std::optional<Matrix> eigenvectors;
};

int total_dim(const std::vector<int>& dims);

Operator kron(const Operator& a, const Operator& b);
Operator kron(const std::vector<Operator>& factors);

// Places a at the 1-based site of the product space described by dims.
Operator embed(const Operator& a, int site, const std::vector<int>& dims);

// Places a (acting on dims[i] x dims[j], in that order) on 1-based sites i and j.
Operator embed_pair(const Operator& a, int site_i, int site_j, const std::vector<int>& dims);

// General placement: factor k of a acts on 1-based site sites[k].
Operator embed_sites(const Operator& a, const std::vector<int>& sites, const std::vector<int>& dims);

Operator permutation(int n);
Operator swap_operator(int n, int m);  // a (x) b -> b (x) a for a in C^n, b in C^m

Operator partial_trace_first(const Operator& op);

// Sub-block of op with first factor indices (a, b); 0-based.
Operator first_factor_block(const Operator& op, int a, int b);

Spectrum eig(const Operator& op, bool hermitian, bool vectors = false);

double comm_norm(const Operator& a, const Operator& b);
double relative_residual(const Operator& a, const Operator& b);
double relative_residual(const Matrix& a, const Matrix& b);

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator sigma_plus();   // e_12, raising
Operator sigma_minus();  // e_21, lowering

Operator diagonal(const Vector& d);

}  // namespace qis
