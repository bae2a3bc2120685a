#pragma once

#include <optional>
#include <vector>

#include "qis/algebra.hpp"
#include "qis/linalg.hpp"

namespace qis {

enum class BraidKind { hecke, temperley_lieb, blob };

struct BraidFamily {
    int N = 0;
    int local_dim = 0;
    BraidKind kind = BraidKind::hecke;
    cplx q{1.0, 0.0};
    cplx Q{1.0, 0.0};
    cplx c{1.0, 0.0};
    std::vector<Operator> bonds;     // U_i for i = 1..N-1, stored at i-1
    std::optional<Operator> boundary;  // U_0, blob kind only

    const Operator& U(int i) const;  // 1-based; U(0) is the boundary generator
    Operator g(int i) const;         // g_i = U_i + q, g_0 = U_0 + Q
    Operator g_inverse(int i) const; // g_i - (q - q^-1) from the Hecke condition
    std::vector<int> dims() const { return std::vector<int>(N, local_dim); }
};

// Two-site generator sum_{i != j} (e_ij (x) e_ji - q^{-sgn(i-j)} e_ii (x) e_jj).
Operator hecke_generator(int n, cplx q);

// Single-site blob generator [[-Q^-1, c], [c^-1, -Q]].
Operator blob_generator(cplx Q, cplx c);

BraidFamily hecke_rep(int n, int N, cplx q);
BraidFamily blob_rep(int N, cplx q, cplx Q, cplx c);

RelationReport check_hecke(const BraidFamily& fam);
RelationReport check_temperley_lieb(const BraidFamily& fam);
RelationReport check_blob(const BraidFamily& fam);

// (g0 - Q1)(g0 - Q2) with Q1 = Q, Q2 = -Q^-1, plus prod_k (g0 - gamma_k) when gammas are given.
RelationReport check_btype_quotients(const BraidFamily& fam, const std::optional<std::vector<cplx>>& gammas = {});

// Residual of prod_k (g - gamma_k) = 0 for an arbitrary operator g.
double polynomial_residual(const Operator& g, const std::vector<cplx>& roots);

}  // namespace qis
