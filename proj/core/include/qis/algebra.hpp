#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qis/linalg.hpp"

namespace qis {

enum class AlgebraKind { sl2, uq_sl2, heisenberg_weyl, q_oscillator };

// Generator labels in use:
//   sl2:             Jz, Jp, Jm
//   uq_sl2:          Jz, Jp, Jm, qJz, qJzInv
//   heisenberg_weyl: X, Y
//   q_oscillator:    V, a_plus, a
struct AlgebraRep {
    std::string name;
    AlgebraKind kind = AlgebraKind::sl2;
    std::map<std::string, Operator> generators;
    cplx q{1.0, 0.0};
    int n = 0;   // matrix dimension
    int p = 0;   // root-of-unity order (cyclic reps only)
    std::optional<cplx> mu;  // q = e^{i mu} when built from mu; fixes half-angle branches

    bool has(const std::string& label) const { return generators.count(label) != 0; }
    const Operator& operator[](const std::string& label) const;
    std::vector<int> dims() const;
    double spin() const { return 0.5 * (n - 1); }
};

struct Coproduct {
    AlgebraRep base;   // images packaged as a rep on the full space
    int copies = 1;
    const Operator& image(const std::string& label) const { return base[label]; }
};

struct RelationResidual {
    std::string relation;
    double residual = 0.0;
};

struct RelationReport {
    std::vector<RelationResidual> items;
    double max() const;
    void add(std::string relation, double residual) { items.push_back({std::move(relation), residual}); }
};

// q-number [k]_q = (q^k - q^-k)/(q - q^-1), continuous at q = +-1.
cplx q_number(double k, cplx q);

AlgebraRep sl2_spin_rep(int n);
AlgebraRep uq_sl2_spin_rep(int n, cplx q);
AlgebraRep uq_sl2_spin_rep_mu(int n, cplx mu);  // q = e^{i mu}
AlgebraRep cyclic_rep(int p, int k);
AlgebraRep q_oscillator_rep(int p, int k);  // V = X, a+ = (X^-1 - qX)Y^-1, a = YX

Coproduct coproduct_uq(const AlgebraRep& left, const AlgebraRep& right);
Coproduct ncoproduct(const AlgebraRep& rep, int copies);
Coproduct ncoproduct(const std::vector<AlgebraRep>& reps);

// Opposite co-product images (tensor factors swapped) for two copies.
Coproduct opposite_coproduct_uq(const AlgebraRep& left, const AlgebraRep& right);

Operator casimir_uq(const AlgebraRep& rep);

RelationReport check_relations(const AlgebraRep& rep);

// Power q^{e Jz} of a diagonal Jz.
Operator q_power(const Operator& jz, cplx q, double e = 1.0);

}  // namespace qis
