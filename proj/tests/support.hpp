#pragma once

#include <random>
#include <vector>

#include <qis/linalg.hpp>

namespace qis::testkit {

// Deterministic complex points in the box |re|, |im| <= r.
inline std::vector<cplx> random_points(int count, double r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-r, r);
    std::vector<cplx> out;
    for (int k = 0; k < count; ++k) {
        const double re = u(rng);
        out.emplace_back(re, u(rng));
    }
    return out;
}

inline std::vector<std::pair<cplx, cplx>> random_pairs(int count, double r, std::uint64_t seed) {
    const auto p = random_points(2 * count, r, seed);
    std::vector<std::pair<cplx, cplx>> out;
    for (int k = 0; k < count; ++k) out.emplace_back(p[2 * k], p[2 * k + 1]);
    return out;
}

inline Operator random_operator(const std::vector<int>& dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const int d = total_dim(dims);
    Matrix m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const double re = g(rng);
            m(r, c) = cplx(re, g(rng));
        }
    return {dims, m};
}

}  // namespace qis::testkit
