#pragma once

#include "singwf/wellform.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace testpop {

// Random primitive weight vectors (n in {3,4}, entries <= 500) with a degree divisible by Q.
// Half are built from chosen q_i so that the gcd data is rarely trivial. Only vectors whose
// failing pairs satisfy min(q_i, q_j) = 1 are returned.
inline std::vector<singwf::WeightAssignment> remark_population(std::size_t count, unsigned seed = 12345) {
    using singwf::Weight;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> entry(1, 500), small(1, 7), mult(1, 40), coin(0, 1), dim(3, 4);
    std::vector<singwf::WeightAssignment> out;
    while (out.size() < count) {
        const std::size_t n = static_cast<std::size_t>(dim(rng));
        std::vector<Weight> p(n);
        if (coin(rng)) {
            for (auto& v : p) v = entry(rng);
        } else {
            std::vector<Weight> q(n);
            for (auto& v : q) v = small(rng);
            for (std::size_t i = 0; i < n; ++i) {
                Weight others = 1;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) others *= q[j];
                p[i] = others * small(rng);
            }
        }
        Weight g = 0;
        for (auto v : p) g = std::gcd(g, v);
        for (auto& v : p) v /= g;
        bool ok = true;
        for (auto v : p) ok = ok && v <= 500;
        if (!ok) continue;
        const auto gp = singwf::gcd_profile(p);
        const singwf::WeightAssignment w{p, gp.Q * mult(rng)};
        const auto prof = singwf::make_profile(w);
        for (const auto& pr : prof.failing_pairs) ok = ok && std::min(prof.q[pr.i], prof.q[pr.j]) == 1;
        if (ok) out.push_back(w);
    }
    return out;
}

}  // namespace testpop
