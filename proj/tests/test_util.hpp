#pragma once

#include <cstdint>
#include <vector>

#include "vcr/bitmatrix.hpp"
#include "vcr/graph.hpp"
#include "vcr/rng.hpp"
#include "vcr/setsystem.hpp"

namespace testutil {

inline vcr::BinaryMatrix random_matrix(std::size_t m, std::size_t n, double p, std::uint64_t seed) {
    vcr::SplitMix64 rng(seed);
    vcr::BinaryMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.next_bernoulli(p)) a.set(i, j, true);
    return a;
}

inline vcr::SetSystem random_system(std::size_t ground, std::size_t members, double p,
                                    std::uint64_t seed) {
    vcr::SplitMix64 rng(seed);
    vcr::SetSystem s;
    s.ground_size = ground;
    for (std::size_t f = 0; f < members; ++f) {
        vcr::BitVec b(ground);
        for (std::size_t i = 0; i < ground; ++i)
            if (rng.next_bernoulli(p)) b.set(i, true);
        s.family.push_back(std::move(b));
    }
    return s;
}

inline vcr::BinaryMatrix zero_diagonal_square(std::size_t n, double p, std::uint64_t seed) {
    vcr::BinaryMatrix a = random_matrix(n, n, p, seed);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, false);
    return a;
}

inline vcr::BinaryMatrix from_rows(const std::vector<std::string>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    vcr::BinaryMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j] == '1') a.set(i, j, true);
    return a;
}

}  // namespace testutil
