#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vcr/bitmatrix.hpp"

namespace vcr {

/// Certifies a switch submatrix inside a host matrix: selecting rows[0..k)
/// and columns zero(0), one(0), ..., zero(k-1), one(k-1) yields a matrix
/// satisfying is_switch_matrix. Rows and pairs are in discovery order.
struct SwitchWitness {
    std::vector<std::size_t> rows;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (zero_col, one_col)

    std::size_t size() const { return rows.size(); }
};

/// Greedy switch-submatrix extraction. Requires pairwise-distinct columns
/// (run dedup_columns first); throws std::invalid_argument when a duplicate
/// pair is picked.
///
/// Loop, fully deterministic: group the columns by their bit pattern on the
/// chosen rows; take the class with the most unused columns (ties: smallest
/// pattern string); stop when that count is below 2; otherwise take its two
/// smallest unused columns, append the first row where they differ, and
/// append the pair oriented so the 0-valued column at that row comes first.
SwitchWitness extract_switch(const BinaryMatrix& a);

/// Rows plus interleaved zero/one columns of the witness, as a selection.
IndexSelection switch_selection(const SwitchWitness& w);

/// The selected switch matrix itself.
BinaryMatrix switch_matrix_of(const BinaryMatrix& a, const SwitchWitness& w);

/// Exact fraction num/den, the smallest c >= 2 with c * x^d >= phi(d, x)
/// for every integer x in [1, n]. This is the constant that makes
/// f(x) = c * x^d dominate the Sauer-Shelah bound at all the integer points
/// the greedy evaluates.
struct GrowthConstant {
    std::uint64_t num = 2;
    std::uint64_t den = 1;
};

GrowthConstant calibrate_growth_constant(int d, std::uint64_t n);

/// floor((1/2) * (n/c)^(1/d)) with the calibrated c, evaluated exactly as
/// the largest s with c * (2s)^d <= n. Requires d >= 1.
std::uint64_t guaranteed_switch_size(std::uint64_t n, int d);

/// Exact test of c * (2k+2)^d > n with the calibrated c; this is the
/// guaranteed lower-bound inequality for the extracted size k on a matrix
/// with n distinct columns whose column-system growth is below c * x^d.
bool switch_size_bound_holds(std::uint64_t k, std::uint64_t n, int d);

}  // namespace vcr
