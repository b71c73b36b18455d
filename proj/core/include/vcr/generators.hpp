#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vcr/bitmatrix.hpp"

namespace vcr {

/// Identifier of the random stream algorithm used by every seeded family.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// Text form "family:key=value,key=value", e.g.
/// "interval:points=64,intervals=64,seed=7". Families and their keys:
///   half_graph / matching / co_matching : n
///   interval        : points, intervals, seed
///   boxes           : points, boxes, k, seed
///   random_bipartite: m, n, p, seed
/// seed defaults to 0 where omitted.
struct GeneratorSpec {
    std::string family;
    std::map<std::string, std::string> params;

    static GeneratorSpec parse(std::string_view text);  ///< throws std::invalid_argument
    std::string canonical_text() const;
};

/// The n x n tri-matrices (1,1,0), (0,1,0), (1,0,1) respectively.
BinaryMatrix half_graph(std::size_t n);
BinaryMatrix matching(std::size_t n);
BinaryMatrix co_matching(std::size_t n);

/// Rows: `points` sorted distinct integers sampled from [0, 4*points).
/// Columns: random closed integer intervals with endpoints from the same
/// range. Entry is containment. Column system shatters no 3 points, so the
/// matrix VC-dimension stays at most 2.
BinaryMatrix interval_matrix(std::size_t points, std::size_t intervals, std::uint64_t seed);

/// Same construction in the integer grid [0, 4*points)^dim with axis-aligned
/// boxes; the column system has VC-dimension at most 2*dim.
BinaryMatrix boxes_matrix(std::size_t points, std::size_t boxes, std::size_t dim,
                          std::uint64_t seed);

/// i.i.d. entries, 1 with probability p, drawn row-major.
BinaryMatrix random_bipartite(std::size_t m, std::size_t n, double p, std::uint64_t seed);

/// Dispatch on a parsed spec, validating parameters per family.
BinaryMatrix generate(const GeneratorSpec& spec);

/// Family-level VC-dimension bound when one is known a priori:
/// chains -> 1, interval -> 2, boxes -> 2k. Nothing for random_bipartite.
std::optional<int> declared_vc_bound(const GeneratorSpec& spec);

}  // namespace vcr
