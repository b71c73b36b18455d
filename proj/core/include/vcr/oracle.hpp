#pragma once

#include <cstdint>

#include "vcr/bitmatrix.hpp"
#include "vcr/graph.hpp"
#include "vcr/homogenize.hpp"
#include "vcr/patterns.hpp"
#include "vcr/setsystem.hpp"

/// Brute-force ground truth for small instances. Everything here is written
/// as plain enumeration, independent of the main implementations it checks.
namespace vcr::oracle {

struct TriSearchResult {
    std::size_t size = 0;
    IndexSelection sel;
    /// Set when no submatrix strictly realizes the pattern at any size; the
    /// reported size is then the floor value 1 on a nonempty host (a single
    /// entry carries no pattern information) and 0 on an empty one.
    bool vacuous = false;
};

/// Maximum k such that ordered row and column k-tuples of a realize
/// make_tri_matrix(p, k); permutations are allowed, matching submatrix
/// semantics. Backtracking over increasing k with prefix pruning; the
/// returned witness is the lexicographically first in the search order
/// (rows outer, columns inner, both ascending per depth). Throws
/// std::invalid_argument when a exceeds the caps.
TriSearchResult max_tri_submatrix(const BinaryMatrix& a, TriPattern p, std::size_t max_rows = 8,
                                  std::size_t max_cols = 8);

struct HomogeneousResult {
    std::size_t size = 0;
    std::vector<std::size_t> vertices;
    HomogeneousKind kind = HomogeneousKind::Clique;
};

/// Exhaustive maximum over all vertex subsets; cap <= 25 or so keeps this
/// sane, default 16. Ties prefer cliques, then the earliest subset in
/// ascending bitmask order.
HomogeneousResult max_homogeneous_set(const SimpleGraph& g, std::size_t cap = 16);

/// Plain full-subset-sweep reimplementations of the vcdim module contracts;
/// deliberately share no code with it.
int vc_dimension_naive(const SetSystem& s, std::size_t cap = 20);
std::uint64_t growth_naive(const SetSystem& s, std::size_t n, std::size_t cap = 20);

}  // namespace vcr::oracle
