#pragma once

#include <cstdint>
#include <vector>

#include "vcr/bitmatrix.hpp"
#include "vcr/graph.hpp"
#include "vcr/patterns.hpp"

namespace vcr {

struct HomogenizeConfig {
    std::size_t exact_threshold = 40;  ///< max vertex count for exact search
    std::uint64_t seed = 0;
};

enum class HomogeneousKind { Clique, Independent };

std::string_view homogeneous_kind_name(HomogeneousKind k);

struct HomogeneousSet {
    std::vector<std::size_t> vertices;  ///< ascending
    HomogeneousKind kind;
};

/// Graph on the row indices of a square matrix whose edges read the strict
/// upper triangle: {i, j} with i < j is an edge iff a(i, j) = 1. Diagonal
/// and lower triangle are ignored. Throws std::invalid_argument unless
/// square.
SimpleGraph upper_graph(const BinaryMatrix& a);

/// Exact maximum clique size, branch and bound with a greedy coloring bound.
std::size_t max_clique_size(const SimpleGraph& g);

/// A clique or independent set. Up to cfg.exact_threshold vertices (and
/// always for n <= 2) the result is a maximum homogeneous set: the larger of
/// the maximum cliques of g and of its complement, clique preferred on ties,
/// then the lexicographically smallest vertex set. Above the threshold, a
/// halving greedy: repeatedly pivot on the smallest live vertex and keep the
/// larger of its neighbor / non-neighbor sides (ties: neighbors); the pivots
/// on the majority side are returned, which guarantees size >=
/// floor(log2(n) / 2). Throws std::invalid_argument for n = 0.
HomogeneousSet find_homogeneous(const SimpleGraph& g, const HomogenizeConfig& cfg);

/// Square selection of a switch matrix that is constant above the diagonal
/// and oppositely constant on it; below stays unconstrained.
struct AbStarResult {
    IndexSelection sel;  ///< into the switch matrix
    bool alpha;
    bool beta;
};

/// From a switch matrix S of size n: drop the one-columns to get the square
/// zero-diagonal matrix B, homogenize B's upper graph to a vertex set X, and
/// select rows X with the zero-columns of X (clique, giving alpha=1, beta=0)
/// or the one-columns of X (independent, giving alpha=0, beta=1). Requires
/// is_switch_matrix(S) and n >= 1.
AbStarResult extract_ab_star(const BinaryMatrix& switch_matrix, const HomogenizeConfig& cfg);

struct AbcResult {
    IndexSelection sel;  ///< rows == cols, ascending
    TriPattern pattern;
};

/// From a square matrix with constant alpha above the diagonal and constant
/// beta != alpha on it: homogenize the upper graph of transpose(a) (alpha,
/// beta) = (1, 0), or of complement(transpose(a)) otherwise, and return the
/// symmetric selection on the homogeneous set together with the completed
/// (alpha, beta, gamma) pattern read off below the diagonal. For a size-1
/// result gamma is reported as alpha (no entry below the diagonal exists).
AbcResult extract_abc(const BinaryMatrix& ab_star, bool alpha, bool beta,
                      const HomogenizeConfig& cfg);

}  // namespace vcr
