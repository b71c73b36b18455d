#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vcr/bitmatrix.hpp"
#include "vcr/bitvec.hpp"
#include "vcr/setsystem.hpp"

namespace vcr {

/// Simple loopless undirected graph on vertices [0, n) with bitset adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : n_(n), adj_(n, BitVec(n)) {}

    std::size_t size() const { return n_; }

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].get(j); }

    void add_edge(std::size_t i, std::size_t j);

    const BitVec& neighbors(std::size_t i) const { return adj_[i]; }

    std::size_t degree(std::size_t i) const { return adj_[i].count(); }

    SimpleGraph complement() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BitVec> adj_;
};

/// System (V, {N(v) : v in V}) of neighborhoods.
SetSystem neighborhood_system(const SimpleGraph& g);

/// Requires a square, symmetric, zero-diagonal matrix.
SimpleGraph graph_from_adjacency(const BinaryMatrix& a);

BinaryMatrix adjacency_matrix(const SimpleGraph& g);

/// G(n, p): each edge present independently with probability p. Upper
/// triangle is drawn row-major from a splitmix64 stream.
SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace vcr
