#include "vcr/graph.hpp"

#include <stdexcept>

#include "vcr/rng.hpp"

namespace vcr {

void SimpleGraph::add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("self-loop on vertex " + std::to_string(i));
    if (i >= n_ || j >= n_) throw std::out_of_range("edge endpoint out of range");
    adj_[i].set(j, true);
    adj_[j].set(i, true);
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        c.adj_[i] = adj_[i].flipped();
        c.adj_[i].set(i, false);
    }
    return c;
}

SetSystem neighborhood_system(const SimpleGraph& g) {
    SetSystem s;
    s.ground_size = g.size();
    s.family.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) s.family.push_back(g.neighbors(v));
    return s;
}

SimpleGraph graph_from_adjacency(const BinaryMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
    SimpleGraph g(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.get(i, i)) throw std::invalid_argument("adjacency matrix has a nonzero diagonal");
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a.get(i, j) != a.get(j, i))
                throw std::invalid_argument("adjacency matrix is not symmetric");
            if (a.get(i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

BinaryMatrix adjacency_matrix(const SimpleGraph& g) {
    BinaryMatrix a(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) a.set(i, j, true);
    return a;
}

SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.next_bernoulli(p)) g.add_edge(i, j);
    return g;
}

}  // namespace vcr
