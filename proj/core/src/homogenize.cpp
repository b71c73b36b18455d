#include "vcr/homogenize.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcr {

std::string_view homogeneous_kind_name(HomogeneousKind k) {
    return k == HomogeneousKind::Clique ? "clique" : "independent";
}

SimpleGraph upper_graph(const BinaryMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("upper_graph expects a square matrix");
    SimpleGraph g(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a.get(i, j)) g.add_edge(i, j);
    return g;
}

namespace {

/// Tomita-style maximum clique search: candidates are greedily colored and
/// traversed in descending color order, pruning once chosen + color cannot
/// beat the incumbent. Vertex order is always ascending index, so results
/// are deterministic.
class CliqueSearch {
public:
    CliqueSearch(const SimpleGraph& g, std::size_t initial_best, std::size_t target)
        : g_(g), best_(initial_best), target_(target) {}

    std::size_t best() const { return best_; }

    bool run(std::size_t chosen, BitVec cand) {
        if (!cand.any()) {
            best_ = std::max(best_, chosen);
            return best_ >= target_;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> color;
        greedy_color(cand, order, color);

        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (chosen + color[idx] <= best_) return false;  // colors ascend along order
            const std::size_t v = order[idx];
            if (run(chosen + 1, cand & g_.neighbors(v))) return true;
            cand.set(v, false);
        }
        return false;
    }

private:
    void greedy_color(const BitVec& cand, std::vector<std::size_t>& order,
                      std::vector<std::size_t>& color) const {
        BitVec uncolored = cand;
        std::size_t k = 0;
        while (uncolored.any()) {
            ++k;
            BitVec avail = uncolored;
            for (std::size_t v = avail.find_first(); v < avail.size(); v = avail.find_next(v + 1)) {
                order.push_back(v);
                color.push_back(k);
                avail = avail.and_not(g_.neighbors(v));
                avail.set(v, false);
                uncolored.set(v, false);
            }
        }
    }

    const SimpleGraph& g_;
    std::size_t best_;
    std::size_t target_;
};

BitVec full_set(std::size_t n) {
    BitVec b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, true);
    return b;
}

bool clique_exists(const SimpleGraph& g, const BitVec& cand, std::size_t need) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    CliqueSearch search(g, need - 1, need);
    search.run(0, cand);
    return search.best() >= need;
}

/// Greedily committing the smallest feasible vertex at each step yields the
/// lexicographically smallest maximum clique (as a sorted vertex list).
std::vector<std::size_t> lex_smallest_clique(const SimpleGraph& g, std::size_t s) {
    std::vector<std::size_t> chosen;
    BitVec cand = full_set(g.size());
    while (chosen.size() < s) {
        for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1)) {
            const BitVec next = cand & g.neighbors(v);
            if (clique_exists(g, next, s - chosen.size() - 1)) {
                chosen.push_back(v);
                cand = next;
                break;
            }
        }
    }
    return chosen;
}

HomogeneousSet find_homogeneous_exact(const SimpleGraph& g) {
    const SimpleGraph co = g.complement();
    const std::size_t clique_size = max_clique_size(g);
    const std::size_t indep_size = max_clique_size(co);
    HomogeneousSet h;
    if (clique_size >= indep_size) {
        h.kind = HomogeneousKind::Clique;
        h.vertices = lex_smallest_clique(g, clique_size);
    } else {
        h.kind = HomogeneousKind::Independent;
        h.vertices = lex_smallest_clique(co, indep_size);
    }
    return h;
}

/// Halving greedy. Pivots ascend, each pivot's kept side contains all later
/// pivots, so majority-side pivots form a clique (neighbor side) or an
/// independent set (non-neighbor side) of size >= floor(log2(n) / 2).
HomogeneousSet find_homogeneous_greedy(const SimpleGraph& g) {
    BitVec live = full_set(g.size());
    std::vector<std::size_t> pivots;
    std::vector<bool> neighbor_side;
    while (live.any()) {
        const std::size_t p = live.find_first();
        live.set(p, false);
        const BitVec with = live & g.neighbors(p);
        const BitVec without = live.and_not(g.neighbors(p));
        const bool keep_neighbors = with.count() >= without.count();
        pivots.push_back(p);
        neighbor_side.push_back(keep_neighbors);
        live = keep_neighbors ? with : without;
    }
    std::size_t on_neighbor = 0;
    for (bool b : neighbor_side) on_neighbor += b;
    const bool clique = on_neighbor >= pivots.size() - on_neighbor;
    HomogeneousSet h;
    h.kind = clique ? HomogeneousKind::Clique : HomogeneousKind::Independent;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (neighbor_side[i] == clique) h.vertices.push_back(pivots[i]);
    return h;
}

}  // namespace

std::size_t max_clique_size(const SimpleGraph& g) {
    if (g.size() == 0) return 0;
    CliqueSearch search(g, 0, ~std::size_t{0});
    search.run(0, full_set(g.size()));
    return search.best();
}

HomogeneousSet find_homogeneous(const SimpleGraph& g, const HomogenizeConfig& cfg) {
    if (g.size() == 0) throw std::invalid_argument("find_homogeneous expects a nonempty graph");
    // n <= 2 is always exact; the greedy may lose a vertex there
    if (g.size() <= std::max<std::size_t>(cfg.exact_threshold, 2))
        return find_homogeneous_exact(g);
    return find_homogeneous_greedy(g);
}

AbStarResult extract_ab_star(const BinaryMatrix& switch_matrix, const HomogenizeConfig& cfg) {
    if (!is_switch_matrix(switch_matrix))
        throw std::invalid_argument("extract_ab_star expects a switch matrix");
    const std::size_t n = switch_matrix.rows();
    if (n < 1) throw std::invalid_argument("extract_ab_star expects size >= 1");

    // drop the one-columns: square zero-diagonal matrix on the zero-columns
    IndexSelection zero_sel;
    for (std::size_t i = 0; i < n; ++i) zero_sel.rows.push_back(i);
    for (std::size_t i = 0; i < n; ++i) zero_sel.cols.push_back(2 * i);
    const BinaryMatrix b = submatrix(switch_matrix, zero_sel);

    const HomogeneousSet x = find_homogeneous(upper_graph(b), cfg);

    AbStarResult r;
    const bool clique = x.kind == HomogeneousKind::Clique;
    r.alpha = clique;
    r.beta = !clique;
    for (std::size_t v : x.vertices) {
        r.sel.rows.push_back(v);
        r.sel.cols.push_back(clique ? 2 * v : 2 * v + 1);
    }

    for (std::size_t i = 0; i < r.sel.rows.size(); ++i) {
        if (switch_matrix.get(r.sel.rows[i], r.sel.cols[i]) != r.beta)
            throw std::logic_error("extract_ab_star: diagonal is not constant beta");
        for (std::size_t j = i + 1; j < r.sel.cols.size(); ++j)
            if (switch_matrix.get(r.sel.rows[i], r.sel.cols[j]) != r.alpha)
                throw std::logic_error("extract_ab_star: upper triangle is not constant alpha");
    }
    return r;
}

AbcResult extract_abc(const BinaryMatrix& ab_star, bool alpha, bool beta,
                      const HomogenizeConfig& cfg) {
    if (ab_star.rows() != ab_star.cols())
        throw std::invalid_argument("extract_abc expects a square matrix");
    const std::size_t n = ab_star.rows();
    if (n < 1) throw std::invalid_argument("extract_abc expects size >= 1");
    if (alpha == beta) throw std::invalid_argument("extract_abc expects alpha != beta");
    for (std::size_t i = 0; i < n; ++i) {
        if (ab_star.get(i, i) != beta)
            throw std::invalid_argument("extract_abc: diagonal is not constant beta");
        for (std::size_t j = i + 1; j < n; ++j)
            if (ab_star.get(i, j) != alpha)
                throw std::invalid_argument("extract_abc: upper triangle is not constant alpha");
    }

    // zero-diagonal by construction in both branches
    const BinaryMatrix m =
        (alpha && !beta) ? transpose(ab_star) : complement(transpose(ab_star));
    const HomogeneousSet x = find_homogeneous(upper_graph(m), cfg);

    AbcResult r;
    r.sel.rows = x.vertices;
    r.sel.cols = x.vertices;
    const std::size_t k = x.vertices.size();
    bool gamma = alpha;  // size-1 selections have no entry below the diagonal
    if (k >= 2) {
        gamma = ab_star.get(x.vertices[1], x.vertices[0]);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (ab_star.get(x.vertices[i], x.vertices[j]) != gamma)
                    throw std::logic_error("extract_abc: lower triangle is not constant gamma");
    }
    r.pattern = TriPattern{alpha, beta, gamma};
    return r;
}

}  // namespace vcr
