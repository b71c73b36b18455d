#include "vcr/oracle.hpp"

#include <set>
#include <stdexcept>

namespace vcr::oracle {

namespace {

struct TriSearch {
    const BinaryMatrix& a;
    TriPattern p;
    std::vector<std::size_t> rows, cols;
    std::vector<bool> row_used, col_used;

    /// Depth-first search for a full assignment of the given size, rows
    /// outer and columns inner, both ascending, so the first hit is the
    /// lexicographically first witness.
    bool extend(std::size_t target) {
        const std::size_t t = rows.size();
        if (t == target) return true;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (row_used[r]) continue;
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (col_used[c]) continue;
                if (a.get(r, c) != p.beta) continue;
                bool ok = true;
                for (std::size_t i = 0; i < t && ok; ++i)
                    ok = a.get(rows[i], c) == p.alpha && a.get(r, cols[i]) == p.gamma;
                if (!ok) continue;
                rows.push_back(r);
                cols.push_back(c);
                row_used[r] = col_used[c] = true;
                if (extend(target)) return true;
                row_used[r] = col_used[c] = false;
                rows.pop_back();
                cols.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

TriSearchResult max_tri_submatrix(const BinaryMatrix& a, TriPattern p, std::size_t max_rows,
                                  std::size_t max_cols) {
    if (a.rows() > max_rows || a.cols() > max_cols)
        throw std::invalid_argument("max_tri_submatrix cap exceeded: " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()));
    TriSearchResult best;
    TriSearch search{a, p, {}, {}, std::vector<bool>(a.rows(), false),
                     std::vector<bool>(a.cols(), false)};
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= limit; ++k) {
        search.rows.clear();
        search.cols.clear();
        std::fill(search.row_used.begin(), search.row_used.end(), false);
        std::fill(search.col_used.begin(), search.col_used.end(), false);
        if (!search.extend(k)) break;
        best.size = k;
        best.sel.rows = search.rows;
        best.sel.cols = search.cols;
    }
    if (best.size == 0 && a.rows() > 0 && a.cols() > 0) {
        // no strict realization at any size; report the floor witness
        best.size = 1;
        best.sel.rows = {0};
        best.sel.cols = {0};
        best.vacuous = true;
    }
    return best;
}

HomogeneousResult max_homogeneous_set(const SimpleGraph& g, std::size_t cap) {
    const std::size_t n = g.size();
    if (n > cap) throw std::invalid_argument("max_homogeneous_set cap exceeded: n = " + std::to_string(n));

    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(i, j)) adj[i] |= std::uint32_t{1} << j;

    HomogeneousResult best;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size < best.size) continue;
        bool clique = true, indep = true;
        for (std::size_t v = 0; v < n && (clique || indep); ++v) {
            if (!(mask >> v & 1)) continue;
            const std::uint32_t hits = adj[v] & mask;
            if (hits != (mask & ~(std::uint32_t{1} << v))) clique = false;
            if (hits != 0) indep = false;
        }
        if (!clique && !indep) continue;
        const HomogeneousKind kind = clique ? HomogeneousKind::Clique : HomogeneousKind::Independent;
        // ties keep the earlier subset, clique preferred at equal size
        if (size > best.size ||
            (size == best.size && kind == HomogeneousKind::Clique &&
             best.kind == HomogeneousKind::Independent)) {
            best.size = size;
            best.kind = kind;
            best.vertices.clear();
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1) best.vertices.push_back(v);
        }
    }
    return best;
}

int vc_dimension_naive(const SetSystem& s, std::size_t cap) {
    if (s.ground_size > cap)
        throw std::invalid_argument("vc_dimension_naive cap exceeded: ground = " +
                                    std::to_string(s.ground_size));
    if (s.family.empty()) return 0;
    const std::size_t n = s.ground_size;
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::set<std::uint64_t> traces;
        for (const BitVec& f : s.family) {
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i & 1) && f.get(i)) t |= std::uint64_t{1} << i;
            traces.insert(t);
        }
        const int size = __builtin_popcountll(mask);
        if (traces.size() == (std::uint64_t{1} << size) && size > best) best = size;
    }
    return best;
}

std::uint64_t growth_naive(const SetSystem& s, std::size_t n, std::size_t cap) {
    if (s.ground_size > cap)
        throw std::invalid_argument("growth_naive cap exceeded: ground = " +
                                    std::to_string(s.ground_size));
    if (n > s.ground_size) throw std::invalid_argument("sample size exceeds ground set size");
    const std::size_t g = s.ground_size;
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
        std::set<std::uint64_t> traces;
        for (const BitVec& f : s.family) {
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < g; ++i)
                if ((mask >> i & 1) && f.get(i)) t |= std::uint64_t{1} << i;
            traces.insert(t);
        }
        best = std::max<std::uint64_t>(best, traces.size());
    }
    return best;
}

}  // namespace vcr::oracle
