#include "vcr/vcdim.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "vcr/graph.hpp"
#include "vcr/rng.hpp"

namespace vcr {

namespace {

constexpr std::uint64_t kNoBudget = ~std::uint64_t{0};

/// Trace of one member on an ascending index subset, packed LSB-first.
inline std::uint64_t trace_of(const BitVec& member, const std::vector<std::size_t>& subset) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        t |= static_cast<std::uint64_t>(member.get(subset[i])) << i;
    return t;
}

/// Core shattering test; charges one trace evaluation per member visited.
bool shattered(const SetSystem& s, const std::vector<std::size_t>& subset, std::uint64_t& spent) {
    const std::size_t k = subset.size();
    if (k >= 64 || s.family.size() < (std::uint64_t{1} << k)) return false;
    const std::uint64_t need = std::uint64_t{1} << k;
    std::vector<std::uint64_t> seen((need + 63) / 64, 0);
    std::uint64_t found = 0;
    for (const BitVec& f : s.family) {
        ++spent;
        const std::uint64_t t = trace_of(f, subset);
        const std::uint64_t bit = std::uint64_t{1} << (t & 63);
        if (!(seen[t >> 6] & bit)) {
            seen[t >> 6] |= bit;
            if (++found == need) return true;
        }
    }
    return false;
}

struct SubsetHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Exact VC-dimension, level by level. Level k holds every shattered k-set;
/// candidates for k+1 join two level entries sharing all but the last
/// element and must have all their k-subsets shattered (shattering is
/// downward closed, so this prunes soundly without missing anything).
std::optional<int> vc_impl(const SetSystem& s, std::uint64_t budget) {
    if (s.family.empty()) return 0;

    std::uint64_t spent = 0;
    std::vector<std::vector<std::uint32_t>> level;
    std::vector<std::size_t> probe(1);
    for (std::size_t x = 0; x < s.ground_size; ++x) {
        probe[0] = x;
        if (shattered(s, probe, spent)) level.push_back({static_cast<std::uint32_t>(x)});
        if (spent > budget) return std::nullopt;
    }
    if (level.empty()) return 0;

    int k = 1;
    std::vector<std::size_t> cand;
    while (true) {
        std::unordered_set<std::vector<std::uint32_t>, SubsetHash> known;
        if (k >= 2) known.insert(level.begin(), level.end());

        std::vector<std::vector<std::uint32_t>> next;
        std::size_t group = 0;
        while (group < level.size()) {
            std::size_t end = group + 1;
            while (end < level.size() &&
                   std::equal(level[group].begin(), level[group].end() - 1, level[end].begin()))
                ++end;
            for (std::size_t a = group; a < end; ++a) {
                for (std::size_t b = a + 1; b < end; ++b) {
                    cand.assign(level[a].begin(), level[a].end());
                    cand.push_back(level[b].back());
                    // the joined pair covers two k-subsets; check the rest
                    bool closed = true;
                    if (k >= 2) {
                        std::vector<std::uint32_t> sub(cand.begin(), cand.end());
                        sub.pop_back();
                        for (std::size_t drop = 0; drop + 1 < static_cast<std::size_t>(k) && closed;
                             ++drop) {
                            std::vector<std::uint32_t> probe_sub;
                            probe_sub.reserve(k);
                            for (std::size_t t = 0; t < cand.size(); ++t)
                                if (t != drop) probe_sub.push_back(static_cast<std::uint32_t>(cand[t]));
                            closed = known.count(probe_sub) != 0;
                        }
                    }
                    if (closed && shattered(s, cand, spent))
                        next.emplace_back(cand.begin(), cand.end());
                    if (spent > budget) return std::nullopt;
                }
            }
            group = end;
        }
        if (next.empty()) return k;
        std::sort(next.begin(), next.end());
        level = std::move(next);
        ++k;
    }
}

}  // namespace

bool is_shattered(const SetSystem& s, const std::vector<std::size_t>& subset) {
    std::unordered_set<std::size_t> dup;
    for (std::size_t x : subset) {
        if (x >= s.ground_size)
            throw std::out_of_range("subset element " + std::to_string(x) + " outside ground set");
        if (!dup.insert(x).second)
            throw std::invalid_argument("duplicate subset element " + std::to_string(x));
    }
    std::uint64_t spent = 0;
    return shattered(s, subset, spent);
}

int vc_dimension(const SetSystem& s) { return *vc_impl(s, kNoBudget); }

std::optional<int> vc_dimension_budgeted(const SetSystem& s, std::uint64_t max_trace_evals) {
    return vc_impl(s, max_trace_evals);
}

int matrix_vc_dimension(const BinaryMatrix& a) {
    return std::max(vc_dimension(columns_system(a)), vc_dimension(rows_system(a)));
}

std::optional<int> matrix_vc_dimension_budgeted(const BinaryMatrix& a,
                                                std::uint64_t max_trace_evals) {
    auto c = vc_dimension_budgeted(columns_system(a), max_trace_evals);
    if (!c) return std::nullopt;
    auto r = vc_dimension_budgeted(rows_system(a), max_trace_evals);
    if (!r) return std::nullopt;
    return std::max(*c, *r);
}

int graph_vc_dimension(const SimpleGraph& g) { return vc_dimension(neighborhood_system(g)); }

namespace {

/// Distinct traces of the family on one subset; subsets beyond 64 elements
/// fall back to whole-bitvec traces.
std::uint64_t count_traces(const SetSystem& s, const std::vector<std::size_t>& subset) {
    if (subset.size() <= 64) {
        std::unordered_set<std::uint64_t> traces;
        for (const BitVec& f : s.family) {
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < subset.size(); ++i)
                t |= static_cast<std::uint64_t>(f.get(subset[i])) << (i & 63);
            traces.insert(t);
        }
        return traces.size();
    }
    std::unordered_set<BitVec, BitVecHash> traces;
    for (const BitVec& f : s.family) {
        BitVec t(subset.size());
        for (std::size_t i = 0; i < subset.size(); ++i)
            if (f.get(subset[i])) t.set(i, true);
        traces.insert(std::move(t));
    }
    return traces.size();
}

}  // namespace

std::uint64_t growth_function(const SetSystem& s, std::size_t n, std::uint64_t max_subsets) {
    if (n > s.ground_size)
        throw std::invalid_argument("sample size exceeds ground set size");
    std::uint64_t combos;
    try {
        combos = binomial(s.ground_size, n);
    } catch (const std::overflow_error&) {
        combos = kNoBudget;
    }
    if (combos > max_subsets)
        throw std::invalid_argument(
            "exact growth budget exceeded: C(" + std::to_string(s.ground_size) + ", " +
            std::to_string(n) + ") subsets; use sampled_growth_lower_bound");

    std::vector<std::size_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = i;
    std::uint64_t best = 0;
    while (true) {
        best = std::max(best, count_traces(s, x));
        // next subset in colex order
        std::size_t i = 0;
        while (i < n) {
            const std::size_t limit = (i + 1 < n) ? x[i + 1] : s.ground_size;
            if (x[i] + 1 < limit) break;
            ++i;
        }
        if (i == n) break;
        ++x[i];
        for (std::size_t t = 0; t < i; ++t) x[t] = t;
    }
    return best;
}

std::uint64_t sampled_growth_lower_bound(const SetSystem& s, std::size_t n, std::size_t trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (n > s.ground_size)
        throw std::invalid_argument("sample size exceeds ground set size");

    SplitMix64 rng(seed);
    std::vector<std::size_t> pool(s.ground_size);
    std::uint64_t best = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.next_below(pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<std::size_t> x(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        std::sort(x.begin(), x.end());
        best = std::max(best, count_traces(s, x));
    }
    return best;
}

GrowthProfile growth_profile(const SetSystem& s, std::size_t up_to, std::uint64_t max_subsets) {
    GrowthProfile p;
    for (std::size_t n = 0; n <= up_to && n <= s.ground_size; ++n)
        p.values[n] = growth_function(s, n, max_subsets);
    return p;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const unsigned __int128 next = static_cast<unsigned __int128>(c) * (n - k + i) / i;
        if (next > ~std::uint64_t{0}) throw std::overflow_error("binomial overflows 64 bits");
        c = static_cast<std::uint64_t>(next);
    }
    return c;
}

std::uint64_t phi(int d, std::uint64_t n) {
    if (d < 0) throw std::invalid_argument("phi needs d >= 0");
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i <= static_cast<std::uint64_t>(d) && i <= n; ++i) {
        if (__builtin_add_overflow(sum, binomial(n, i), &sum))
            throw std::overflow_error("phi overflows 64 bits");
    }
    return sum;
}

}  // namespace vcr
