#include "vcr/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "vcr/patterns.hpp"
#include "vcr/rng.hpp"

namespace vcr {

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
    GeneratorSpec spec;
    const std::size_t colon = text.find(':');
    spec.family = std::string(text.substr(0, colon));
    if (spec.family.empty()) throw std::invalid_argument("generator spec has no family name");
    if (colon == std::string_view::npos) return spec;

    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 > item.size())
            throw std::invalid_argument("generator spec item \"" + std::string(item) +
                                        "\" is not key=value");
        std::string key(item.substr(0, eq));
        if (spec.params.count(key))
            throw std::invalid_argument("duplicate generator spec key \"" + key + "\"");
        spec.params.emplace(std::move(key), std::string(item.substr(eq + 1)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

std::string GeneratorSpec::canonical_text() const {
    std::string out = family;
    char sep = ':';
    for (const auto& [k, v] : params) {
        out += sep;
        out += k + "=" + v;
        sep = ',';
    }
    return out;
}

BinaryMatrix half_graph(std::size_t n) { return make_tri_matrix({true, true, false}, n); }
BinaryMatrix matching(std::size_t n) { return make_tri_matrix({false, true, false}, n); }
BinaryMatrix co_matching(std::size_t n) { return make_tri_matrix({true, false, true}, n); }

namespace {

/// `count` distinct values from [0, bound), ascending. Rejection sampling
/// on the splitmix64 stream; draw order is part of the reproducible format.
std::vector<std::uint64_t> distinct_sorted(std::size_t count, std::uint64_t bound,
                                           SplitMix64& rng) {
    std::set<std::uint64_t> vals;
    while (vals.size() < count) vals.insert(rng.next_below(bound));
    return {vals.begin(), vals.end()};
}

}  // namespace

BinaryMatrix interval_matrix(std::size_t points, std::size_t intervals, std::uint64_t seed) {
    if (points < 1 || intervals < 1)
        throw std::invalid_argument("interval family needs points >= 1 and intervals >= 1");
    SplitMix64 rng(seed);
    const std::uint64_t bound = 4 * static_cast<std::uint64_t>(points);
    const std::vector<std::uint64_t> pts = distinct_sorted(points, bound, rng);

    BinaryMatrix a(points, intervals);
    for (std::size_t j = 0; j < intervals; ++j) {
        std::uint64_t lo = rng.next_below(bound);
        std::uint64_t hi = rng.next_below(bound);
        if (lo > hi) std::swap(lo, hi);
        for (std::size_t i = 0; i < points; ++i)
            if (lo <= pts[i] && pts[i] <= hi) a.set(i, j, true);
    }
    return a;
}

BinaryMatrix boxes_matrix(std::size_t points, std::size_t boxes, std::size_t dim,
                          std::uint64_t seed) {
    if (points < 1 || boxes < 1) throw std::invalid_argument("boxes family needs counts >= 1");
    if (dim < 1) throw std::invalid_argument("boxes family needs k >= 1");
    SplitMix64 rng(seed);
    const std::uint64_t bound = 4 * static_cast<std::uint64_t>(points);

    // distinct points in the grid, drawn coordinate-major and kept sorted
    std::set<std::vector<std::uint64_t>> pointset;
    while (pointset.size() < points) {
        std::vector<std::uint64_t> p(dim);
        for (auto& c : p) c = rng.next_below(bound);
        pointset.insert(std::move(p));
    }
    const std::vector<std::vector<std::uint64_t>> pts(pointset.begin(), pointset.end());

    BinaryMatrix a(points, boxes);
    std::vector<std::uint64_t> lo(dim), hi(dim);
    for (std::size_t j = 0; j < boxes; ++j) {
        for (std::size_t t = 0; t < dim; ++t) {
            lo[t] = rng.next_below(bound);
            hi[t] = rng.next_below(bound);
            if (lo[t] > hi[t]) std::swap(lo[t], hi[t]);
        }
        for (std::size_t i = 0; i < points; ++i) {
            bool inside = true;
            for (std::size_t t = 0; t < dim && inside; ++t)
                inside = lo[t] <= pts[i][t] && pts[i][t] <= hi[t];
            if (inside) a.set(i, j, true);
        }
    }
    return a;
}

BinaryMatrix random_bipartite(std::size_t m, std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    BinaryMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.next_bernoulli(p)) a.set(i, j, true);
    return a;
}

namespace {

std::uint64_t spec_u64(const GeneratorSpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("generator spec \"" + spec.family + "\" is missing key \"" +
                                    key + "\"");
    std::uint64_t v = 0;
    const char* begin = it->second.data();
    const char* end = begin + it->second.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("generator key \"" + key + "\" has non-integer value \"" +
                                    it->second + "\"");
    return v;
}

std::uint64_t spec_seed(const GeneratorSpec& spec) {
    return spec.params.count("seed") ? spec_u64(spec, "seed") : 0;
}

double spec_probability(const GeneratorSpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("generator spec \"" + spec.family + "\" is missing key \"" +
                                    key + "\"");
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("generator key \"" + key + "\" has non-numeric value \"" +
                                    it->second + "\"");
    }
}

void reject_unknown_keys(const GeneratorSpec& spec, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : spec.params) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok)
            throw std::invalid_argument("generator spec \"" + spec.family +
                                        "\" does not take key \"" + key + "\"");
    }
}

}  // namespace

BinaryMatrix generate(const GeneratorSpec& spec) {
    if (spec.family == "half_graph" || spec.family == "matching" || spec.family == "co_matching") {
        reject_unknown_keys(spec, {"n"});
        const auto n = static_cast<std::size_t>(spec_u64(spec, "n"));
        if (spec.family == "half_graph") return half_graph(n);
        if (spec.family == "matching") return matching(n);
        return co_matching(n);
    }
    if (spec.family == "interval") {
        reject_unknown_keys(spec, {"points", "intervals", "seed"});
        return interval_matrix(static_cast<std::size_t>(spec_u64(spec, "points")),
                               static_cast<std::size_t>(spec_u64(spec, "intervals")),
                               spec_seed(spec));
    }
    if (spec.family == "boxes") {
        reject_unknown_keys(spec, {"points", "boxes", "k", "seed"});
        return boxes_matrix(static_cast<std::size_t>(spec_u64(spec, "points")),
                            static_cast<std::size_t>(spec_u64(spec, "boxes")),
                            static_cast<std::size_t>(spec_u64(spec, "k")), spec_seed(spec));
    }
    if (spec.family == "random_bipartite") {
        reject_unknown_keys(spec, {"m", "n", "p", "seed"});
        return random_bipartite(static_cast<std::size_t>(spec_u64(spec, "m")),
                                static_cast<std::size_t>(spec_u64(spec, "n")),
                                spec_probability(spec, "p"), spec_seed(spec));
    }
    throw std::invalid_argument("unknown generator family \"" + spec.family + "\"");
}

std::optional<int> declared_vc_bound(const GeneratorSpec& spec) {
    if (spec.family == "half_graph" || spec.family == "matching" || spec.family == "co_matching")
        return 1;
    if (spec.family == "interval") return 2;
    if (spec.family == "boxes") return static_cast<int>(2 * spec_u64(spec, "k"));
    return std::nullopt;
}

}  // namespace vcr
