#include "vcr/switch_extract.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "vcr/vcdim.hpp"

namespace vcr {

SwitchWitness extract_switch(const BinaryMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<BitVec> columns;
    columns.reserve(n);
    for (std::size_t j = 0; j < n; ++j) columns.push_back(a.col_bits(j));

    SwitchWitness w;
    std::vector<bool> used(n, false);
    // pattern of each unused column on the chosen rows, in discovery order
    std::vector<BitVec> pattern(n, BitVec(0));

    while (true) {
        // group unused columns by pattern
        std::unordered_map<BitVec, std::vector<std::size_t>, BitVecHash> groups;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) groups[pattern[j]].push_back(j);

        const std::vector<std::size_t>* best = nullptr;
        const BitVec* best_pattern = nullptr;
        for (const auto& [pat, members] : groups) {
            if (!best || members.size() > best->size() ||
                (members.size() == best->size() && BitVec::compare_lex(pat, *best_pattern) < 0)) {
                best = &members;
                best_pattern = &pat;
            }
        }
        if (!best || best->size() < 2) break;

        // two smallest unused columns of the winning class
        const auto [c0, c1] = [&] {
            std::size_t lo = *std::min_element(best->begin(), best->end());
            std::size_t hi = n;
            for (std::size_t j : *best)
                if (j != lo && j < hi) hi = j;
            return std::pair{lo, hi};
        }();

        const std::size_t r = columns[c0].first_diff(columns[c1]);
        if (r == columns[c0].size())
            throw std::invalid_argument("duplicate columns " + std::to_string(c0) + " and " +
                                        std::to_string(c1) + "; dedup_columns first");

        const bool c0_is_one = a.get(r, c0);
        w.rows.push_back(r);
        w.pairs.emplace_back(c0_is_one ? c1 : c0, c0_is_one ? c0 : c1);
        used[c0] = used[c1] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) pattern[j].push_back(a.get(r, j));
    }
    return w;
}

IndexSelection switch_selection(const SwitchWitness& w) {
    IndexSelection sel;
    sel.rows = w.rows;
    sel.cols.reserve(2 * w.pairs.size());
    for (const auto& [zero_col, one_col] : w.pairs) {
        sel.cols.push_back(zero_col);
        sel.cols.push_back(one_col);
    }
    return sel;
}

BinaryMatrix switch_matrix_of(const BinaryMatrix& a, const SwitchWitness& w) {
    return submatrix(a, switch_selection(w));
}

namespace {

/// x^d, throwing on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t x, int d) {
    std::uint64_t r = 1;
    for (int i = 0; i < d; ++i)
        if (__builtin_mul_overflow(r, x, &r)) throw std::overflow_error("power overflows 64 bits");
    return r;
}

}  // namespace

GrowthConstant calibrate_growth_constant(int d, std::uint64_t n) {
    if (d < 1) throw std::invalid_argument("calibration needs d >= 1");
    GrowthConstant c;  // starts at 2/1
    for (std::uint64_t x = 1; x <= n; ++x) {
        const std::uint64_t p = phi(d, x);
        const std::uint64_t q = checked_pow(x, d);
        // p/q > c.num/c.den ?
        if (static_cast<unsigned __int128>(p) * c.den > static_cast<unsigned __int128>(c.num) * q)
            c = GrowthConstant{p, q};
    }
    return c;
}

std::uint64_t guaranteed_switch_size(std::uint64_t n, int d) {
    if (d < 1) throw std::invalid_argument("guaranteed_switch_size needs d >= 1");
    const GrowthConstant c = calibrate_growth_constant(d, n);
    // largest s with c * (2s)^d <= n
    std::uint64_t s = 0;
    while (true) {
        std::uint64_t pw;
        try {
            pw = checked_pow(2 * (s + 1), d);
        } catch (const std::overflow_error&) {
            break;
        }
        if (static_cast<unsigned __int128>(c.num) * pw >
            static_cast<unsigned __int128>(n) * c.den)
            break;
        ++s;
    }
    return s;
}

bool switch_size_bound_holds(std::uint64_t k, std::uint64_t n, int d) {
    if (d < 1) throw std::invalid_argument("switch_size_bound_holds needs d >= 1");
    const GrowthConstant c = calibrate_growth_constant(d, n);
    std::uint64_t pw;
    try {
        pw = checked_pow(2 * k + 2, d);
    } catch (const std::overflow_error&) {
        return true;  // the left side exceeds any representable n
    }
    return static_cast<unsigned __int128>(c.num) * pw > static_cast<unsigned __int128>(n) * c.den;
}

}  // namespace vcr
