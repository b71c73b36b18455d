#include <doctest.h>

#include "test_util.hpp"
#include "vcr/generators.hpp"
#include "vcr/oracle.hpp"
#include "vcr/rng.hpp"
#include "vcr/vcdim.hpp"

using namespace vcr;
using testutil::from_rows;

namespace {

const TriPattern kInhomogeneous[6] = {
    {false, false, true}, {false, true, false}, {false, true, true},
    {true, false, false}, {true, false, true},  {true, true, false},
};

const TriPattern kAlphaNeqBeta[4] = {
    {false, true, false}, {false, true, true}, {true, false, false}, {true, false, true},
};

}  // namespace

TEST_CASE("max_tri_submatrix") {
    const BinaryMatrix id5 = matching(5);
    const auto full = oracle::max_tri_submatrix(id5, {false, true, false});
    CHECK(full.size == 5);
    CHECK_FALSE(full.vacuous);

    const auto co = oracle::max_tri_submatrix(id5, {true, false, true});
    CHECK(co.size == 2);
    CHECK(co.sel.rows == std::vector<std::size_t>{0, 1});
    CHECK(co.sel.cols == std::vector<std::size_t>{1, 0});

    // no entry equals beta = 1: only the floor witness remains
    const auto floor = oracle::max_tri_submatrix(BinaryMatrix(3, 3), {false, true, false});
    CHECK(floor.size == 1);
    CHECK(floor.vacuous);

    CHECK_THROWS_AS(oracle::max_tri_submatrix(BinaryMatrix(9, 3), {false, true, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::max_tri_submatrix(BinaryMatrix(3, 9), {false, true, false}),
                    std::invalid_argument);
}

TEST_CASE("max_tri_submatrix witnesses really realize the pattern") {
    SplitMix64 rng(131);
    for (int t = 0; t < 60; ++t) {
        const BinaryMatrix a = testutil::random_matrix(5, 5, 0.5, rng.next());
        for (TriPattern p : kInhomogeneous) {
            const auto r = oracle::max_tri_submatrix(a, p);
            if (r.vacuous) continue;
            CHECK(submatrix(a, r.sel) == make_tri_matrix(p, r.size));
            // maximality: no witness of size + 1 was found by the search
        }
    }
}

TEST_CASE("max_homogeneous_set") {
    SimpleGraph k4(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    const auto rk = oracle::max_homogeneous_set(k4);
    CHECK(rk.size == 4);
    CHECK(rk.kind == HomogeneousKind::Clique);
    CHECK(rk.vertices == std::vector<std::size_t>{0, 1, 2, 3});

    SimpleGraph c5(5);
    for (std::size_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(oracle::max_homogeneous_set(c5).size == 2);

    // P_4: computed by this oracle and pinned
    SimpleGraph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    const auto rp = oracle::max_homogeneous_set(p4);
    CHECK(rp.size == 2);
    CHECK(rp.kind == HomogeneousKind::Clique);
    CHECK(rp.vertices == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(oracle::max_homogeneous_set(SimpleGraph(17)), std::invalid_argument);
}

TEST_CASE("naive vc and growth") {
    SetSystem power2;
    power2.ground_size = 2;
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
        BitVec b(2);
        if (mask & 1) b.set(0, true);
        if (mask & 2) b.set(1, true);
        power2.family.push_back(std::move(b));
    }
    CHECK(oracle::vc_dimension_naive(power2) == 2);

    SetSystem just_empty{1, {BitVec(1)}};
    CHECK(oracle::vc_dimension_naive(just_empty) == 0);

    CHECK_THROWS_AS(oracle::vc_dimension_naive(SetSystem{21, {}}), std::invalid_argument);
    CHECK_THROWS_AS(oracle::growth_naive(SetSystem{21, {}}, 2), std::invalid_argument);
}

TEST_CASE("naive and main implementations agree") {
    SplitMix64 rng(141);
    for (int t = 0; t < 120; ++t) {
        const SetSystem s = testutil::random_system(1 + rng.next_below(10), rng.next_below(12),
                                                    0.5, rng.next());
        CHECK(oracle::vc_dimension_naive(s) == vc_dimension(s));
        const std::size_t n = rng.next_below(s.ground_size + 1);
        CHECK(oracle::growth_naive(s, n) == growth_function(s, n));
    }
}

TEST_CASE("twin-free matrices with three distinct columns contain a size-2 witness") {
    // exhaustive at 3x3; two distinct columns are not enough (e.g. a constant
    // pair like [[1,0],[1,0]] has no such submatrix)
    auto best_ab = [](const BinaryMatrix& a) {
        std::size_t best = 0;
        for (TriPattern p : kAlphaNeqBeta) {
            const auto r = oracle::max_tri_submatrix(a, p);
            if (!r.vacuous) best = std::max(best, r.size);
        }
        return best;
    };

    const BinaryMatrix constant_pair = from_rows({"10", "10"});
    CHECK(dedup_columns(constant_pair).kept.size() == 2);
    CHECK(best_ab(constant_pair) < 2);

    for (std::uint64_t bits = 0; bits < (1u << 9); ++bits) {
        BinaryMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (bits >> (i * 3 + j) & 1) a.set(i, j, true);
        if (dedup_columns(a).kept.size() != 3) continue;
        CHECK(best_ab(a) >= 2);
    }

    SplitMix64 rng(151);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const BinaryMatrix a = testutil::random_matrix(2 + rng.next_below(5), 2 + rng.next_below(5),
                                                       0.5, rng.next());
        if (dedup_columns(a).kept.size() < 3) continue;
        CHECK(best_ab(a) >= 2);
        ++checked;
    }
    CHECK(checked > 50);
}
