#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "vcr/generators.hpp"
#include "vcr/rng.hpp"
#include "vcr/vcdim.hpp"

using namespace vcr;
using testutil::from_rows;

TEST_CASE("chain families") {
    CHECK(matching(3) == from_rows({"100", "010", "001"}));
    CHECK(half_graph(2) == from_rows({"11", "01"}));
    CHECK(co_matching(2) == from_rows({"01", "10"}));
    CHECK(half_graph(0) == BinaryMatrix(0, 0));
}

TEST_CASE("half_graph columns are pairwise distinct") {
    for (std::size_t n : {1, 2, 5, 16, 33}) {
        const DedupResult d = dedup_columns(half_graph(n));
        CHECK(d.kept.size() == n);
    }
}

TEST_CASE("interval family") {
    const BinaryMatrix a = interval_matrix(12, 20, 7);
    CHECK(a.rows() == 12);
    CHECK(a.cols() == 20);
    CHECK(a == interval_matrix(12, 20, 7));
    CHECK(a != interval_matrix(12, 20, 8));

    // membership semantics: replay the stream and compare entries
    SplitMix64 rng(7);
    std::set<std::uint64_t> ptset;
    while (ptset.size() < 12) ptset.insert(rng.next_below(48));
    const std::vector<std::uint64_t> pts(ptset.begin(), ptset.end());
    for (std::size_t j = 0; j < 20; ++j) {
        std::uint64_t lo = rng.next_below(48), hi = rng.next_below(48);
        if (lo > hi) std::swap(lo, hi);
        for (std::size_t i = 0; i < 12; ++i)
            CHECK(a.get(i, j) == (lo <= pts[i] && pts[i] <= hi));
    }

    for (std::uint64_t seed = 0; seed < 6; ++seed)
        CHECK(matrix_vc_dimension(interval_matrix(10, 24, seed)) <= 2);

    CHECK_THROWS_AS(interval_matrix(0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(interval_matrix(3, 0, 0), std::invalid_argument);
}

TEST_CASE("boxes family") {
    const BinaryMatrix a = boxes_matrix(10, 14, 2, 3);
    CHECK(a.rows() == 10);
    CHECK(a.cols() == 14);
    CHECK(a == boxes_matrix(10, 14, 2, 3));

    // k = 1 has interval semantics: column system shatters no 3 points
    for (std::uint64_t seed = 0; seed < 4; ++seed)
        CHECK(vc_dimension(columns_system(boxes_matrix(10, 20, 1, seed))) <= 2);

    // k = 2: column system dimension at most 4
    for (std::uint64_t seed = 0; seed < 4; ++seed)
        CHECK(vc_dimension(columns_system(boxes_matrix(9, 20, 2, seed))) <= 4);

    CHECK_THROWS_AS(boxes_matrix(4, 4, 0, 0), std::invalid_argument);
}

TEST_CASE("random_bipartite") {
    CHECK(random_bipartite(3, 4, 0.0, 5) == BinaryMatrix(3, 4));
    CHECK(random_bipartite(3, 4, 1.0, 5) == complement(BinaryMatrix(3, 4)));
    CHECK(random_bipartite(8, 8, 0.5, 1) == random_bipartite(8, 8, 0.5, 1));
    // regression pin for the documented stream
    CHECK(serialize_matrix(random_bipartite(4, 4, 0.5, 42)) == "4 4\n0111\n1010\n1011\n0001\n");
    CHECK_THROWS_AS(random_bipartite(2, 2, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_bipartite(2, 2, -0.1, 0), std::invalid_argument);
}

TEST_CASE("generator spec text form") {
    const GeneratorSpec s = GeneratorSpec::parse("interval:points=64,intervals=64,seed=7");
    CHECK(s.family == "interval");
    CHECK(s.params.at("points") == "64");
    CHECK(s.canonical_text() == "interval:intervals=64,points=64,seed=7");

    CHECK(generate(GeneratorSpec::parse("matching:n=3")) == matching(3));
    CHECK(generate(GeneratorSpec::parse("half_graph:n=2")) == from_rows({"11", "01"}));
    CHECK(generate(GeneratorSpec::parse("random_bipartite:m=2,n=2,p=0.5,seed=1")) ==
          random_bipartite(2, 2, 0.5, 1));

    CHECK_THROWS_AS(generate(GeneratorSpec::parse("nosuch:n=3")), std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("matching")), std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("matching:n=x")), std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("matching:n=3,weird=1")), std::invalid_argument);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("random_bipartite:m=2,n=2,p=2,seed=1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::parse("interval:points=1,points=2"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::parse(":n=1"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::parse("interval:points"), std::invalid_argument);
}

TEST_CASE("declared bounds") {
    CHECK(declared_vc_bound(GeneratorSpec::parse("half_graph:n=4")) == 1);
    CHECK(declared_vc_bound(GeneratorSpec::parse("interval:points=4,intervals=4")) == 2);
    CHECK(declared_vc_bound(GeneratorSpec::parse("boxes:points=4,boxes=4,k=3")) == 6);
    CHECK(declared_vc_bound(GeneratorSpec::parse("random_bipartite:m=2,n=2,p=0.5")) ==
          std::nullopt);
}
