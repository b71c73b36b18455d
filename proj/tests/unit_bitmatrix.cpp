#include <doctest.h>

#include "test_util.hpp"
#include "vcr/bitmatrix.hpp"
#include "vcr/generators.hpp"
#include "vcr/rng.hpp"
#include "vcr/vcdim.hpp"

using namespace vcr;
using testutil::from_rows;
using testutil::random_matrix;

TEST_CASE("entry access") {
    const BinaryMatrix id2 = matching(2);
    CHECK(id2.entry(0, 0) == true);
    CHECK(id2.entry(0, 1) == false);
    const BinaryMatrix z(1, 1);
    CHECK(z.entry(0, 0) == false);
    CHECK_THROWS_AS(id2.entry(2, 0), std::out_of_range);
    CHECK_THROWS_AS(id2.entry(0, 2), std::out_of_range);
}

TEST_CASE("submatrix selects with order") {
    const BinaryMatrix id3 = matching(3);
    CHECK(submatrix(id3, {{2, 0}, {0, 2}}) == from_rows({"01", "10"}));
    CHECK(submatrix(id3, {{0, 1, 2}, {0, 1, 2}}) == id3);
    CHECK(submatrix(half_graph(3), {{0, 1}, {1, 2}}) == from_rows({"11", "11"}));

    CHECK_THROWS_AS(submatrix(id3, {{0, 3}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(submatrix(id3, {{0, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(submatrix(id3, {{0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("transpose and complement") {
    CHECK(complement(matching(2)) == from_rows({"01", "10"}));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const BinaryMatrix a = random_matrix(5, 7, 0.4, seed);
        CHECK(transpose(transpose(a)) == a);
        CHECK(complement(complement(a)) == a);
    }
}

TEST_CASE("column twin classes") {
    CHECK(column_twin_classes(BinaryMatrix(2, 3)) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(column_twin_classes(matching(3)) ==
          std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(column_twin_classes(from_rows({"001", "110"})) ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
}

TEST_CASE("dedup_columns keeps smallest representatives") {
    const DedupResult d = dedup_columns(from_rows({"001", "110"}));
    CHECK(d.matrix == from_rows({"01", "10"}));
    CHECK(d.kept == std::vector<std::size_t>{0, 2});

    const DedupResult e = dedup_columns(matching(3));
    CHECK(e.matrix == matching(3));
    CHECK(e.kept == std::vector<std::size_t>{0, 1, 2});

    const DedupResult f = dedup_columns(from_rows({"1111"}));
    CHECK(f.matrix == from_rows({"1"}));
    CHECK(f.kept == std::vector<std::size_t>{0});
}

TEST_CASE("dedup output is twin-free and kept maps to equal columns") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BinaryMatrix a = random_matrix(4, 9, 0.3, seed);
        const DedupResult d = dedup_columns(a);
        for (std::size_t u = 0; u < d.matrix.cols(); ++u) {
            CHECK(d.matrix.col_bits(u) == a.col_bits(d.kept[u]));
            for (std::size_t v = u + 1; v < d.matrix.cols(); ++v)
                CHECK(d.matrix.col_bits(u) != d.matrix.col_bits(v));
        }
    }
}

TEST_CASE("matrix text format") {
    CHECK(parse_matrix("2 2\n10\n01\n") == matching(2));
    CHECK(serialize_matrix(matching(2)) == "2 2\n10\n01\n");

    CHECK_THROWS_WITH_AS(parse_matrix("1 2\n1\n"), "line 2: row has length 1, expected 2",
                         ParseError);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2  2\n10\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("a 2\n10\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n1x\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n10"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n10\nextra\n"), ParseError);

    // empty dimensions are legal values
    CHECK(parse_matrix("0 0\n") == BinaryMatrix(0, 0));
    CHECK(parse_matrix("0 5\n") == BinaryMatrix(0, 5));
    CHECK(parse_matrix("3 0\n\n\n\n") == BinaryMatrix(3, 0));
    CHECK(serialize_matrix(BinaryMatrix(3, 0)) == "3 0\n\n\n\n");
}

TEST_CASE("parse round-trips serialize on random matrices") {
    SplitMix64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const auto m = static_cast<std::size_t>(rng.next_below(17));
        const auto n = static_cast<std::size_t>(rng.next_below(17));
        const BinaryMatrix a = random_matrix(m, n, 0.5, rng.next());
        CHECK(parse_matrix(serialize_matrix(a)) == a);
    }
}

TEST_CASE("VC-dimension is monotone under submatrix, transpose, complement") {
    SplitMix64 rng(7);
    for (int t = 0; t < 25; ++t) {
        const BinaryMatrix a = random_matrix(5, 6, 0.5, rng.next());
        const int d = matrix_vc_dimension(a);
        CHECK(matrix_vc_dimension(transpose(a)) <= d);
        CHECK(matrix_vc_dimension(complement(a)) <= d);

        IndexSelection sel;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (rng.next_below(2)) sel.rows.push_back(i);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (rng.next_below(2)) sel.cols.push_back(j);
        CHECK(matrix_vc_dimension(submatrix(a, sel)) <= d);
    }
}
