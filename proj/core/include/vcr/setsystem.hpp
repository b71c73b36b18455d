#pragma once

#include <cstddef>
#include <vector>

#include "vcr/bitmatrix.hpp"
#include "vcr/bitvec.hpp"

namespace vcr {

/// Ground set [0, ground_size) plus a family of subsets, each a bit vector
/// of exactly ground_size bits. Duplicate members are permitted; traces are
/// counted as a set of intersections, so duplicates never matter.
struct SetSystem {
    std::size_t ground_size = 0;
    std::vector<BitVec> family;
};

/// Columns of a as subsets of the row set.
SetSystem columns_system(const BinaryMatrix& a);

/// Rows of a as subsets of the column set.
SetSystem rows_system(const BinaryMatrix& a);

}  // namespace vcr
