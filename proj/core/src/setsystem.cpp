#include "vcr/setsystem.hpp"

namespace vcr {

SetSystem columns_system(const BinaryMatrix& a) {
    SetSystem s;
    s.ground_size = a.rows();
    s.family.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) s.family.push_back(a.col_bits(j));
    return s;
}

SetSystem rows_system(const BinaryMatrix& a) {
    SetSystem s;
    s.ground_size = a.cols();
    s.family.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) s.family.push_back(a.row_bits(i));
    return s;
}

}  // namespace vcr
