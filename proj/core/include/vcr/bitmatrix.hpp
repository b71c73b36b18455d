#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vcr/bitvec.hpp"

namespace vcr {

/// Error for malformed text inputs; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Row-major bit-packed 0/1 matrix. Rows are word-aligned; columns are
/// materialized on demand as bit vectors. Empty dimensions are legal values
/// and every operation is total on them.
class BinaryMatrix {
public:
    BinaryMatrix() = default;

    BinaryMatrix(std::size_t rows, std::size_t cols)
        : m_(rows), n_(cols), wpr_((cols + 63) / 64), w_(rows * ((cols + 63) / 64), 0) {}

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    /// Unchecked access; (i, j) must be in range.
    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (j & 63);
        if (v)
            w_[i * wpr_ + (j >> 6)] |= m;
        else
            w_[i * wpr_ + (j >> 6)] &= ~m;
    }

    /// Checked access; throws std::out_of_range.
    bool entry(std::size_t i, std::size_t j) const {
        if (i >= m_ || j >= n_)
            throw std::out_of_range("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") out of range for " + std::to_string(m_) + "x" + std::to_string(n_));
        return get(i, j);
    }

    BitVec row_bits(std::size_t i) const {
        BitVec r(n_);
        for (std::size_t j = 0; j < n_; ++j)
            if (get(i, j)) r.set(j, true);
        return r;
    }

    BitVec col_bits(std::size_t j) const {
        BitVec c(m_);
        for (std::size_t i = 0; i < m_; ++i)
            if (get(i, j)) c.set(i, true);
        return c;
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t m_ = 0, n_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Ordered, duplicate-free row and column index lists into a host matrix.
/// The order of the lists defines the order of the selected submatrix, so
/// permutations are expressible.
struct IndexSelection {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// Throws std::invalid_argument on out-of-range or duplicated indices.
void validate_selection(const BinaryMatrix& a, const IndexSelection& sel);

/// Result entry (i, j) = a(sel.rows[i], sel.cols[j]).
BinaryMatrix submatrix(const BinaryMatrix& a, const IndexSelection& sel);

BinaryMatrix transpose(const BinaryMatrix& a);
BinaryMatrix complement(const BinaryMatrix& a);

/// Partition of column indices into classes of bitwise-identical columns.
/// Classes are ordered by smallest member; members ascend within a class.
std::vector<std::vector<std::size_t>> column_twin_classes(const BinaryMatrix& a);

struct DedupResult {
    BinaryMatrix matrix;             ///< pairwise-distinct columns
    std::vector<std::size_t> kept;   ///< original index of each surviving column, ascending
};

/// Keeps the smallest-index representative of every twin class.
DedupResult dedup_columns(const BinaryMatrix& a);

/// Text format: first line "m n" (decimal, single space), then m lines of
/// exactly n characters from {0,1}, each newline-terminated, nothing after.
BinaryMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const BinaryMatrix& a);

}  // namespace vcr
