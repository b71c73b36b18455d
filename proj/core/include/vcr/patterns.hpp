#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vcr/bitmatrix.hpp"

namespace vcr {

/// The (alpha, beta, gamma) triple of a square matrix that is constantly
/// alpha above the diagonal, beta on it, gamma below it.
struct TriPattern {
    bool alpha;
    bool beta;
    bool gamma;

    bool inhomogeneous() const { return !(alpha == beta && beta == gamma); }

    friend bool operator==(const TriPattern&, const TriPattern&) = default;
};

enum class PatternKind { Matching, CoMatching, HalfGraph, Homogeneous };

std::string_view kind_name(PatternKind k);

/// (0,1,0) -> Matching, (1,0,1) -> CoMatching, the four chain patterns
/// (1,1,0), (0,1,1), (1,0,0), (0,0,1) -> HalfGraph, constants -> Homogeneous.
/// The strict chains count as half-graphs: dropping one row and one column
/// of a (1,0,0)-matrix of size n leaves a (1,1,0)-matrix of size n-1.
PatternKind canonical_kind(TriPattern p);

/// n x n matrix realizing p exactly.
BinaryMatrix make_tri_matrix(TriPattern p, std::size_t n);

/// The unique TriPattern of a square matrix, or nullopt if the three regions
/// are not constant. A 1x1 matrix determines only the diagonal value b and
/// classifies as (b, b, b). Throws std::invalid_argument unless square with
/// n >= 1.
std::optional<TriPattern> classify(const BinaryMatrix& a);

/// Row/column index lists into a host matrix together with the tri-pattern
/// they claim to realize. Indices are host-matrix indices.
struct ExtractionCertificate {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    TriPattern pattern;
    PatternKind kind;
};

/// Violations are values, not errors. When an entry of the selected
/// submatrix disagrees with the claimed pattern, rel_row/rel_col name the
/// first failing entry in row-major order, relative to the selection.
struct VerifyResult {
    bool ok = false;
    std::string reason;
    long rel_row = -1;
    long rel_col = -1;
};

/// Checks, in order: index lists well-formed (equal length >= 2, in range,
/// duplicate-free), selected submatrix equals make_tri_matrix(pattern, k),
/// alpha != beta, and kind == canonical_kind(pattern).
VerifyResult verify_certificate(const BinaryMatrix& host, const ExtractionCertificate& cert);

/// True iff a is n x 2n with a(i, 2i) = 0, a(i, 2i+1) = 1 for all i and
/// a(i, 2j) = a(i, 2j+1) for all i < j.
bool is_switch_matrix(const BinaryMatrix& a);

/// Certificate text block:
///   k
///   pattern a b g
///   rows i1 ... ik
///   cols j1 ... jk
/// decimal, space-separated, newline-terminated. kind is derived on parse.
std::string serialize_certificate(const ExtractionCertificate& cert);
ExtractionCertificate parse_certificate(std::string_view text);

}  // namespace vcr
