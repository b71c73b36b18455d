#include "vcr/bitmatrix.hpp"

#include <unordered_map>
#include <unordered_set>

namespace vcr {

void validate_selection(const BinaryMatrix& a, const IndexSelection& sel) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t r : sel.rows) {
        if (r >= a.rows()) throw std::invalid_argument("selection row " + std::to_string(r) + " out of range");
        if (!seen.insert(r).second) throw std::invalid_argument("duplicate selection row " + std::to_string(r));
    }
    seen.clear();
    for (std::size_t c : sel.cols) {
        if (c >= a.cols()) throw std::invalid_argument("selection column " + std::to_string(c) + " out of range");
        if (!seen.insert(c).second) throw std::invalid_argument("duplicate selection column " + std::to_string(c));
    }
}

BinaryMatrix submatrix(const BinaryMatrix& a, const IndexSelection& sel) {
    validate_selection(a, sel);
    BinaryMatrix b(sel.rows.size(), sel.cols.size());
    for (std::size_t i = 0; i < sel.rows.size(); ++i)
        for (std::size_t j = 0; j < sel.cols.size(); ++j)
            if (a.get(sel.rows[i], sel.cols[j])) b.set(i, j, true);
    return b;
}

BinaryMatrix transpose(const BinaryMatrix& a) {
    BinaryMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) t.set(j, i, true);
    return t;
}

BinaryMatrix complement(const BinaryMatrix& a) {
    BinaryMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.get(i, j)) c.set(i, j, true);
    return c;
}

std::vector<std::vector<std::size_t>> column_twin_classes(const BinaryMatrix& a) {
    std::vector<std::vector<std::size_t>> classes;
    std::unordered_map<BitVec, std::size_t, BitVecHash> index_of;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        BitVec col = a.col_bits(j);
        auto [it, fresh] = index_of.try_emplace(std::move(col), classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(j);
    }
    // first occurrences create classes in ascending order of smallest member
    return classes;
}

DedupResult dedup_columns(const BinaryMatrix& a) {
    DedupResult r;
    for (const auto& cls : column_twin_classes(a)) r.kept.push_back(cls.front());
    r.matrix = BinaryMatrix(a.rows(), r.kept.size());
    for (std::size_t j = 0; j < r.kept.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a.get(i, r.kept[j])) r.matrix.set(i, j, true);
    return r;
}

namespace {

std::size_t parse_dim(std::string_view line, std::size_t& pos, std::size_t lineno) {
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
        if (v > (std::uint64_t{1} << 32)) throw ParseError(lineno, "dimension too large");
        ++pos;
    }
    if (pos == start) throw ParseError(lineno, "expected a decimal dimension in header");
    return static_cast<std::size_t>(v);
}

}  // namespace

BinaryMatrix parse_matrix(std::string_view text) {
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw ParseError(1, "missing newline after header");
    std::string_view header = text.substr(0, nl);

    std::size_t pos = 0;
    const std::size_t m = parse_dim(header, pos, 1);
    if (pos >= header.size() || header[pos] != ' ')
        throw ParseError(1, "header must be \"m n\" with a single space");
    ++pos;
    const std::size_t n = parse_dim(header, pos, 1);
    if (pos != header.size()) throw ParseError(1, "unexpected characters after header dimensions");

    BinaryMatrix a(m, n);
    std::size_t offset = nl + 1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t lineno = i + 2;
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) {
            if (offset >= text.size()) throw ParseError(lineno, "expected a matrix row, found end of input");
            throw ParseError(lineno, "matrix row is not newline-terminated");
        }
        std::string_view row = text.substr(offset, end - offset);
        if (row.size() != n)
            throw ParseError(lineno, "row has length " + std::to_string(row.size()) + ", expected " +
                                         std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == '1')
                a.set(i, j, true);
            else if (row[j] != '0')
                throw ParseError(lineno, std::string("invalid character '") + row[j] + "' in matrix row");
        }
        offset = end + 1;
    }
    if (offset != text.size()) throw ParseError(m + 2, "unexpected trailing content after last row");
    return a;
}

std::string serialize_matrix(const BinaryMatrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    out.reserve(out.size() + a.rows() * (a.cols() + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace vcr
