#include "vcr/patterns.hpp"

#include <charconv>
#include <unordered_set>

namespace vcr {

std::string_view kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::Matching: return "Matching";
        case PatternKind::CoMatching: return "CoMatching";
        case PatternKind::HalfGraph: return "HalfGraph";
        case PatternKind::Homogeneous: return "Homogeneous";
    }
    return "?";
}

PatternKind canonical_kind(TriPattern p) {
    if (!p.inhomogeneous()) return PatternKind::Homogeneous;
    if (p.alpha == p.gamma) return p.beta ? PatternKind::Matching : PatternKind::CoMatching;
    return PatternKind::HalfGraph;
}

BinaryMatrix make_tri_matrix(TriPattern p, std::size_t n) {
    BinaryMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool v = i < j ? p.alpha : (i == j ? p.beta : p.gamma);
            if (v) a.set(i, j, true);
        }
    return a;
}

std::optional<TriPattern> classify(const BinaryMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("classify expects a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw std::invalid_argument("classify expects n >= 1");

    const bool beta = a.get(0, 0);
    for (std::size_t i = 1; i < n; ++i)
        if (a.get(i, i) != beta) return std::nullopt;

    if (n == 1) return TriPattern{beta, beta, beta};

    const bool alpha = a.get(0, 1);
    const bool gamma = a.get(1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j && a.get(i, j) != alpha) return std::nullopt;
            if (i > j && a.get(i, j) != gamma) return std::nullopt;
        }
    return TriPattern{alpha, beta, gamma};
}

VerifyResult verify_certificate(const BinaryMatrix& host, const ExtractionCertificate& cert) {
    VerifyResult r;
    const std::size_t k = cert.rows.size();
    if (k != cert.cols.size()) {
        r.reason = "row and column lists differ in length";
        return r;
    }
    if (k < 2) {
        r.reason = "vacuous witness: certified size must be at least 2";
        return r;
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t i : cert.rows) {
        if (i >= host.rows()) {
            r.reason = "row index " + std::to_string(i) + " out of range";
            return r;
        }
        if (!seen.insert(i).second) {
            r.reason = "duplicate row index " + std::to_string(i);
            return r;
        }
    }
    seen.clear();
    for (std::size_t j : cert.cols) {
        if (j >= host.cols()) {
            r.reason = "column index " + std::to_string(j) + " out of range";
            return r;
        }
        if (!seen.insert(j).second) {
            r.reason = "duplicate column index " + std::to_string(j);
            return r;
        }
    }

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const bool expected =
                i < j ? cert.pattern.alpha : (i == j ? cert.pattern.beta : cert.pattern.gamma);
            const bool found = host.get(cert.rows[i], cert.cols[j]);
            if (found != expected) {
                r.reason = "claimed " + std::string(i < j ? "alpha=" : (i == j ? "beta=" : "gamma=")) +
                           (expected ? "1" : "0") + ", found " + (found ? "1" : "0") +
                           " at relative entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                r.rel_row = static_cast<long>(i);
                r.rel_col = static_cast<long>(j);
                return r;
            }
        }

    if (cert.pattern.alpha == cert.pattern.beta) {
        r.reason = "pattern must have alpha != beta";
        return r;
    }
    if (cert.kind != canonical_kind(cert.pattern)) {
        r.reason = "kind does not match the pattern";
        return r;
    }
    r.ok = true;
    return r;
}

bool is_switch_matrix(const BinaryMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != 2 * n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a.get(i, 2 * i) || !a.get(i, 2 * i + 1)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.get(i, 2 * j) != a.get(i, 2 * j + 1)) return false;
    return true;
}

std::string serialize_certificate(const ExtractionCertificate& cert) {
    std::string out = std::to_string(cert.rows.size()) + "\n";
    out += "pattern " + std::to_string(cert.pattern.alpha ? 1 : 0) + " " +
           std::to_string(cert.pattern.beta ? 1 : 0) + " " +
           std::to_string(cert.pattern.gamma ? 1 : 0) + "\n";
    out += "rows";
    for (std::size_t i : cert.rows) out += " " + std::to_string(i);
    out += "\ncols";
    for (std::size_t j : cert.cols) out += " " + std::to_string(j);
    out += "\n";
    return out;
}

namespace {

std::string_view next_line(std::string_view text, std::size_t& offset, std::size_t lineno) {
    if (offset >= text.size()) throw ParseError(lineno, "unexpected end of certificate");
    const std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) throw ParseError(lineno, "line is not newline-terminated");
    std::string_view line = text.substr(offset, end - offset);
    offset = end + 1;
    return line;
}

std::uint64_t parse_u64(std::string_view token, std::size_t lineno, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(lineno, std::string("expected a decimal ") + what + ", got \"" +
                                     std::string(token) + "\"");
    return v;
}

std::vector<std::size_t> parse_index_line(std::string_view line, std::string_view label,
                                          std::size_t count, std::size_t lineno) {
    if (line.substr(0, label.size()) != label)
        throw ParseError(lineno, "expected \"" + std::string(label) + " ...\"");
    std::vector<std::size_t> out;
    std::size_t pos = label.size();
    while (pos < line.size()) {
        if (line[pos] != ' ') throw ParseError(lineno, "expected space-separated indices");
        ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ') ++end;
        out.push_back(static_cast<std::size_t>(parse_u64(line.substr(pos, end - pos), lineno, "index")));
        pos = end;
    }
    if (out.size() != count)
        throw ParseError(lineno, std::string(label) + " lists " + std::to_string(out.size()) +
                                     " indices, expected " + std::to_string(count));
    return out;
}

}  // namespace

ExtractionCertificate parse_certificate(std::string_view text) {
    std::size_t offset = 0;
    const std::size_t k =
        static_cast<std::size_t>(parse_u64(next_line(text, offset, 1), 1, "certificate size"));

    std::string_view pat = next_line(text, offset, 2);
    if (pat.substr(0, 8) != "pattern ") throw ParseError(2, "expected \"pattern a b g\"");
    std::size_t pos = 8;
    bool bits[3];
    for (int t = 0; t < 3; ++t) {
        if (t > 0) {
            if (pos >= pat.size() || pat[pos] != ' ') throw ParseError(2, "expected \"pattern a b g\"");
            ++pos;
        }
        if (pos >= pat.size() || (pat[pos] != '0' && pat[pos] != '1'))
            throw ParseError(2, "pattern bits must be 0 or 1");
        bits[t] = pat[pos] == '1';
        ++pos;
    }
    if (pos != pat.size()) throw ParseError(2, "unexpected characters after pattern bits");

    ExtractionCertificate cert;
    cert.pattern = TriPattern{bits[0], bits[1], bits[2]};
    cert.kind = canonical_kind(cert.pattern);
    cert.rows = parse_index_line(next_line(text, offset, 3), "rows", k, 3);
    cert.cols = parse_index_line(next_line(text, offset, 4), "cols", k, 4);
    if (offset != text.size()) throw ParseError(5, "unexpected trailing content");
    return cert;
}

}  // namespace vcr
