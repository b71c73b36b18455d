#include "vcr/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "vcr/generators.hpp"
#include "vcr/switch_extract.hpp"
#include "vcr/vcdim.hpp"

namespace vcr {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

PipelineReport extract_structure(const BinaryMatrix& a, const PipelineConfig& cfg) {
    if (a.cols() == 0 || a.rows() == 0)
        throw std::invalid_argument("extract_structure expects a nonempty matrix");

    const auto t_total = Clock::now();
    PipelineReport rep;
    rep.input_rows = a.rows();
    rep.input_cols = a.cols();

    auto t = Clock::now();
    const DedupResult dedup = dedup_columns(a);
    rep.distinct_cols = dedup.kept.size();
    rep.timings.dedup_ms = ms_since(t);

    t = Clock::now();
    const SwitchWitness witness = extract_switch(dedup.matrix);
    rep.switch_size = witness.size();
    rep.timings.switch_ms = ms_since(t);

    if (witness.size() == 0) {
        // single distinct column: no switch step is possible, report the
        // one-entry witness and mark it vacuous
        const bool beta = a.get(0, dedup.kept[0]);
        rep.certificate = ExtractionCertificate{
            {0}, {dedup.kept[0]}, TriPattern{!beta, beta, !beta}, PatternKind{}};
        rep.certificate.kind = canonical_kind(rep.certificate.pattern);
        rep.ab_star_size = 0;
        rep.final_size = 1;
        rep.vacuous = true;
    } else {
        const BinaryMatrix s = switch_matrix_of(dedup.matrix, witness);

        t = Clock::now();
        const AbStarResult ab = extract_ab_star(s, cfg.homogenize);
        rep.ab_star_size = ab.sel.rows.size();
        rep.timings.ab_star_ms = ms_since(t);

        t = Clock::now();
        const BinaryMatrix b2 = submatrix(s, ab.sel);
        const AbcResult abc = extract_abc(b2, ab.alpha, ab.beta, cfg.homogenize);
        rep.final_size = abc.sel.rows.size();
        rep.timings.abc_ms = ms_since(t);

        // compose the three stage selections and the dedup map back into
        // host-matrix indices
        ExtractionCertificate cert;
        cert.pattern = abc.pattern;
        cert.kind = canonical_kind(abc.pattern);
        for (std::size_t b = 0; b < abc.sel.rows.size(); ++b) {
            const std::size_t s_row = ab.sel.rows[abc.sel.rows[b]];
            const std::size_t s_col = ab.sel.cols[abc.sel.cols[b]];
            const auto& pair = witness.pairs[s_col / 2];
            const std::size_t dedup_col = (s_col % 2 == 0) ? pair.first : pair.second;
            cert.rows.push_back(witness.rows[s_row]);
            cert.cols.push_back(dedup.kept[dedup_col]);
        }
        rep.certificate = std::move(cert);
        rep.vacuous = rep.final_size < 2;

        if (!rep.vacuous) {
            const VerifyResult check = verify_certificate(a, rep.certificate);
            if (!check.ok)
                throw std::logic_error("pipeline: composed certificate failed verification: " +
                                       check.reason);
        }
    }

    if (cfg.compute_vc) {
        t = Clock::now();
        if (const auto exact = matrix_vc_dimension_budgeted(a, cfg.vc_trace_budget)) {
            rep.vc_dim = *exact;
            rep.vc_dim_exact = true;
        } else if (cfg.declared_vc_bound) {
            rep.vc_dim = *cfg.declared_vc_bound;
            rep.vc_dim_exact = false;
        }
        rep.timings.vc_ms = ms_since(t);
    } else if (cfg.declared_vc_bound) {
        rep.vc_dim = *cfg.declared_vc_bound;
    }

    rep.timings.total_ms = ms_since(t_total);
    return rep;
}

namespace {

void replace_all(std::string& text, std::string_view token, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
}

bool is_known_family(std::string_view family) {
    return family == "half_graph" || family == "matching" || family == "co_matching" ||
           family == "interval" || family == "boxes" || family == "random_bipartite";
}

bool is_seeded_family(std::string_view family) {
    return family == "interval" || family == "boxes" || family == "random_bipartite";
}

}  // namespace

std::string expand_family_template(const std::string& family_template, std::size_t n,
                                   std::uint64_t seed) {
    std::string text = family_template;
    if (text.find(':') == std::string::npos) {
        if (text == "half_graph" || text == "matching" || text == "co_matching")
            text += ":n={n}";
        else if (text == "interval")
            text += ":points={n},intervals={n},seed={seed}";
        else if (text == "boxes")
            text += ":points={n},boxes={n},k=2,seed={seed}";
        else if (text == "random_bipartite")
            text += ":m={n},n={n},p=0.5,seed={seed}";
    }
    replace_all(text, "{n}", std::to_string(n));
    replace_all(text, "{seed}", std::to_string(seed));
    const std::string family = text.substr(0, text.find(':'));
    if (is_seeded_family(family) && text.find("seed=") == std::string::npos)
        text += ",seed=" + std::to_string(seed);
    return text;
}

std::vector<ExperimentRecord> run_experiment(const std::string& family_template,
                                             const std::vector<std::size_t>& sizes,
                                             const std::vector<std::uint64_t>& seeds,
                                             const PipelineConfig& cfg, unsigned jobs,
                                             bool wall_clock) {
    if (sizes.empty()) throw std::invalid_argument("run_experiment expects a non-empty sizes list");

    {
        const std::string probe = expand_family_template(family_template, sizes.front(),
                                                         seeds.empty() ? 0 : seeds.front());
        const GeneratorSpec spec = GeneratorSpec::parse(probe);
        if (!is_known_family(spec.family))
            throw std::invalid_argument("unknown generator family \"" + spec.family + "\"");
    }

    struct Cell {
        std::size_t n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (std::size_t n : sizes)
        for (std::uint64_t seed : seeds) cells.push_back({n, seed});

    std::vector<ExperimentRecord> records(cells.size());
    const auto run_cell = [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        ExperimentRecord& rec = records[idx];
        rec.seed = cell.seed;
        const auto start = Clock::now();
        try {
            const std::string text = expand_family_template(family_template, cell.n, cell.seed);
            const GeneratorSpec spec = GeneratorSpec::parse(text);
            rec.family = spec.family;
            const BinaryMatrix a = generate(spec);
            rec.n_cols = a.cols();
            rec.m_rows = a.rows();

            PipelineConfig cell_cfg = cfg;
            if (!cell_cfg.declared_vc_bound) cell_cfg.declared_vc_bound = declared_vc_bound(spec);
            const PipelineReport rep = extract_structure(a, cell_cfg);

            rec.distinct_cols = rep.distinct_cols;
            rec.vc_dim = rep.vc_dim;
            rec.vc_dim_exact = rep.vc_dim_exact;
            rec.switch_size = rep.switch_size;
            rec.ab_star_size = rep.ab_star_size;
            rec.final_size = rep.final_size;
            rec.kind = std::string(kind_name(rep.certificate.kind));
        } catch (const std::exception& e) {
            rec.error = e.what();
            if (rec.family.empty()) {
                const std::string text = expand_family_template(family_template, cell.n, cell.seed);
                rec.family = text.substr(0, text.find(':'));
            }
        }
        if (wall_clock)
            rec.total_ms = static_cast<std::uint64_t>(ms_since(start));
    };

    if (jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(cells.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << kCsvHeader << '\n';
    for (const ExperimentRecord& r : records) {
        out << csv_escape(r.family) << ',' << r.n_cols << ',' << r.m_rows << ',' << r.distinct_cols
            << ',' << r.vc_dim << ',' << (r.vc_dim_exact ? "true" : "false") << ',' << r.switch_size
            << ',' << r.ab_star_size << ',' << r.final_size << ',' << r.kind << ',' << r.total_ms
            << ',' << csv_escape(r.error) << '\n';
    }
}

}  // namespace vcr
