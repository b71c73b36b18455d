#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcr/generators.hpp"
#include "vcr/oracle.hpp"
#include "vcr/patterns.hpp"
#include "vcr/pipeline.hpp"
#include "vcr/vcdim.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("bad ") + what + " value \"" + item + "\"");
        }
    }
    if (out.empty()) throw std::runtime_error(std::string("empty ") + what + " list");
    return out;
}

std::string joined(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

void print_report(const vcr::PipelineReport& rep) {
    std::cout << "rows=" << rep.input_rows << "\n"
              << "cols=" << rep.input_cols << "\n"
              << "distinct_cols=" << rep.distinct_cols << "\n"
              << "vc_dim=" << rep.vc_dim << "\n"
              << "vc_dim_exact=" << (rep.vc_dim_exact ? "true" : "false") << "\n"
              << "switch_size=" << rep.switch_size << "\n"
              << "ab_star_size=" << rep.ab_star_size << "\n"
              << "final_size=" << rep.final_size << "\n"
              << "pattern=" << rep.certificate.pattern.alpha << " " << rep.certificate.pattern.beta
              << " " << rep.certificate.pattern.gamma << "\n"
              << "kind=" << vcr::kind_name(rep.certificate.kind) << "\n"
              << "vacuous=" << (rep.vacuous ? "true" : "false") << "\n"
              << "cert_rows=" << joined(rep.certificate.rows) << "\n"
              << "cert_cols=" << joined(rep.certificate.cols) << "\n";
    // timings are diagnostics: stdout stays byte-stable across runs
    std::fprintf(stderr, "dedup_ms=%.3f switch_ms=%.3f ab_star_ms=%.3f abc_ms=%.3f vc_ms=%.3f total_ms=%.3f\n",
                 rep.timings.dedup_ms, rep.timings.switch_ms, rep.timings.ab_star_ms,
                 rep.timings.abc_ms, rep.timings.vc_ms, rep.timings.total_ms);
}

int run(int argc, char** argv) {
    CLI::App app{"induced matching / co-matching / half-graph extraction from binary matrices"};
    app.require_subcommand(1);

    // extract
    auto* cmd_extract = app.add_subcommand("extract", "run the full extraction pipeline on a matrix file");
    std::string extract_file, extract_out;
    std::size_t exact_threshold = 40;
    int declared_vc = -1;
    cmd_extract->add_option("matrix-file", extract_file)->required();
    cmd_extract->add_option("--exact-threshold", exact_threshold,
                            "max vertex count for exact homogeneous search");
    cmd_extract->add_option("--out", extract_out, "write the certificate to this file");
    cmd_extract->add_option("--vc-bound", declared_vc, "declared VC bound used when exact is over budget");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a certificate against a matrix file");
    std::string verify_matrix, verify_cert;
    cmd_verify->add_option("matrix-file", verify_matrix)->required();
    cmd_verify->add_option("cert-file", verify_cert)->required();

    // vcdim
    auto* cmd_vcdim = app.add_subcommand("vcdim", "exact VC-dimension of a matrix file");
    std::string vcdim_file;
    cmd_vcdim->add_option("matrix-file", vcdim_file)->required();

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "emit a generator-family matrix");
    std::string gen_spec, gen_out;
    cmd_gen->add_option("spec", gen_spec, "family:key=value,... e.g. interval:points=64,intervals=64,seed=7")
        ->required();
    cmd_gen->add_option("--out", gen_out, "write the matrix to this file");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "batch extraction over sizes x seeds, CSV output");
    std::string bench_family, bench_sizes, bench_seeds, bench_csv;
    unsigned bench_jobs = 1;
    std::size_t bench_threshold = 40;
    bool bench_wall_clock = false;
    cmd_bench->add_option("--family", bench_family, "family template; {n} and {seed} are substituted")
        ->required();
    cmd_bench->add_option("--sizes", bench_sizes, "comma-separated sizes")->required();
    cmd_bench->add_option("--seeds", bench_seeds, "comma-separated seeds")->required();
    cmd_bench->add_option("--csv", bench_csv, "write CSV here instead of stdout");
    cmd_bench->add_option("--jobs", bench_jobs, "worker threads");
    cmd_bench->add_option("--exact-threshold", bench_threshold);
    cmd_bench->add_flag("--wall-clock", bench_wall_clock,
                        "fill total_ms with wall time (breaks byte-identical reruns)");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "exact maximum tri-pattern submatrix (small inputs)");
    std::string oracle_file, oracle_pattern;
    std::size_t oracle_cap = 8;
    cmd_oracle->add_option("matrix-file", oracle_file)->required();
    cmd_oracle->add_option("--pattern", oracle_pattern, "a,b,g bits, e.g. 0,1,0")->required();
    cmd_oracle->add_option("--cap", oracle_cap, "max rows/cols accepted");

    CLI11_PARSE(app, argc, argv);

    if (cmd_extract->parsed()) {
        const vcr::BinaryMatrix a = vcr::parse_matrix(read_file(extract_file));
        vcr::PipelineConfig cfg;
        cfg.homogenize.exact_threshold = exact_threshold;
        if (declared_vc >= 0) cfg.declared_vc_bound = declared_vc;
        const vcr::PipelineReport rep = vcr::extract_structure(a, cfg);
        print_report(rep);
        if (!extract_out.empty()) write_file(extract_out, vcr::serialize_certificate(rep.certificate));
        return rep.vacuous ? 2 : 0;
    }

    if (cmd_verify->parsed()) {
        const vcr::BinaryMatrix a = vcr::parse_matrix(read_file(verify_matrix));
        const vcr::ExtractionCertificate cert = vcr::parse_certificate(read_file(verify_cert));
        const vcr::VerifyResult r = vcr::verify_certificate(a, cert);
        std::cout << "verified=" << (r.ok ? "true" : "false") << "\n";
        if (!r.ok) {
            std::cout << "reason=" << r.reason << "\n";
            if (r.rel_row >= 0) std::cout << "violation_at=" << r.rel_row << " " << r.rel_col << "\n";
        }
        return r.ok ? 0 : 1;
    }

    if (cmd_vcdim->parsed()) {
        const vcr::BinaryMatrix a = vcr::parse_matrix(read_file(vcdim_file));
        const int col = vcr::vc_dimension(vcr::columns_system(a));
        const int row = vcr::vc_dimension(vcr::rows_system(a));
        std::cout << "col_system=" << col << "\n"
                  << "row_system=" << row << "\n"
                  << "vc_dim=" << std::max(col, row) << "\n";
        return 0;
    }

    if (cmd_gen->parsed()) {
        const vcr::BinaryMatrix a = vcr::generate(vcr::GeneratorSpec::parse(gen_spec));
        const std::string text = vcr::serialize_matrix(a);
        if (gen_out.empty())
            std::cout << text;
        else
            write_file(gen_out, text);
        return 0;
    }

    if (cmd_bench->parsed()) {
        vcr::PipelineConfig cfg;
        cfg.homogenize.exact_threshold = bench_threshold;
        const auto sizes64 = parse_u64_list(bench_sizes, "size");
        const std::vector<std::size_t> sizes(sizes64.begin(), sizes64.end());
        const auto records = vcr::run_experiment(bench_family, sizes,
                                                 parse_u64_list(bench_seeds, "seed"), cfg,
                                                 bench_jobs, bench_wall_clock);
        if (bench_csv.empty()) {
            vcr::write_csv(std::cout, records);
            std::fprintf(stderr, "rng=%s rows=%zu\n", std::string(vcr::kRngAlgorithm).c_str(),
                         records.size());
        } else {
            std::ostringstream ss;
            vcr::write_csv(ss, records);
            write_file(bench_csv, ss.str());
            std::cout << "csv=" << bench_csv << "\n"
                      << "rng=" << vcr::kRngAlgorithm << "\n"
                      << "rows=" << records.size() << "\n";
        }
        return 0;
    }

    if (cmd_oracle->parsed()) {
        const vcr::BinaryMatrix a = vcr::parse_matrix(read_file(oracle_file));
        const auto bits = parse_u64_list(oracle_pattern, "pattern bit");
        if (bits.size() != 3 || bits[0] > 1 || bits[1] > 1 || bits[2] > 1)
            throw std::runtime_error("--pattern expects three bits a,b,g");
        const vcr::TriPattern p{bits[0] == 1, bits[1] == 1, bits[2] == 1};
        const auto r = vcr::oracle::max_tri_submatrix(a, p, oracle_cap, oracle_cap);
        std::cout << "size=" << r.size << "\n"
                  << "vacuous=" << (r.vacuous ? "true" : "false") << "\n"
                  << "rows=" << joined(r.sel.rows) << "\n"
                  << "cols=" << joined(r.sel.cols) << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
