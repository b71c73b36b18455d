#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcr/bitmatrix.hpp"
#include "vcr/homogenize.hpp"
#include "vcr/patterns.hpp"

namespace vcr {

struct PipelineConfig {
    HomogenizeConfig homogenize;
    /// Reported instead of the exact value when the exact computation would
    /// blow the trace budget.
    std::optional<int> declared_vc_bound;
    /// Member-trace evaluations allowed for the exact VC-dimension report;
    /// the extraction itself never needs the dimension.
    std::uint64_t vc_trace_budget = 200'000'000;
    bool compute_vc = true;
};

struct StageTimings {
    double dedup_ms = 0, switch_ms = 0, ab_star_ms = 0, abc_ms = 0, vc_ms = 0, total_ms = 0;
};

struct PipelineReport {
    std::size_t input_rows = 0, input_cols = 0, distinct_cols = 0;
    int vc_dim = -1;           ///< -1 when neither exact nor declared is available
    bool vc_dim_exact = false;
    std::size_t switch_size = 0, ab_star_size = 0, final_size = 0;
    ExtractionCertificate certificate;  ///< indices into the original matrix
    bool vacuous = false;               ///< final_size < 2; verify rejects such witnesses
    StageTimings timings;
};

/// dedup -> switch -> (alpha,beta,*) -> (alpha,beta,gamma), with all index
/// selections composed back into the original matrix. The certificate always
/// has alpha != beta and, unless vacuous, passes verify_certificate against
/// the input. Throws std::invalid_argument when the input has no columns and
/// std::logic_error naming the stage on internal postcondition failures.
PipelineReport extract_structure(const BinaryMatrix& a, const PipelineConfig& cfg = {});

/// One CSV row of a batch run.
struct ExperimentRecord {
    std::string family;
    std::size_t n_cols = 0, m_rows = 0, distinct_cols = 0;
    int vc_dim = -1;
    bool vc_dim_exact = false;
    std::size_t switch_size = 0, ab_star_size = 0, final_size = 0;
    std::string kind;        ///< empty on error
    std::uint64_t total_ms = 0;
    std::string error;       ///< empty when the cell succeeded
    std::uint64_t seed = 0;  ///< not emitted; kept for analysis
};

inline constexpr std::string_view kCsvHeader =
    "family,n_cols,m_rows,distinct_cols,vc_dim,vc_dim_exact,switch_size,ab_star_size,"
    "final_size,kind,total_ms,error";

/// Substitutes {n} and {seed} in a generator-spec template. A bare family
/// name expands to its canonical sizing (e.g. "interval" ->
/// "interval:points={n},intervals={n},seed={seed}"); a seeded family without
/// an explicit seed gets the cell seed appended.
std::string expand_family_template(const std::string& family_template, std::size_t n,
                                   std::uint64_t seed);

/// One record per (size, seed) cell, in size-major, seed-minor order
/// regardless of how many worker threads run the cells. Generator failures
/// become record-level errors and the stream continues. total_ms is filled
/// only when wall_clock is set, keeping default output byte-stable across
/// runs. Throws std::invalid_argument on an empty sizes list.
std::vector<ExperimentRecord> run_experiment(const std::string& family_template,
                                             const std::vector<std::size_t>& sizes,
                                             const std::vector<std::uint64_t>& seeds,
                                             const PipelineConfig& cfg = {}, unsigned jobs = 1,
                                             bool wall_clock = false);

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace vcr
