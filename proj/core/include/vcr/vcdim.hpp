#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "vcr/bitmatrix.hpp"
#include "vcr/setsystem.hpp"

namespace vcr {

class SimpleGraph;

/// True iff the family realizes all 2^|subset| traces on the subset.
/// Indices must be in range and duplicate-free.
bool is_shattered(const SetSystem& s, const std::vector<std::size_t>& subset);

/// Exact VC-dimension: the size of the largest shattered subset.
///
/// Subsets are enumerated level by level in colex order; level k+1 keeps
/// only candidates whose k-subsets were all shattered, which is sound
/// because shattering is downward closed. Convention: 0 for the empty
/// family (nothing is shattered, not even the empty set).
int vc_dimension(const SetSystem& s);

/// Same computation, but gives up once more than max_trace_evals
/// member-trace evaluations were spent.
std::optional<int> vc_dimension_budgeted(const SetSystem& s, std::uint64_t max_trace_evals);

/// Max of the column-system and row-system VC-dimensions.
int matrix_vc_dimension(const BinaryMatrix& a);
std::optional<int> matrix_vc_dimension_budgeted(const BinaryMatrix& a, std::uint64_t max_trace_evals);

/// VC-dimension of the neighborhood system of a simple graph.
int graph_vc_dimension(const SimpleGraph& g);

inline constexpr std::uint64_t kDefaultGrowthBudget = 2'000'000;

/// Exact growth function pi_S(n): max trace count over all n-subsets of the
/// ground set. Throws std::invalid_argument when C(N, n) exceeds
/// max_subsets; use sampled_growth_lower_bound instead at that scale.
std::uint64_t growth_function(const SetSystem& s, std::size_t n,
                              std::uint64_t max_subsets = kDefaultGrowthBudget);

/// Max trace count over `trials` uniformly sampled n-subsets; a lower bound
/// on pi_S(n), deterministic given the seed. trials >= 1.
std::uint64_t sampled_growth_lower_bound(const SetSystem& s, std::size_t n, std::size_t trials,
                                         std::uint64_t seed);

/// pi_S tabulated for n = 0..up_to.
struct GrowthProfile {
    std::map<std::size_t, std::uint64_t> values;
};

GrowthProfile growth_profile(const SetSystem& s, std::size_t up_to,
                             std::uint64_t max_subsets = kDefaultGrowthBudget);

/// Exact C(n, k); throws std::overflow_error when the value exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Sauer-Shelah bound Phi_d(n) = sum_{i=0}^{d} C(n, i); equals 2^n for
/// d >= n. Checked arithmetic, throws std::overflow_error.
std::uint64_t phi(int d, std::uint64_t n);

}  // namespace vcr
