#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lachi/graph.hpp"
#include "lachi/labeling.hpp"

namespace lachi {

inline constexpr std::size_t kDefaultEdgeLimit = 10;
inline constexpr std::size_t kHardEdgeLimit = 11;

enum class SolveMethod { Exhaustive, CertifiedByPendantBound };
std::string_view to_string(SolveMethod method);

struct SolverResult {
  std::size_t chi_la = 0;
  EdgeLabeling witness;
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::Exhaustive;
  /// max(2, k + 1, chi(G)); the search stops as soon as it is met.
  std::size_t lower_bound = 0;
};

struct SolverOptions {
  std::size_t edge_limit = kDefaultEdgeLimit;
  /// 0 selects std::thread::hardware_concurrency().
  std::size_t jobs = 1;
};

/// Static order in which the search assigns labels: breadth-first over the
/// line graph from edge 0, so that vertices close early.
std::vector<EdgeIndex> search_edge_order(const Graph& g);

/// max(2, k + 1) for a graph with k pendants; needs order >= 3.
std::size_t pendant_lower_bound(const Graph& g);

/// Exact chi_la by depth-first bijection search.
///
/// The space is split into q shards by the label given to the first edge of
/// search_edge_order(); shards share an atomic best color count used to cut
/// branches whose completed vertices already use that many colors. The value
/// and the exhaustive flag do not depend on jobs. The witness is the first
/// optimum found by the lowest-numbered shard that reached the optimum, so
/// it can vary with scheduling.
///
/// Throws TooLarge (q above edge_limit or kHardEdgeLimit), Disconnected,
/// TooSmall.
SolverResult solve_chi_la(const Graph& g, const SolverOptions& options = {});

struct ColorTarget {
  Color color;
  std::size_t multiplicity;
};

/// Any local antimagic labeling whose color multiset equals target, or
/// nullopt after the full search. Throws TooLarge like solve_chi_la.
std::optional<EdgeLabeling> find_labeling_with_profile(const Graph& g,
                                                       const std::vector<ColorTarget>& target,
                                                       std::size_t edge_limit = kDefaultEdgeLimit);

/// chi_la = k + 1 when f is local antimagic with exactly k + 1 colors
/// (k = pendant count); nullopt otherwise. Throws NotLocalAntimagic.
std::optional<SolverResult> certify(const Graph& g, const EdgeLabeling& f);

}  // namespace lachi
