#pragma once

#include <string>
#include <vector>

namespace spexkm {

enum class Objective { Edges, Spectral };

inline constexpr int kOracleHardCap = 10;
inline constexpr int kOracleSpectralCap = 8;
inline constexpr int kOracleEdgesCap = 9;
inline constexpr std::size_t kWitnessCap = 100;
/// Spectral values within this distance of the maximum count as ties.
inline constexpr double kSpectralTieTolerance = 1e-9;

struct SearchOptions {
  int threads = 0;           // 0: OpenMP default
  bool allow_large = false;  // exceed the default order caps (up to the hard cap)
  int split_depth = 12;      // edge decisions fixed before handing subtrees to workers
};

struct SearchReport {
  int n = 0;
  int k = 0;              // 0 when only the matching constraint applies
  int s = 0;
  Objective objective = Objective::Edges;
  double best_value = 0.0;
  std::vector<std::string> witnesses;  // graph6, ascending, at most kWitnessCap
  long long examined = 0;              // search-tree nodes visited
  double elapsed = 0.0;                // seconds
  std::vector<std::string> warnings;
};

/// Exact max of |E| or λ over labeled {K_{k+1}, M_{s+1}}-free graphs on n vertices.
/// Include/exclude DFS over edges with infeasible includes pruned; subtrees below
/// `split_depth` run in parallel and merge deterministically.
SearchReport enumerate_extremal(int n, int k, int s, Objective objective, const SearchOptions& options = {});

/// As enumerate_extremal with only the matching constraint.
SearchReport enumerate_matching_extremal(int n, int s, Objective objective, const SearchOptions& options = {});

/// Single-threaded reference: one DFS from the root with one incumbent.
/// k == 0 drops the clique constraint.
SearchReport enumerate_extremal_serial(int n, int k, int s, Objective objective, const SearchOptions& options = {});

/// JSON document for a report; floating values carry 10 significant digits.
std::string search_report_json(const SearchReport& report);

const char* objective_name(Objective objective);

}  // namespace spexkm
