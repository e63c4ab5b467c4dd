#pragma once

#include <vector>

#include "spexkm/graph.hpp"

namespace spexkm {

/// Largest order accepted by the exhaustive Tutte–Berge subset search.
inline constexpr int kTutteBergeMaxOrder = 24;

/// A barrier B such that every component of G - B is odd, together with the
/// resulting bound |B| + sum (a_i - 1)/2 on the matching number.
struct TutteBergeWitness {
  std::vector<Vertex> barrier;           // sorted
  std::vector<int> odd_component_sizes;  // components ordered by smallest member
  int value = 0;

  /// |B| + sum (a_i - 1) / 2 recomputed from the fields.
  int recomputed_value() const;
};

/// Size of a maximum matching (Edmonds' blossom algorithm).
int matching_number(const Graph& g);

/// A maximum matching as mate array: mate[v] == -1 when v is exposed.
std::vector<int> maximum_matching(const Graph& g);

/// True iff g contains K_r as a subgraph. r >= 1.
bool has_clique(const Graph& g, int r);

/// {K_{k+1}, M_{s+1}}-freeness: no (k+1)-clique and matching number <= s.
bool is_family_free(const Graph& g, int k, int s);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Minimum over all barriers B with every component of G - B odd; ties go to the
/// lexicographically smallest sorted B. Parallel over subsets; order <= 24.
TutteBergeWitness tutte_berge_min(const Graph& g);

/// Single-threaded reference for tutte_berge_min.
TutteBergeWitness tutte_berge_min_serial(const Graph& g);

/// Every value |B| + sum (a_i - 1)/2 attained by some all-odd barrier, ascending.
std::vector<int> tutte_berge_values(const Graph& g);

}  // namespace spexkm
