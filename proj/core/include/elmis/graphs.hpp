#pragma once

// Exhaustive labeled-graph ensembles with triangle-count observables, fitted
// by empirical likelihood or maximum entropy under a fixed observed count.
//
// Graph ids encode edges as bits: bit k is the k-th vertex pair (i, j),
// i < j, in lexicographic order (0,1), (0,2), ..., (0,N-1), (1,2), ...

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "elmis/el_core.hpp"

namespace elmis {

inline constexpr int kMinGraphVertices = 3;
inline constexpr int kMaxGraphVertices = 8;

struct GraphEnsemble {
  int vertices = 0;
  int edge_slots = 0;                   // N (N - 1) / 2
  std::vector<std::uint8_t> triangles;  // indexed by graph id

  std::size_t size() const noexcept { return triangles.size(); }
  int max_triangles() const noexcept {
    return vertices * (vertices - 1) * (vertices - 2) / 6;
  }
};

/// Vertex pair carried by edge bit `bit`.
std::pair<int, int> edge_pair(int vertices, int bit);

/// Bit index of the pair (i, j), i != j.
int edge_bit(int vertices, int i, int j);

int triangle_count(int vertices, std::uint64_t graph_id);

/// Triangle counts for all 2^(N(N-1)/2) graphs; 3 <= N <= 8.
GraphEnsemble enumerate(int vertices, unsigned threads = 1);

/// Graph id after mapping vertex v to perm[v].
std::uint64_t relabel(int vertices, std::uint64_t graph_id,
                      std::span<const int> perm);

/// multiplicity[t] = number of graphs with t triangles, t = 0..C(N,3).
std::vector<std::uint64_t> triangle_histogram(const GraphEnsemble& ensemble);

enum class FitMethod { empirical_likelihood, maximum_entropy };

struct EnsembleFit {
  FitMethod method = FitMethod::empirical_likelihood;
  double multiplier = 0.0;  // lambda for EL, kappa for maxent
  /// Per-graph weights (full path only; empty for the histogram path).
  std::vector<double> graph_weights;
  /// count_weight[t]: weight of one graph with t triangles (0 if unrealized).
  std::vector<double> count_weight;
  std::vector<std::uint64_t> multiplicity;
  /// marginal[t] = multiplicity[t] * count_weight[t].
  std::vector<double> marginal;

  double marginal_mean() const;
  double max_graph_weight() const;
};

/// Solves over all graphs individually (h_i = triangles_i - h0 for EL).
EnsembleFit fit_ensemble(const GraphEnsemble& ensemble, double h0,
                         FitMethod method, double tol = kDefaultTol);

/// Solves on the distinct triangle counts with multiplicities.
EnsembleFit fit_histogram(const GraphEnsemble& ensemble, double h0,
                          FitMethod method, double tol = kDefaultTol);

/// Number of strict local maxima of p after dropping zero entries and
/// collapsing plateaus.
int count_local_maxima(std::span<const double> p);

/// Exactly one local maximum.
bool is_unimodal(std::span<const double> p);

}  // namespace elmis
