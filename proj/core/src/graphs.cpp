#include "elmis/graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "elmis/error.hpp"
#include "elmis/maxent.hpp"
#include "elmis/parallel.hpp"

namespace elmis {

namespace {

void require_vertices(int vertices) {
  if (vertices < kMinGraphVertices || vertices > kMaxGraphVertices) {
    throw InvalidInput("vertex count must be between 3 and 8");
  }
}

int slots(int vertices) { return vertices * (vertices - 1) / 2; }

// adjacency[v] has bit u set when {u, v} is an edge.
std::array<std::uint32_t, kMaxGraphVertices> adjacency(int vertices,
                                                       std::uint64_t id) {
  std::array<std::uint32_t, kMaxGraphVertices> adj{};
  int bit = 0;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j, ++bit) {
      if ((id >> bit) & 1u) {
        adj[static_cast<std::size_t>(i)] |= 1u << j;
        adj[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
  }
  return adj;
}

void require_h0(const GraphEnsemble& e, double h0) {
  if (e.triangles.empty()) throw InvalidInput("ensemble is empty");
  if (!(h0 > 0.0 && h0 < e.max_triangles())) {
    throw InfeasibleError("h0 must lie strictly between 0 and C(N,3)");
  }
}

EnsembleFit from_counts(const GraphEnsemble& e, FitMethod method) {
  EnsembleFit fit;
  fit.method = method;
  fit.multiplicity = triangle_histogram(e);
  fit.count_weight.assign(fit.multiplicity.size(), 0.0);
  fit.marginal.assign(fit.multiplicity.size(), 0.0);
  return fit;
}

}  // namespace

std::pair<int, int> edge_pair(int vertices, int bit) {
  require_vertices(vertices);
  if (bit < 0 || bit >= slots(vertices)) throw InvalidInput("edge bit out of range");
  int k = 0;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j, ++k) {
      if (k == bit) return {i, j};
    }
  }
  return {-1, -1};
}

int edge_bit(int vertices, int i, int j) {
  require_vertices(vertices);
  if (i == j || i < 0 || j < 0 || i >= vertices || j >= vertices) {
    throw InvalidInput("invalid vertex pair");
  }
  if (i > j) std::swap(i, j);
  // Pairs before row i: sum_{r<i} (N - 1 - r).
  return i * (2 * vertices - i - 1) / 2 + (j - i - 1);
}

int triangle_count(int vertices, std::uint64_t graph_id) {
  require_vertices(vertices);
  const auto adj = adjacency(vertices, graph_id);
  int count = 0;
  for (int i = 0; i < vertices; ++i) {
    const std::uint32_t ai = adj[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < vertices; ++j) {
      if (!((ai >> j) & 1u)) continue;
      const std::uint32_t above = ~((2u << j) - 1u);
      count += std::popcount(ai & adj[static_cast<std::size_t>(j)] & above);
    }
  }
  return count;
}

GraphEnsemble enumerate(int vertices, unsigned threads) {
  require_vertices(vertices);
  GraphEnsemble e;
  e.vertices = vertices;
  e.edge_slots = slots(vertices);
  const std::size_t total = std::size_t{1} << e.edge_slots;
  e.triangles.resize(total);
  constexpr std::size_t kBlock = 1 << 14;
  const std::size_t blocks = (total + kBlock - 1) / kBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t end = std::min(total, (b + 1) * kBlock);
    for (std::size_t id = b * kBlock; id < end; ++id) {
      e.triangles[id] = static_cast<std::uint8_t>(triangle_count(vertices, id));
    }
  });
  return e;
}

std::uint64_t relabel(int vertices, std::uint64_t graph_id,
                      std::span<const int> perm) {
  require_vertices(vertices);
  if (perm.size() != static_cast<std::size_t>(vertices)) {
    throw InvalidInput("permutation length must equal the vertex count");
  }
  std::uint64_t out = 0;
  int bit = 0;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j, ++bit) {
      if ((graph_id >> bit) & 1u) {
        out |= std::uint64_t{1} << edge_bit(vertices, perm[static_cast<std::size_t>(i)],
                                            perm[static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> triangle_histogram(const GraphEnsemble& ensemble) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(ensemble.max_triangles()) + 1, 0);
  for (auto t : ensemble.triangles) ++hist[t];
  return hist;
}

double EnsembleFit::marginal_mean() const {
  double m = 0.0;
  for (std::size_t t = 0; t < marginal.size(); ++t) m += static_cast<double>(t) * marginal[t];
  return m;
}

double EnsembleFit::max_graph_weight() const {
  double m = 0.0;
  for (std::size_t t = 0; t < count_weight.size(); ++t) {
    if (multiplicity[t] > 0) m = std::max(m, count_weight[t]);
  }
  return m;
}

EnsembleFit fit_ensemble(const GraphEnsemble& ensemble, double h0,
                         FitMethod method, double tol) {
  require_h0(ensemble, h0);
  EnsembleFit fit = from_counts(ensemble, method);
  std::vector<double> h(ensemble.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = static_cast<double>(ensemble.triangles[i]);

  if (method == FitMethod::empirical_likelihood) {
    for (double& x : h) x -= h0;
    const auto sol = solve(Sample(std::move(h)), tol);
    if (!sol.feasible) throw InfeasibleError("triangle counts do not straddle h0");
    fit.multiplier = sol.lambda_hat;
    fit.graph_weights = sol.weights;
  } else {
    auto sol = solve_maxent(Sample(std::move(h)), h0, tol);
    fit.multiplier = sol.kappa;
    fit.graph_weights = std::move(sol.weights);
  }
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const auto t = ensemble.triangles[i];
    fit.marginal[t] += fit.graph_weights[i];
    fit.count_weight[t] = fit.graph_weights[i];
  }
  return fit;
}

EnsembleFit fit_histogram(const GraphEnsemble& ensemble, double h0,
                          FitMethod method, double tol) {
  require_h0(ensemble, h0);
  EnsembleFit fit = from_counts(ensemble, method);
  std::vector<double> values;
  std::vector<double> counts;
  std::vector<std::size_t> index;
  for (std::size_t t = 0; t < fit.multiplicity.size(); ++t) {
    if (fit.multiplicity[t] == 0) continue;
    values.push_back(static_cast<double>(t));
    counts.push_back(static_cast<double>(fit.multiplicity[t]));
    index.push_back(t);
  }
  std::vector<double> unit;
  if (method == FitMethod::empirical_likelihood) {
    for (double& v : values) v -= h0;
    const auto sol = solve_weighted(values, counts, tol);
    if (!sol.feasible) throw InfeasibleError("triangle counts do not straddle h0");
    fit.multiplier = sol.lambda_hat;
    unit = sol.unit_weights;
  } else {
    const auto sol = solve_maxent_weighted(values, counts, h0, tol);
    fit.multiplier = sol.kappa;
    unit = sol.weights;
  }
  for (std::size_t k = 0; k < index.size(); ++k) {
    fit.count_weight[index[k]] = unit[k];
    fit.marginal[index[k]] = counts[k] * unit[k];
  }
  return fit;
}

int count_local_maxima(std::span<const double> p) {
  std::vector<double> v;
  for (double x : p) {
    if (x > 0.0 && (v.empty() || v.back() != x)) v.push_back(x);
  }
  int peaks = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool left = i == 0 || v[i] > v[i - 1];
    const bool right = i + 1 == v.size() || v[i] > v[i + 1];
    if (left && right) ++peaks;
  }
  return peaks;
}

bool is_unimodal(std::span<const double> p) { return count_local_maxima(p) == 1; }

}  // namespace elmis
