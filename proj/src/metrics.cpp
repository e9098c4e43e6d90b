#include "tganon/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "tganon/parallel.hpp"

namespace tganon {
namespace {

std::vector<std::vector<NodeId>> adjacency(std::span<const Edge> edges, std::size_t n) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::size_t common_count(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

double temporal_correlation(const TemporalGraph& g, IsolatedTerms isolated) {
  if (g.num_slices() < 2) throw std::invalid_argument("temporal_correlation needs T >= 2");
  const std::size_t n = g.num_nodes();
  double total = 0.0;
  std::size_t terms = 0;
  auto prev = adjacency(g.slice(0), n);
  for (std::size_t t = 0; t + 1 < g.num_slices(); ++t) {
    auto next = adjacency(g.slice(t + 1), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (prev[i].empty() || next[i].empty()) {
        if (isolated == IsolatedTerms::count_as_zero) ++terms;
        continue;
      }
      const double denom = std::sqrt(static_cast<double>(prev[i].size()) * static_cast<double>(next[i].size()));
      total += static_cast<double>(common_count(prev[i], next[i])) / denom;
      ++terms;
    }
    prev = std::move(next);
  }
  return terms == 0 ? 0.0 : total / static_cast<double>(terms);
}

std::vector<double> pagerank(std::span<const Edge> edges, std::size_t num_nodes, double damping, double tol) {
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("pagerank: damping must be in (0, 1)");
  if (!(tol > 0.0)) throw std::invalid_argument("pagerank: tol must be > 0");
  if (num_nodes == 0) return {};

  const auto adj = adjacency(edges, num_nodes);
  const double n = static_cast<double>(num_nodes);
  std::vector<double> rank(num_nodes, 1.0 / n), next(num_nodes);

  for (std::size_t iter = 0; iter < kPageRankMaxIterations; ++iter) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < num_nodes; ++i) {
      if (adj[i].empty()) dangling += rank[i];
    }
    const double base = (1.0 - damping) / n + damping * dangling / n;
    std::fill(next.begin(), next.end(), base);
    for (std::size_t i = 0; i < num_nodes; ++i) {
      if (adj[i].empty()) continue;
      const double share = damping * rank[i] / static_cast<double>(adj[i].size());
      for (auto j : adj[i]) next[j] += share;
    }
    double change = 0.0;
    for (std::size_t i = 0; i < num_nodes; ++i) change += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (change < tol) return rank;
  }
  throw std::runtime_error("pagerank did not converge");
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine_similarity: length mismatch");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine_similarity: zero vector");
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

std::vector<SliceUtility> utility_report(const TemporalGraph& original, const TemporalGraph& anonymized,
                                         double damping, std::size_t threads) {
  if (original.num_nodes() != anonymized.num_nodes() || original.num_slices() != anonymized.num_slices()) {
    throw std::invalid_argument("utility_report: graphs differ in shape");
  }
  const std::size_t n = original.num_nodes();
  std::vector<SliceUtility> rows(original.num_slices());
  parallel_for(rows.size(), threads, [&](std::size_t t) {
    SliceUtility& row = rows[t];
    row.slice = t;
    row.active_edges = original.slice(t).size();
    row.edge_edits = edge_edit_count(original.slice(t), anonymized.slice(t));
    const auto a = slice_degrees(original.slice(t), n);
    const auto b = slice_degrees(anonymized.slice(t), n);
    for (std::size_t i = 0; i < n; ++i) row.l1_degree_dist += std::abs(a[i] - b[i]);
    row.pr_cosine = n == 0 ? 1.0
                           : cosine_similarity(pagerank(original.slice(t), n, damping),
                                               pagerank(anonymized.slice(t), n, damping));
  });
  return rows;
}

void write_utility_csv(std::ostream& out, const std::vector<SliceUtility>& rows) {
  out << "slice,active_edges,pr_cosine,edge_edits,l1_degree_dist\n";
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : rows) {
    out << r.slice << ',' << r.active_edges << ',' << r.pr_cosine << ',' << r.edge_edits << ','
        << r.l1_degree_dist << '\n';
  }
  out.precision(old_precision);
}

}  // namespace tganon
