#include "tganon/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace tganon {

Edge make_edge(NodeId a, NodeId b) {
  if (a == b) {
    throw std::invalid_argument("self-loop on node " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

TemporalGraph::TemporalGraph(std::size_t num_nodes, std::vector<EdgeList> slices)
    : num_nodes_(num_nodes), slices_(std::move(slices)) {
  if (slices_.empty()) {
    throw std::invalid_argument("a temporal graph needs at least one slice");
  }
  for (auto& slice : slices_) {
    for (auto& e : slice) {
      if (e.u >= num_nodes_ || e.v >= num_nodes_) {
        throw std::invalid_argument("edge endpoint out of range");
      }
      e = make_edge(e.u, e.v);
    }
    std::sort(slice.begin(), slice.end());
    slice.erase(std::unique(slice.begin(), slice.end()), slice.end());
  }
}

TemporalGraph TemporalGraph::empty(std::size_t num_nodes, std::size_t num_slices) {
  return TemporalGraph(num_nodes, std::vector<EdgeList>(num_slices));
}

std::size_t TemporalGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& s : slices_) total += s.size();
  return total;
}

DegreeMatrix::DegreeMatrix(std::size_t num_nodes, std::size_t num_slices)
    : num_nodes_(num_nodes), num_slices_(num_slices), values_(num_nodes * num_slices, 0) {}

DegreeMatrix::DegreeMatrix(std::size_t num_nodes, std::size_t num_slices, std::vector<int> row_major)
    : num_nodes_(num_nodes), num_slices_(num_slices), values_(std::move(row_major)) {
  if (values_.size() != num_nodes_ * num_slices_) {
    throw std::invalid_argument("degree matrix size mismatch");
  }
  for (int v : values_) {
    if (v < 0 || static_cast<std::size_t>(v) + 1 > std::max<std::size_t>(num_nodes_, 1)) {
      throw std::invalid_argument("degree " + std::to_string(v) + " outside [0, n-1]");
    }
  }
}

DegreeMatrix DegreeMatrix::from_rows(const std::vector<DegreeVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<int> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged degree rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return DegreeMatrix(rows.size(), cols, std::move(flat));
}

void DegreeMatrix::set(std::size_t node, std::size_t t, int value) {
  if (value < 0 || static_cast<std::size_t>(value) + 1 > std::max<std::size_t>(num_nodes_, 1)) {
    throw std::invalid_argument("degree " + std::to_string(value) + " outside [0, n-1]");
  }
  values_.at(node * num_slices_ + t) = value;
}

DegreeVector DegreeMatrix::column(std::size_t t) const {
  DegreeVector col(num_nodes_);
  for (std::size_t i = 0; i < num_nodes_; ++i) col[i] = at(i, t);
  return col;
}

std::vector<DegreeVector> DegreeMatrix::rows() const {
  std::vector<DegreeVector> out;
  out.reserve(num_nodes_);
  for (std::size_t i = 0; i < num_nodes_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

AnonymityLevel::AnonymityLevel(std::size_t k) : k_(k) {
  if (k == 0) throw std::invalid_argument("anonymity level k must be >= 1");
}

DegreeVector slice_degrees(std::span<const Edge> edges, std::size_t num_nodes) {
  DegreeVector deg(num_nodes, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

DegreeMatrix degree_matrix(const TemporalGraph& g) {
  DegreeMatrix d(g.num_nodes(), g.num_slices());
  for (std::size_t t = 0; t < g.num_slices(); ++t) {
    const auto deg = slice_degrees(g.slice(t), g.num_nodes());
    for (std::size_t i = 0; i < g.num_nodes(); ++i) d.set(i, t, deg[i]);
  }
  return d;
}

bool is_k_anonymous(const DegreeMatrix& d, AnonymityLevel k) {
  if (k.value() <= 1) return true;
  std::map<DegreeVector, std::size_t> counts;
  for (std::size_t i = 0; i < d.num_nodes(); ++i) {
    auto r = d.row(i);
    ++counts[DegreeVector(r.begin(), r.end())];
  }
  return std::all_of(counts.begin(), counts.end(),
                     [&](const auto& kv) { return kv.second >= k.value(); });
}

std::size_t edge_edit_count(std::span<const Edge> a, std::span<const Edge> b) {
  return a.size() + b.size() - 2 * edge_overlap(a, b);
}

std::size_t edge_edit_count(const TemporalGraph& g, const TemporalGraph& h) {
  if (g.num_nodes() != h.num_nodes() || g.num_slices() != h.num_slices()) {
    throw std::invalid_argument("edge_edit_count: graphs differ in shape");
  }
  std::size_t total = 0;
  for (std::size_t t = 0; t < g.num_slices(); ++t) total += edge_edit_count(g.slice(t), h.slice(t));
  return total;
}

std::size_t edge_overlap(std::span<const Edge> a, std::span<const Edge> b) {
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

std::int64_t degree_l1_distance(const DegreeMatrix& a, const DegreeMatrix& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_slices() != b.num_slices()) {
    throw std::invalid_argument("degree matrices differ in shape");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.num_nodes(); ++i) {
    for (std::size_t t = 0; t < a.num_slices(); ++t) total += std::abs(a.at(i, t) - b.at(i, t));
  }
  return total;
}

double degree_distance(const DegreeMatrix& a, const DegreeMatrix& b) {
  return 0.5 * static_cast<double>(degree_l1_distance(a, b));
}

TemporalGraph rebucket(const TemporalGraph& g, std::size_t width) {
  if (width == 0) throw std::invalid_argument("bucket width must be >= 1");
  const std::size_t buckets = (g.num_slices() + width - 1) / width;
  std::vector<EdgeList> slices(buckets);
  for (std::size_t t = 0; t < g.num_slices(); ++t) {
    auto& dst = slices[t / width];
    dst.insert(dst.end(), g.slice(t).begin(), g.slice(t).end());
  }
  return TemporalGraph(g.num_nodes(), std::move(slices));
}

}  // namespace tganon
