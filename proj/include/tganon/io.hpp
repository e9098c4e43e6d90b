#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tganon/graph.hpp"

namespace tganon {

/// Raised for malformed input; `line()` is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Temporal edge-list format:
//
//   # comment
//   n=<nodes> T=<slices>
//   t<TAB>u<TAB>v
//
// Indices are 0-based. Duplicate records and reversed endpoints collapse to
// one edge.
TemporalGraph read_temporal_edgelist(std::istream& in);
void write_temporal_edgelist(std::ostream& out, const TemporalGraph& g);
TemporalGraph load_temporal_edgelist(const std::filesystem::path& path);
void save_temporal_edgelist(const std::filesystem::path& path, const TemporalGraph& g);

/// Event stream with arbitrary string node labels: lines `t u v` where t is a
/// non-negative slice index. Labels are mapped to dense indices in
/// lexicographic order; T is one past the largest slice index seen.
struct LabeledGraph {
  TemporalGraph graph;
  std::vector<std::string> labels;
};
LabeledGraph read_labeled_events(std::istream& in);

/// Sidecar label table: one label per line, line i naming node i.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);
std::vector<std::string> read_labels(std::istream& in);

/// One row per node, T comma-separated integers, no header.
void write_degree_csv(std::ostream& out, const DegreeMatrix& d);
DegreeMatrix read_degree_csv(std::istream& in);

}  // namespace tganon
