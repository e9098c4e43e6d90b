#include "tganon/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>

namespace tganon {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(start, end - start));
    pos = end;
  }
  return fields;
}

bool parse_size(std::string_view text, std::size_t& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::size_t parse_header_field(std::string_view field, std::string_view key, std::size_t line) {
  std::size_t value = 0;
  if (field.substr(0, key.size()) != key || !parse_size(field.substr(key.size()), value)) {
    throw ParseError(line, "expected header 'n=<int> T=<int>'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

TemporalGraph read_temporal_edgelist(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<EdgeList> slices;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);

    if (!have_header) {
      if (fields.size() != 2) throw ParseError(line_no, "expected header 'n=<int> T=<int>'");
      n = parse_header_field(fields[0], "n=", line_no);
      const auto T = parse_header_field(fields[1], "T=", line_no);
      if (T == 0) throw ParseError(line_no, "T must be >= 1");
      slices.resize(T);
      have_header = true;
      continue;
    }

    std::size_t t = 0, u = 0, v = 0;
    if (fields.size() != 3 || !parse_size(fields[0], t) || !parse_size(fields[1], u) ||
        !parse_size(fields[2], v)) {
      throw ParseError(line_no, "expected record 't<TAB>u<TAB>v' with non-negative integers");
    }
    if (t >= slices.size()) throw ParseError(line_no, "slice index " + std::to_string(t) + " out of range");
    if (u >= n || v >= n) throw ParseError(line_no, "node index out of range");
    if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
    slices[t].push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
  }
  if (!have_header) throw ParseError(0, "missing header 'n=<int> T=<int>'");
  return TemporalGraph(n, std::move(slices));
}

void write_temporal_edgelist(std::ostream& out, const TemporalGraph& g) {
  out << "n=" << g.num_nodes() << " T=" << g.num_slices() << '\n';
  for (std::size_t t = 0; t < g.num_slices(); ++t) {
    for (const auto& e : g.slice(t)) out << t << '\t' << e.u << '\t' << e.v << '\n';
  }
}

TemporalGraph load_temporal_edgelist(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_temporal_edgelist(in);
}

void save_temporal_edgelist(const std::filesystem::path& path, const TemporalGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_temporal_edgelist(out, g);
}

LabeledGraph read_labeled_events(std::istream& in) {
  struct Event {
    std::size_t t;
    std::string u, v;
  };
  std::vector<Event> events;
  std::map<std::string, NodeId> index;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t T = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    std::size_t t = 0;
    if (fields.size() != 3 || !parse_size(fields[0], t)) {
      throw ParseError(line_no, "expected event 't<TAB>u<TAB>v'");
    }
    if (fields[1] == fields[2]) throw ParseError(line_no, "self-loop on '" + std::string(fields[1]) + "'");
    events.push_back({t, std::string(fields[1]), std::string(fields[2])});
    index.emplace(fields[1], 0);
    index.emplace(fields[2], 0);
    T = std::max(T, t + 1);
  }
  if (events.empty()) throw ParseError(0, "no events");

  LabeledGraph out;
  out.labels.reserve(index.size());
  for (auto& [label, id] : index) {
    id = static_cast<NodeId>(out.labels.size());
    out.labels.push_back(label);
  }
  std::vector<EdgeList> slices(T);
  for (const auto& e : events) slices[e.t].push_back(make_edge(index.at(e.u), index.at(e.v)));
  out.graph = TemporalGraph(out.labels.size(), std::move(slices));
  return out;
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  for (const auto& l : labels) out << l << '\n';
}

std::vector<std::string> read_labels(std::istream& in) {
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    labels.push_back(line);
  }
  return labels;
}

void write_degree_csv(std::ostream& out, const DegreeMatrix& d) {
  for (std::size_t i = 0; i < d.num_nodes(); ++i) {
    for (std::size_t t = 0; t < d.num_slices(); ++t) {
      if (t) out << ',';
      out << d.at(i, t);
    }
    out << '\n';
  }
}

DegreeMatrix read_degree_csv(std::istream& in) {
  std::vector<DegreeVector> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    DegreeVector row;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      const auto cell = trim(line.substr(pos, comma == std::string_view::npos ? line.size() - pos : comma - pos));
      std::size_t value = 0;
      if (!parse_size(cell, value)) throw ParseError(line_no, "expected non-negative integer");
      row.push_back(static_cast<int>(value));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError(line_no, "ragged row");
    rows.push_back(std::move(row));
  }
  try {
    return DegreeMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace tganon
