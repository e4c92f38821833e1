#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

/// Malformed graph text. offset is a byte index into the offending line
/// (graph6) or the input (edge list); line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, int line = 0);
  std::size_t offset() const { return offset_; }
  int line() const { return line_; }
  /// Message without the position suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
  int line_;
};

/// Decodes one graph6 line (no trailing newline, optional ">>graph6<<").
Graph parse_graph6(std::string_view line);
/// Canonical graph6 encoding of g's labelled adjacency.
std::string encode_graph6(const Graph& g);

/// Edge-list text: one "u v" pair per line, or a lone "u" for an isolated
/// vertex; '#' starts a comment. Labels are non-negative integers. Sparse
/// labels are re-indexed in ascending order.
struct EdgeListGraph {
  Graph graph;
  /// labels[i] is the input label of vertex i.
  std::vector<long long> labels;
  bool relabeled = false;
};

EdgeListGraph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

enum class InputFormat { kGraph6, kEdgeList };

/// Edge lists start with a digit, '#', or whitespace; graph6 starts with a
/// printable byte in [63, 126] or '>'.
InputFormat detect_format(std::string_view text);

struct GraphRecord {
  /// 1-based input line (1 for an edge-list input).
  int line = 0;
  std::string text;
  std::optional<Graph> graph;
  /// Non-empty when graph is absent.
  std::string error;
  std::vector<long long> labels;
  bool relabeled = false;
};

/// Pulls graphs from a stream, auto-detecting the format from the first
/// non-blank byte. graph6 input yields one record per non-empty line; an
/// edge-list input yields a single record.
class GraphReader {
 public:
  explicit GraphReader(std::istream& in);
  std::optional<GraphRecord> next();

 private:
  std::istream& in_;
  bool started_ = false;
  bool done_ = false;
  InputFormat format_ = InputFormat::kGraph6;
  std::string pending_;
  bool has_pending_ = false;
  int line_ = 0;
};

}  // namespace toughham
