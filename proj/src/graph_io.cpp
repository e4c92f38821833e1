#include "toughham/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace toughham {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw ParseError("graph6 line truncated", i);
  int c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 byte " + std::to_string(c) + " outside [63, 126]", i);
  }
  return c - 63;
}

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset, int line)
    : std::runtime_error(what + " (byte " + std::to_string(offset) +
                         (line > 0 ? ", line " + std::to_string(line) : std::string()) + ")"),
      detail_(what),
      offset_(offset),
      line_(line) {}

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::string_view s = line.substr(base);
  auto at = [&](std::size_t i) {
    try {
      return sixbits(s, i);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), e.offset() + base);
    }
  };

  std::size_t pos = 0;
  long n = at(0);
  pos = 1;
  if (n == 63) {
    if (s.size() > 1 && at(1) == 63) {
      // 8-byte form: 36-bit order, always beyond kMaxOrder.
      throw ParseError("graph order beyond supported maximum of " + std::to_string(kMaxOrder),
                       base + 1);
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | at(1 + k);
    pos = 4;
    if (n <= 62) throw ParseError("non-canonical multi-byte graph6 header", base);
  }
  if (n > kMaxOrder) {
    throw ParseError("graph order " + std::to_string(n) + " beyond supported maximum of " +
                         std::to_string(kMaxOrder),
                     base);
  }

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(pos) > bytes) {
    throw ParseError("trailing bytes after graph6 adjacency data", base + pos + bytes);
  }
  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      if ((at(byte) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    std::size_t last = pos + static_cast<std::size_t>(bytes - 1);
    int pad = static_cast<int>(6 - bits % 6);
    if ((at(last) & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6 data", base + last);
    }
  }
  return std::move(b).build();
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

EdgeListGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> edges;
  std::vector<long long> labels;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    long long parsed[2];
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (count == 2) throw ParseError("more than two labels on edge-list line", line_start + i, line_no);
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || value < 0 ||
          (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
        throw ParseError("expected a non-negative integer vertex label", line_start + i, line_no);
      }
      parsed[count++] = value;
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (count == 2) {
      if (parsed[0] == parsed[1]) throw ParseError("self-loop in edge list", line_start, line_no);
      edges.emplace_back(parsed[0], parsed[1]);
    }
    for (int c = 0; c < count; ++c) labels.push_back(parsed[c]);
    if (end == text.size()) break;
    line_start = end + 1;
  }

  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw ParseError("edge list has more than " + std::to_string(kMaxOrder) + " vertices", 0);
  }
  std::map<long long, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

  EdgeListGraph out;
  out.relabeled = !labels.empty() && labels.back() != static_cast<long long>(labels.size()) - 1;
  GraphBuilder b(static_cast<int>(labels.size()));
  for (auto [u, v] : edges) b.add_edge(index[u], index[v]);
  out.graph = std::move(b).build();
  out.labels = std::move(labels);
  return out;
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << v << '\n';
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

InputFormat detect_format(std::string_view text) {
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) continue;
    if (std::isdigit(c) || c == '#') return InputFormat::kEdgeList;
    return InputFormat::kGraph6;
  }
  return InputFormat::kGraph6;
}

GraphReader::GraphReader(std::istream& in) : in_(in) {}

std::optional<GraphRecord> GraphReader::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!trim(line).empty()) {
        pending_ = line;
        has_pending_ = true;
        break;
      }
    }
    if (!has_pending_) {
      done_ = true;
      return std::nullopt;
    }
    format_ = detect_format(pending_);
    if (format_ == InputFormat::kEdgeList) {
      std::ostringstream rest;
      rest << pending_ << '\n' << in_.rdbuf();
      done_ = true;
      GraphRecord rec;
      rec.line = line_;
      rec.text = rest.str();
      try {
        auto parsed = parse_edge_list(rec.text);
        rec.graph = std::move(parsed.graph);
        rec.labels = std::move(parsed.labels);
        rec.relabeled = parsed.relabeled;
      } catch (const ParseError& e) {
        rec.error = e.what();
      }
      return rec;
    }
  }

  std::string line;
  int line_no = 0;
  if (has_pending_) {
    line = std::move(pending_);
    has_pending_ = false;
    line_no = line_;
  } else {
    while (true) {
      if (!std::getline(in_, line)) {
        done_ = true;
        return std::nullopt;
      }
      ++line_;
      if (!trim(line).empty()) break;
    }
    line_no = line_;
  }
  GraphRecord rec;
  rec.line = line_no;
  rec.text = std::string(trim(line));
  try {
    rec.graph = parse_graph6(rec.text);
  } catch (const ParseError& e) {
    rec.error = ParseError("graph6: " + e.detail(), e.offset(), line_no).what();
  }
  return rec;
}

}  // namespace toughham
