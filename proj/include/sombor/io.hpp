#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"

namespace sombor {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::string_view strip_comment(std::string_view s) {
  if (auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
  return trim(s);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw format_error("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace detail

// Edge-list text: first non-comment line "n m", then m lines "u v".
// '#' starts a comment. first_line is the line number of text's first line,
// used only for error messages.
inline Graph parse_edge_list(std::string_view text, std::size_t first_line = 1) {
  std::optional<std::pair<long long, long long>> header;
  std::size_t header_line = 0;
  std::vector<std::pair<long long, long long>> pairs;

  std::size_t line_no = first_line;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::strip_comment(text.substr(start, end - start));
    if (!line.empty()) {
      const auto tok = detail::split_ws(line);
      if (tok.size() != 2) throw format_error("expected two integers, got '" + std::string(line) + "'", line_no);
      const long long a = detail::parse_int(tok[0], line_no);
      const long long b = detail::parse_int(tok[1], line_no);
      if (!header) {
        if (a < 1) throw format_error("vertex count must be >= 1", line_no);
        if (b < 0) throw format_error("edge count must be >= 0", line_no);
        header = {a, b};
        header_line = line_no;
      } else {
        if (static_cast<long long>(pairs.size()) == header->second)
          throw format_error("more edges than the declared m = " + std::to_string(header->second), line_no);
        pairs.emplace_back(a, b);
      }
    }
    ++line_no;
    start = end + 1;
  }
  if (!header) throw format_error("missing 'n m' header", first_line);
  if (static_cast<long long>(pairs.size()) != header->second) {
    throw format_error("declared m = " + std::to_string(header->second) + " but found " +
                           std::to_string(pairs.size()) + " edges",
                       header_line);
  }
  try {
    return Graph::from_edge_list(static_cast<std::size_t>(header->first), pairs);
  } catch (const input_error& e) {
    throw format_error(e.what(), header_line);
  }
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

enum class CorpusFormat { graph6, edgelist };

inline CorpusFormat parse_corpus_format(std::string_view s) {
  if (s == "graph6" || s == "g6") return CorpusFormat::graph6;
  if (s == "edgelist" || s == "edge-list") return CorpusFormat::edgelist;
  throw input_error("unknown input format '" + std::string(s) + "'");
}

struct CorpusRecord {
  std::size_t line_number;
  Graph graph;
  std::string source_id;
};

struct CorpusIssue {
  std::size_t line_number;
  std::string message;
};

// Lazy reader: one graph6 record per line, or edge-list records separated by
// blank lines. In strict mode the first bad record throws format_error with
// its line; in lenient mode it is recorded in issues() and skipped, and
// graph6 padding is not checked.
class CorpusReader {
 public:
  CorpusReader(std::istream& in, CorpusFormat format, bool strict, std::string source = "stream")
      : in_(&in), format_(format), strict_(strict), source_(std::move(source)) {}

  static CorpusReader open(const std::string& path, CorpusFormat format, bool strict) {
    if (path == "-") return CorpusReader(std::cin, format, strict, "stdin");
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) throw io_error("cannot open '" + path + "'");
    CorpusReader r(*file, format, strict, path);
    r.owned_ = std::move(file);
    return r;
  }

  std::optional<CorpusRecord> next() {
    return format_ == CorpusFormat::graph6 ? next_graph6() : next_edgelist();
  }

  const std::vector<CorpusIssue>& issues() const noexcept { return issues_; }
  const std::string& source() const noexcept { return source_; }

 private:
  bool getline(std::string& line) {
    if (!std::getline(*in_, line)) {
      if (in_->bad()) throw io_error("read failure on '" + source_ + "'");
      return false;
    }
    ++line_;
    return true;
  }

  CorpusRecord make(std::size_t line, Graph g) const {
    return {line, std::move(g), source_ + ":" + std::to_string(line)};
  }

  void fail(std::size_t line, const std::string& what) {
    if (strict_) throw format_error(what, line);
    issues_.push_back({line, what});
  }

  std::optional<CorpusRecord> next_graph6() {
    std::string raw;
    while (getline(raw)) {
      auto line = detail::trim(raw);
      if (line.starts_with(graph6::header)) line.remove_prefix(graph6::header.size());
      if (line.empty()) continue;
      try {
        graph6::ParseOptions opt;
        opt.strict_padding = strict_;
        opt.strict_size = strict_;
        return make(line_, graph6::parse(line, opt));
      } catch (const error& e) {
        fail(line_, e.what());
      }
    }
    return std::nullopt;
  }

  std::optional<CorpusRecord> next_edgelist() {
    std::string raw;
    for (;;) {
      std::string block;
      std::size_t block_start = 0;
      std::size_t header_line = 0;
      while (getline(raw)) {
        if (detail::trim(raw).empty()) {
          if (block_start != 0) break;
          continue;
        }
        if (block_start == 0) block_start = line_;
        if (header_line == 0 && !detail::strip_comment(raw).empty()) header_line = line_;
        block += raw;
        block += '\n';
      }
      if (block_start == 0) return std::nullopt;
      if (header_line == 0) continue;  // comment-only block
      try {
        return make(header_line, parse_edge_list(block, block_start));
      } catch (const format_error& e) {
        if (strict_) throw;
        issues_.push_back({e.line() != 0 ? e.line() : header_line, e.what()});
      }
    }
  }

  std::istream* in_;
  std::unique_ptr<std::ifstream> owned_;
  CorpusFormat format_;
  bool strict_;
  std::string source_;
  std::size_t line_ = 0;
  std::vector<CorpusIssue> issues_;
};

// Eager convenience over CorpusReader.
inline std::vector<CorpusRecord> read_corpus(std::istream& in, CorpusFormat format, bool strict = true) {
  CorpusReader r(in, format, strict);
  std::vector<CorpusRecord> out;
  while (auto rec = r.next()) out.push_back(std::move(*rec));
  return out;
}

inline std::vector<CorpusRecord> read_corpus(const std::string& path, CorpusFormat format, bool strict = true) {
  auto r = CorpusReader::open(path, format, strict);
  std::vector<CorpusRecord> out;
  while (auto rec = r.next()) out.push_back(std::move(*rec));
  return out;
}

}  // namespace sombor
