#include "tss/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace tss {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

// Splits one logical line into whitespace-separated tokens, dropping any
// '#' comment suffix.  Returns an empty vector for blank / comment lines.
std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  if (!tokens.empty() && tokens[0] == "c") tokens.clear();
  return tokens;
}

long long parse_int(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected an integer for ") + what +
                               ", got '" + tok + "'");
  return value;
}

// 1-based id from file -> 0-based, bounds-checked.
int parse_id(const std::string& tok, int line, long long limit, const char* what) {
  long long v = parse_int(tok, line, what);
  if (v < 1 || v > limit)
    throw ParseError(line, std::string(what) + " " + std::to_string(v) +
                               " out of range [1, " + std::to_string(limit) + "]");
  return static_cast<int>(v - 1);
}

struct LineReader {
  std::istream& in;
  int line_no = 0;

  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      tokens = tokenize(raw);
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

}  // namespace

TssInstance parse_tss(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;

  if (!reader.next(tok)) throw ParseError(reader.line_no + 1, "missing header");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tss")
    throw ParseError(reader.line_no, "malformed header, expected 'p tss <n> <m>'");
  long long n = parse_int(tok[2], reader.line_no, "vertex count");
  long long m = parse_int(tok[3], reader.line_no, "edge count");
  if (n < 0 || m < 0) throw ParseError(reader.line_no, "negative count in header");

  std::vector<int> thresholds(n, -1);
  std::vector<int> threshold_line(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_lines;
  std::optional<VertexSet> side1, side2;

  while (reader.next(tok)) {
    const int at = reader.line_no;
    if (tok[0] == "t") {
      if (tok.size() != 3) throw ParseError(at, "malformed threshold line");
      int v = parse_id(tok[1], at, n, "vertex id");
      long long tau = parse_int(tok[2], at, "threshold");
      if (thresholds[v] >= 0)
        throw ParseError(at, "duplicate threshold for vertex " + std::to_string(v + 1) +
                                 " (first at line " + std::to_string(threshold_line[v]) + ")");
      if (tau < 1) throw ParseError(at, "threshold must be >= 1");
      thresholds[v] = static_cast<int>(tau);
      threshold_line[v] = at;
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(at, "malformed edge line");
      int u = parse_id(tok[1], at, n, "vertex id");
      int v = parse_id(tok[2], at, n, "vertex id");
      if (u == v) throw ParseError(at, "self-loop at vertex " + std::to_string(u + 1));
      edges.emplace_back(u, v);
      edge_lines.push_back(at);
    } else if (tok[0] == "b") {
      if (tok.size() < 2 || (tok[1] != "1" && tok[1] != "2"))
        throw ParseError(at, "malformed bipartition line, expected 'b 1 ...' or 'b 2 ...'");
      std::vector<int> ids;
      for (std::size_t i = 2; i < tok.size(); ++i)
        ids.push_back(parse_id(tok[i], at, n, "vertex id"));
      auto& slot = (tok[1] == "1") ? side1 : side2;
      if (slot) throw ParseError(at, "duplicate bipartition side " + tok[1]);
      slot = VertexSet(std::move(ids));
    } else {
      throw ParseError(at, "unknown line type '" + tok[0] + "'");
    }
  }

  const int eof = reader.line_no + 1;
  for (int v = 0; v < n; ++v)
    if (thresholds[v] < 0)
      throw ParseError(eof, "missing threshold for vertex " + std::to_string(v + 1));
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(eof, "header declares " + std::to_string(m) + " edges, found " +
                              std::to_string(edges.size()));
  {  // report duplicate edges with the line of the second occurrence
    std::vector<std::pair<std::pair<int, int>, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u > v) std::swap(u, v);
      seen.push_back({{u, v}, edge_lines[i]});
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (seen[i].first == seen[i - 1].first)
        throw ParseError(seen[i].second, "duplicate edge " +
                                             std::to_string(seen[i].first.first + 1) + " " +
                                             std::to_string(seen[i].first.second + 1));
  }
  if (side1.has_value() != side2.has_value())
    throw ParseError(eof, "bipartition block must give both sides");

  std::optional<Bipartition> bip;
  if (side1) bip = Bipartition{std::move(*side1), std::move(*side2)};
  try {
    return TssInstance(static_cast<int>(n), std::move(edges), std::move(thresholds),
                       std::move(bip));
  } catch (const std::invalid_argument& e) {
    throw ParseError(eof, e.what());
  }
}

SetCoverInstance parse_setcover(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;

  if (!reader.next(tok)) throw ParseError(reader.line_no + 1, "missing header");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "sc")
    throw ParseError(reader.line_no, "malformed header, expected 'p sc <n> <m>'");
  long long n = parse_int(tok[2], reader.line_no, "ground set size");
  long long m = parse_int(tok[3], reader.line_no, "subset count");
  if (n < 0 || m < 0) throw ParseError(reader.line_no, "negative count in header");

  std::vector<std::vector<int>> subsets;
  while (reader.next(tok)) {
    const int at = reader.line_no;
    if (tok[0] != "s") throw ParseError(at, "unknown line type '" + tok[0] + "'");
    std::vector<int> subset;
    for (std::size_t i = 1; i < tok.size(); ++i)
      subset.push_back(parse_id(tok[i], at, n, "element id"));
    subsets.push_back(std::move(subset));
  }
  if (static_cast<long long>(subsets.size()) != m)
    throw ParseError(reader.line_no + 1, "header declares " + std::to_string(m) +
                                             " subsets, found " +
                                             std::to_string(subsets.size()));
  return SetCoverInstance(static_cast<int>(n), std::move(subsets));
}

SolveResult parse_result(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  SolveResult result;
  bool have_size = false, have_witness = false;

  while (reader.next(tok)) {
    const int at = reader.line_no;
    if (tok[0] == "s") {
      if (tok.size() != 2 || have_size) throw ParseError(at, "malformed size line");
      result.optimum_size = static_cast<int>(parse_int(tok[1], at, "size"));
      have_size = true;
    } else if (tok[0] == "w") {
      if (have_witness) throw ParseError(at, "duplicate witness line");
      std::vector<int> ids;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        long long v = parse_int(tok[i], at, "vertex id");
        if (v < 1) throw ParseError(at, "vertex id must be >= 1");
        ids.push_back(static_cast<int>(v - 1));
      }
      result.witness = VertexSet(std::move(ids));
      have_witness = true;
    } else if (tok[0] == "i") {
      if (tok.size() != 3) throw ParseError(at, "malformed counter line");
      result.stats[tok[1]] = parse_int(tok[2], at, "counter value");
    } else {
      throw ParseError(at, "unknown line type '" + tok[0] + "'");
    }
  }
  const int eof = reader.line_no + 1;
  if (!have_size) throw ParseError(eof, "missing size line");
  if (!have_witness) throw ParseError(eof, "missing witness line");
  return result;
}

namespace {
template <typename Fn>
auto parse_string(std::string_view text, Fn fn) {
  std::istringstream ss{std::string(text)};
  return fn(ss);
}
}  // namespace

TssInstance parse_tss(std::string_view text) {
  return parse_string(text, [](std::istream& in) { return parse_tss(in); });
}
SetCoverInstance parse_setcover(std::string_view text) {
  return parse_string(text, [](std::istream& in) { return parse_setcover(in); });
}
SolveResult parse_result(std::string_view text) {
  return parse_string(text, [](std::istream& in) { return parse_result(in); });
}

std::string write_tss(const TssInstance& instance) {
  std::ostringstream out;
  out << "p tss " << instance.vertex_count() << ' ' << instance.edge_count() << '\n';
  for (int v = 0; v < instance.vertex_count(); ++v)
    out << "t " << v + 1 << ' ' << instance.threshold(v) << '\n';
  for (const auto& [u, v] : instance.edges())
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (instance.bipartition()) {
    out << "b 1";
    for (int v : instance.bipartition()->side1) out << ' ' << v + 1;
    out << "\nb 2";
    for (int v : instance.bipartition()->side2) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

std::string write_setcover(const SetCoverInstance& instance) {
  std::ostringstream out;
  out << "p sc " << instance.ground_size() << ' ' << instance.subset_count() << '\n';
  for (const auto& subset : instance.subsets()) {
    out << 's';
    for (int e : subset) out << ' ' << e + 1;
    out << '\n';
  }
  return out.str();
}

std::string write_result(const SolveResult& result) {
  std::ostringstream out;
  out << "s " << result.optimum_size << '\n';
  out << 'w';
  for (int v : result.witness) out << ' ' << v + 1;
  out << '\n';
  for (const auto& [key, value] : result.stats)
    out << "i " << key << ' ' << value << '\n';
  return out.str();
}

std::string write_trace(const ActivationTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    out << "r " << i;
    for (int v : trace.rounds[i]) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace tss
