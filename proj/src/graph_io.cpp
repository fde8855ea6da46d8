#include "clustervd/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "clustervd/error.hpp"

namespace clustervd {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    Line line{number, {}};
    std::size_t i = first;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

template <typename Int>
Int to_int(std::string_view tok, int line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "line 1: missing header 'n m'");
  const Line& head = lines[0];
  if (head.tokens.size() != 2) fail(head.number, "header must be 'n m'");
  const int n = to_int<int>(head.tokens[0], head.number);
  const long long m = to_int<long long>(head.tokens[1], head.number);
  if (n < 0 || m < 0) fail(head.number, "negative count in header");
  if (static_cast<std::size_t>(lines.size()) < static_cast<std::size_t>(m) + 1) {
    fail(lines.back().number, "expected " + std::to_string(m) + " edge lines, file ends early");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<int, int>> seen;
  for (long long i = 1; i <= m; ++i) {
    const Line& l = lines[static_cast<std::size_t>(i)];
    if (l.tokens.size() != 2) fail(l.number, "edge line must be 'u v'");
    int u = to_int<int>(l.tokens[0], l.number);
    int v = to_int<int>(l.tokens[1], l.number);
    if (u < 0 || u >= n || v < 0 || v >= n) fail(l.number, "endpoint out of range");
    if (u == v) fail(l.number, "self-loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) fail(l.number, "duplicate edge");
    edges.push_back({u, v});
  }
  Graph g;
  try {
    g = Graph(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, std::string("edge list: ") + e.what());
  }

  bool have_w = false;
  bool have_x = false;
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "w") {
      if (have_w) fail(l.number, "duplicate weight line");
      have_w = true;
      if (l.tokens.size() != static_cast<std::size_t>(n) + 1) {
        fail(l.number, "weight line needs exactly " + std::to_string(n) + " values");
      }
      std::vector<std::int64_t> w;
      for (std::size_t k = 1; k < l.tokens.size(); ++k) {
        auto value = to_int<std::int64_t>(l.tokens[k], l.number);
        if (value < 1) fail(l.number, "weights must be >= 1");
        w.push_back(value);
      }
      g.set_weights(std::move(w));
    } else if (l.tokens[0] == "X") {
      if (have_x) fail(l.number, "duplicate bipartition line");
      have_x = true;
      std::vector<Side> parts(static_cast<std::size_t>(n), Side::Y);
      for (std::size_t k = 1; k < l.tokens.size(); ++k) {
        int v = to_int<int>(l.tokens[k], l.number);
        if (v < 0 || v >= n) fail(l.number, "bipartition vertex out of range");
        parts[static_cast<std::size_t>(v)] = Side::X;
      }
      try {
        g.set_parts(std::move(parts));
      } catch (const Error& e) {
        fail(l.number, e.what());
      }
    } else {
      fail(l.number, "unexpected line starting with '" + std::string(l.tokens[0]) + "'");
    }
  }
  return g;
}

Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (g.weights()) {
    out << 'w';
    for (auto w : *g.weights()) out << ' ' << w;
    out << '\n';
  }
  if (g.parts()) {
    out << 'X';
    for (int v = 0; v < g.order(); ++v) {
      if ((*g.parts())[static_cast<std::size_t>(v)] == Side::X) out << ' ' << v;
    }
    out << '\n';
  }
}

std::string format_graph(const Graph& g, const std::vector<std::string>& header) {
  std::ostringstream out;
  write_graph(out, g, header);
  return out.str();
}

}  // namespace clustervd
