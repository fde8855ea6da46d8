#include "clustervd/patterns.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "clustervd/error.hpp"

namespace clustervd {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::P3: return "P3";
    case PatternKind::P4: return "P4";
    case PatternKind::Triangle: return "TRIANGLE";
    case PatternKind::ThreeP1: return "THREE_P1";
    case PatternKind::TwoP2: return "TWO_P2";
    case PatternKind::Cycle: return "CYCLE";
    case PatternKind::OddHole: return "ODD_HOLE";
  }
  return "?";
}

std::optional<PatternKind> pattern_kind_from_string(std::string_view name) {
  for (PatternKind k : {PatternKind::P3, PatternKind::P4, PatternKind::Triangle, PatternKind::ThreeP1,
                        PatternKind::TwoP2, PatternKind::Cycle, PatternKind::OddHole}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string describe(const PatternWitness& w) {
  std::string out(to_string(w.kind));
  for (int v : w.vertices) out += " " + std::to_string(v);
  return out;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::NotCograph: return "not-cograph";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NoSet: return "no-set";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::Rejected: return "rejected";
    case ErrorKind::Triangle: return "triangle";
    case ErrorKind::NotBipartite: return "not-bipartite";
    case ErrorKind::NotNormalized: return "not-normalized";
  }
  return "?";
}

namespace {

std::optional<PatternWitness> find_p3(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) return PatternWitness{PatternKind::P3, {nb[i], v, nb[j]}};
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (int w : g.neighbors(e.v)) {
      if (w > e.v && g.adjacent(e.u, w)) return PatternWitness{PatternKind::Triangle, {e.u, e.v, w}};
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_three_p1(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (int w = v + 1; w < n; ++w) {
        if (!g.adjacent(u, w) && !g.adjacent(v, w)) {
          return PatternWitness{PatternKind::ThreeP1, {u, v, w}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_two_p2(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& a = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& b = edges[j];
      if (b.u == a.u || b.u == a.v || b.v == a.u || b.v == a.v) continue;
      if (g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) ||
          g.adjacent(a.v, b.v)) {
        continue;
      }
      return PatternWitness{PatternKind::TwoP2, {a.u, a.v, b.u, b.v}};
    }
  }
  return std::nullopt;
}

// Grow induced paths start = p0 < p1, p2, ... with every vertex larger than
// the start; close when the last vertex sees the start and the cycle is odd
// with length >= 5.
class OddHoleSearch {
 public:
  explicit OddHoleSearch(const Graph& g) : g_(g), on_path_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<PatternWitness> run() {
    for (int s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      on_path_[static_cast<std::size_t>(s)] = 1;
      bool found = extend();
      on_path_[static_cast<std::size_t>(s)] = 0;
      if (found) return PatternWitness{PatternKind::OddHole, path_};
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const int start = path_.front();
    const int last = path_.back();
    for (int v : g_.neighbors(last)) {
      if (v <= start || on_path_[static_cast<std::size_t>(v)]) continue;
      // v may touch only `last` and, when closing, the start
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (g_.adjacent(v, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      bool sees_start = path_.size() >= 2 && g_.adjacent(v, start);
      path_.push_back(v);
      if (sees_start) {
        if (path_.size() >= 5 && path_.size() % 2 == 1) return true;
        path_.pop_back();
        continue;
      }
      on_path_[static_cast<std::size_t>(v)] = 1;
      if (extend()) return true;
      on_path_[static_cast<std::size_t>(v)] = 0;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> on_path_;
  std::vector<int> path_;
};

}  // namespace

std::optional<PatternWitness> find_induced_p4(const Graph& g, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int v : vertices) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (int b : sorted) {
    for (int c : g.neighbors(b)) {
      if (c <= b || !in[static_cast<std::size_t>(c)]) continue;
      for (int a : g.neighbors(b)) {
        if (a == c || !in[static_cast<std::size_t>(a)] || g.adjacent(a, c)) continue;
        for (int d : g.neighbors(c)) {
          if (d == b || d == a || !in[static_cast<std::size_t>(d)]) continue;
          if (g.adjacent(d, b) || g.adjacent(d, a)) continue;
          return PatternWitness{PatternKind::P4, {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_induced(const Graph& g, PatternKind kind) {
  switch (kind) {
    case PatternKind::P3: return find_p3(g);
    case PatternKind::P4: {
      std::vector<int> all(static_cast<std::size_t>(g.order()));
      for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
      return find_induced_p4(g, all);
    }
    case PatternKind::Triangle: return find_triangle(g);
    case PatternKind::ThreeP1: return find_three_p1(g);
    case PatternKind::TwoP2: return find_two_p2(g);
    case PatternKind::Cycle: {
      auto cycle = shortest_cycle(g);
      if (cycle.empty()) return std::nullopt;
      return PatternWitness{PatternKind::Cycle, std::move(cycle)};
    }
    case PatternKind::OddHole: return OddHoleSearch(g).run();
  }
  return std::nullopt;
}

bool witness_is_valid(const Graph& g, const PatternWitness& w) {
  const auto& vs = w.vertices;
  const std::size_t k = vs.size();
  std::set<int> distinct(vs.begin(), vs.end());
  if (distinct.size() != k) return false;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) return false;
  }
  auto expected = [&](std::size_t i, std::size_t j) -> bool {
    switch (w.kind) {
      case PatternKind::P3:
      case PatternKind::P4: return j == i + 1;
      case PatternKind::Triangle: return true;
      case PatternKind::ThreeP1: return false;
      case PatternKind::TwoP2: return (i == 0 && j == 1) || (i == 2 && j == 3);
      case PatternKind::Cycle:
      case PatternKind::OddHole: return j == i + 1 || (i == 0 && j == k - 1);
    }
    return false;
  };
  switch (w.kind) {
    case PatternKind::P3:
    case PatternKind::Triangle:
    case PatternKind::ThreeP1:
      if (k != 3) return false;
      break;
    case PatternKind::P4:
    case PatternKind::TwoP2:
      if (k != 4) return false;
      break;
    case PatternKind::Cycle:
      if (k < 3) return false;
      break;
    case PatternKind::OddHole:
      if (k < 5 || k % 2 == 0) return false;
      break;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.adjacent(vs[i], vs[j]) != expected(i, j)) return false;
    }
  }
  return true;
}

}  // namespace clustervd
