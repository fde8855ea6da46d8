#include "clustervd/cotree.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <utility>

#include "clustervd/error.hpp"
#include "clustervd/patterns.hpp"

namespace clustervd {

namespace {

[[noreturn]] void structure(const std::string& what) { throw Error(ErrorKind::Structure, what); }

void check_leaf_set(const std::vector<int>& leaves) {
  std::vector<char> seen(leaves.size(), 0);
  for (int v : leaves) {
    if (v < 0 || static_cast<std::size_t>(v) >= leaves.size()) {
      structure("leaf " + std::to_string(v) + " outside 0.." + std::to_string(leaves.size() - 1));
    }
    if (seen[static_cast<std::size_t>(v)]) structure("leaf " + std::to_string(v) + " appears twice");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Cotree::Cotree(std::vector<CotreeNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  if (nodes_.empty()) structure("empty cotree");
  if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size()) structure("root out of range");
  std::vector<char> visited(nodes_.size(), 0);
  std::vector<int> leaves;
  std::vector<int> stack{root_};
  visited[static_cast<std::size_t>(root_)] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const CotreeNode& nd = nodes_[static_cast<std::size_t>(i)];
    if (nd.label == NodeLabel::Leaf) {
      if (!nd.children.empty()) structure("leaf node with children");
      leaves.push_back(nd.vertex);
      continue;
    }
    if (nd.children.size() < 2) {
      structure("internal node " + std::to_string(i) + " has " + std::to_string(nd.children.size()) +
                " child(ren); at least two required");
    }
    for (int c : nd.children) {
      if (c < 0 || static_cast<std::size_t>(c) >= nodes_.size()) structure("child index out of range");
      if (visited[static_cast<std::size_t>(c)]) structure("node reached twice; not a tree");
      if (nodes_[static_cast<std::size_t>(c)].label == nd.label) {
        structure("adjacent internal nodes share a label");
      }
      visited[static_cast<std::size_t>(c)] = 1;
      stack.push_back(c);
    }
  }
  if (std::find(visited.begin(), visited.end(), 0) != visited.end()) structure("unreachable node");
  check_leaf_set(leaves);
  vertex_count_ = static_cast<int>(leaves.size());
}

Cotree Cotree::complemented() const {
  std::vector<CotreeNode> flipped = nodes_;
  for (auto& nd : flipped) {
    if (nd.label == NodeLabel::Union) {
      nd.label = NodeLabel::Join;
    } else if (nd.label == NodeLabel::Join) {
      nd.label = NodeLabel::Union;
    }
  }
  return Cotree(std::move(flipped), root_);
}

BinaryCotree::BinaryCotree(std::vector<BinaryNode> nodes, int root)
    : nodes_(std::move(nodes)), root_(root) {
  if (nodes_.empty()) structure("empty cotree");
  if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size()) structure("root out of range");
  std::vector<char> visited(nodes_.size(), 0);
  std::vector<int> leaves;
  std::vector<int> stack{root_};
  visited[static_cast<std::size_t>(root_)] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const BinaryNode& nd = nodes_[static_cast<std::size_t>(i)];
    if (nd.label == NodeLabel::Leaf) {
      leaves.push_back(nd.vertex);
      continue;
    }
    for (int c : {nd.left, nd.right}) {
      if (c < 0 || static_cast<std::size_t>(c) >= nodes_.size()) structure("child index out of range");
      if (visited[static_cast<std::size_t>(c)]) structure("node reached twice; not a tree");
      visited[static_cast<std::size_t>(c)] = 1;
      stack.push_back(c);
    }
  }
  if (std::find(visited.begin(), visited.end(), 0) != visited.end()) structure("unreachable node");
  check_leaf_set(leaves);
  vertex_count_ = static_cast<int>(leaves.size());
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(const Graph& g)
      : g_(g), in_(static_cast<std::size_t>(g.order()), 0), mark_(static_cast<std::size_t>(g.order()), 0) {}

  // Returns the node index, or -1 after storing a P4 witness.
  int run(std::vector<int> verts) {
    if (verts.size() == 1) {
      nodes_.push_back({NodeLabel::Leaf, verts[0], {}});
      return static_cast<int>(nodes_.size()) - 1;
    }
    auto parts = split(verts, false);
    NodeLabel label = NodeLabel::Union;
    if (parts.size() == 1) {
      parts = split(verts, true);
      label = NodeLabel::Join;
      if (parts.size() == 1) {
        witness_ = find_induced_p4(g_, verts);
        return -1;
      }
    }
    int self = static_cast<int>(nodes_.size());
    nodes_.push_back({label, -1, {}});
    for (auto& part : parts) {
      int child = run(std::move(part));
      if (child < 0) return -1;
      nodes_[static_cast<std::size_t>(self)].children.push_back(child);
    }
    return self;
  }

  std::vector<CotreeNode> take_nodes() { return std::move(nodes_); }
  std::optional<PatternWitness> witness() const { return witness_; }

 private:
  // Components of g[verts] (or of its complement), seeded in increasing
  // vertex order so they come out sorted by smallest vertex.
  std::vector<std::vector<int>> split(const std::vector<int>& verts, bool in_complement) {
    ++epoch_;
    for (int v : verts) in_[static_cast<std::size_t>(v)] = epoch_;
    std::vector<std::vector<int>> parts;
    if (!in_complement) {
      int done = epoch_ + 1;
      ++epoch_;
      for (int s : verts) {
        if (in_[static_cast<std::size_t>(s)] == done) continue;
        std::vector<int> comp{s};
        in_[static_cast<std::size_t>(s)] = done;
        for (std::size_t h = 0; h < comp.size(); ++h) {
          for (int w : g_.neighbors(comp[h])) {
            if (in_[static_cast<std::size_t>(w)] == done - 1) {
              in_[static_cast<std::size_t>(w)] = done;
              comp.push_back(w);
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        parts.push_back(std::move(comp));
      }
      return parts;
    }
    std::vector<int> unvisited = verts;  // sorted
    while (!unvisited.empty()) {
      std::vector<int> comp{unvisited.front()};
      unvisited.erase(unvisited.begin());
      for (std::size_t h = 0; h < comp.size() && !unvisited.empty(); ++h) {
        ++stamp_;
        for (int w : g_.neighbors(comp[h])) mark_[static_cast<std::size_t>(w)] = stamp_;
        std::vector<int> keep;
        for (int w : unvisited) {
          if (mark_[static_cast<std::size_t>(w)] == stamp_) {
            keep.push_back(w);
          } else {
            comp.push_back(w);
          }
        }
        unvisited.swap(keep);
      }
      std::sort(comp.begin(), comp.end());
      parts.push_back(std::move(comp));
    }
    return parts;
  }

  const Graph& g_;
  std::vector<int> in_;
  std::vector<int> mark_;
  int epoch_ = 0;
  int stamp_ = 0;
  std::vector<CotreeNode> nodes_;
  std::optional<PatternWitness> witness_;
};

}  // namespace

std::variant<Cotree, PatternWitness> build_cotree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::Input, "cannot build a cotree of the empty graph");
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  Decomposer d(g);
  int root = d.run(std::move(all));
  if (root < 0) return *d.witness();
  return Cotree(d.take_nodes(), root);
}

namespace {

// Post-order over a Cotree without recursion.
std::vector<int> cotree_post_order(const Cotree& t) {
  std::vector<int> order;
  order.reserve(t.nodes().size());
  std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    const auto& children = t.node(i).children;
    if (next < children.size()) {
      int c = children[next++];
      stack.emplace_back(c, 0);
    } else {
      order.push_back(i);
      stack.pop_back();
    }
  }
  return order;
}

}  // namespace

std::vector<int> post_order(const BinaryCotree& t) {
  std::vector<int> order;
  order.reserve(t.node_count());
  std::vector<std::pair<int, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    const BinaryNode& nd = t.node(i);
    if (nd.label == NodeLabel::Leaf || expanded) {
      order.push_back(i);
      continue;
    }
    stack.emplace_back(i, true);
    stack.emplace_back(nd.right, false);
    stack.emplace_back(nd.left, false);
  }
  return order;
}

BinaryCotree binarize(const Cotree& t) {
  std::vector<BinaryNode> out;
  out.reserve(2 * static_cast<std::size_t>(t.vertex_count()));
  std::vector<int> image(t.nodes().size(), -1);
  for (int i : cotree_post_order(t)) {
    const CotreeNode& nd = t.node(i);
    if (nd.label == NodeLabel::Leaf) {
      out.push_back({NodeLabel::Leaf, nd.vertex, -1, -1});
      image[static_cast<std::size_t>(i)] = static_cast<int>(out.size()) - 1;
      continue;
    }
    int acc = image[static_cast<std::size_t>(nd.children.back())];
    for (std::size_t k = nd.children.size() - 1; k-- > 0;) {
      out.push_back({nd.label, -1, image[static_cast<std::size_t>(nd.children[k])], acc});
      acc = static_cast<int>(out.size()) - 1;
    }
    image[static_cast<std::size_t>(i)] = acc;
  }
  int root = image[static_cast<std::size_t>(t.root())];
  return BinaryCotree(std::move(out), root);
}

Cotree canonicalize(const BinaryCotree& t) {
  std::vector<CotreeNode> out;
  out.reserve(t.node_count());
  std::vector<int> image(t.node_count(), -1);
  for (int i : post_order(t)) {
    const BinaryNode& nd = t.node(i);
    if (nd.label == NodeLabel::Leaf) {
      out.push_back({NodeLabel::Leaf, nd.vertex, {}});
    } else {
      CotreeNode merged{nd.label, -1, {}};
      for (int c : {nd.left, nd.right}) {
        int ci = image[static_cast<std::size_t>(c)];
        CotreeNode& child = out[static_cast<std::size_t>(ci)];
        if (child.label == nd.label) {
          // the spliced node stays behind as an unreachable husk; dropped below
          merged.children.insert(merged.children.end(), child.children.begin(), child.children.end());
          child.children.clear();
          child.vertex = -2;
        } else {
          merged.children.push_back(ci);
        }
      }
      out.push_back(std::move(merged));
    }
    image[static_cast<std::size_t>(i)] = static_cast<int>(out.size()) - 1;
  }
  // compact away husks
  std::vector<int> remap(out.size(), -1);
  std::vector<CotreeNode> compact;
  compact.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].label != NodeLabel::Leaf && out[i].vertex == -2) continue;
    remap[i] = static_cast<int>(compact.size());
    compact.push_back(std::move(out[i]));
  }
  for (auto& nd : compact) {
    for (int& c : nd.children) c = remap[static_cast<std::size_t>(c)];
  }
  int root = remap[static_cast<std::size_t>(image[static_cast<std::size_t>(t.root())])];
  return Cotree(std::move(compact), root);
}

namespace {

template <typename ChildrenOf, typename NodeOf>
Graph expand_generic(int n, const std::vector<int>& order, std::size_t node_count, ChildrenOf children_of,
                     NodeOf node_of) {
  std::vector<std::vector<int>> leaves(node_count);
  std::vector<Edge> edges;
  for (int i : order) {
    auto [label, vertex] = node_of(i);
    auto& mine = leaves[static_cast<std::size_t>(i)];
    if (label == NodeLabel::Leaf) {
      mine.push_back(vertex);
      continue;
    }
    const std::vector<int> kids = children_of(i);
    for (std::size_t a = 0; a < kids.size(); ++a) {
      auto& la = leaves[static_cast<std::size_t>(kids[a])];
      if (label == NodeLabel::Join) {
        for (std::size_t b = a + 1; b < kids.size(); ++b) {
          for (int u : la) {
            for (int v : leaves[static_cast<std::size_t>(kids[b])]) edges.push_back({std::min(u, v), std::max(u, v)});
          }
        }
      }
    }
    for (int c : kids) {
      auto& lc = leaves[static_cast<std::size_t>(c)];
      mine.insert(mine.end(), lc.begin(), lc.end());
      std::vector<int>().swap(lc);
    }
  }
  return Graph(n, edges);
}

}  // namespace

Graph expand(const Cotree& t) {
  return expand_generic(
      t.vertex_count(), cotree_post_order(t), t.nodes().size(),
      [&](int i) { return t.node(i).children; },
      [&](int i) { return std::pair{t.node(i).label, t.node(i).vertex}; });
}

Graph expand(const BinaryCotree& t) {
  return expand_generic(
      t.vertex_count(), post_order(t), t.node_count(),
      [&](int i) { return std::vector<int>{t.node(i).left, t.node(i).right}; },
      [&](int i) { return std::pair{t.node(i).label, t.node(i).vertex}; });
}

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::Parse, "offset " + std::to_string(pos) + ": " + what);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Cotree parse_cotree(std::string_view text) {
  std::vector<CotreeNode> nodes;
  std::vector<std::pair<int, std::size_t>> open;  // node, offset of '('
  int root = -1;
  std::size_t i = 0;

  auto attach = [&](int node, std::size_t pos) {
    if (!open.empty()) {
      nodes[static_cast<std::size_t>(open.back().first)].children.push_back(node);
    } else if (root == -1) {
      root = node;
    } else {
      parse_fail(pos, "trailing data after the cotree");
    }
  };
  auto read_int = [&](std::size_t& p) -> int {
    std::size_t start = p;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    if (p == start) parse_fail(start, "expected a vertex id");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + p, value);
    if (ec != std::errc()) parse_fail(start, "vertex id out of range");
    return value;
  };

  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '(') {
      std::size_t at = i++;
      while (i < text.size() && is_space(text[i])) ++i;
      if (i >= text.size() || (text[i] != '0' && text[i] != '1')) parse_fail(i, "expected label 0 or 1");
      NodeLabel label = text[i] == '0' ? NodeLabel::Union : NodeLabel::Join;
      ++i;
      if (i < text.size() && !is_space(text[i]) && text[i] != '(' && text[i] != ')') {
        parse_fail(i, "label must be a single digit 0 or 1");
      }
      nodes.push_back({label, -1, {}});
      int id = static_cast<int>(nodes.size()) - 1;
      attach(id, at);
      open.emplace_back(id, at);
    } else if (c == ')') {
      if (open.empty()) parse_fail(i, "unmatched ')'");
      auto [id, at] = open.back();
      open.pop_back();
      std::size_t arity = nodes[static_cast<std::size_t>(id)].children.size();
      if (arity < 2) {
        throw Error(ErrorKind::Structure, "offset " + std::to_string(at) + ": internal node has " +
                                              std::to_string(arity) + " child(ren); at least two required");
      }
      // a child repeating its parent's label (as in binary output) is spliced
      // into the parent, leaving a husk that is dropped below
      if (!open.empty()) {
        CotreeNode& parent = nodes[static_cast<std::size_t>(open.back().first)];
        CotreeNode& self = nodes[static_cast<std::size_t>(id)];
        if (parent.label == self.label) {
          parent.children.pop_back();
          parent.children.insert(parent.children.end(), self.children.begin(), self.children.end());
          self.children.clear();
          self.vertex = -2;
        }
      }
      ++i;
    } else if (c >= '0' && c <= '9') {
      std::size_t at = i;
      int v = read_int(i);
      if (i < text.size() && !is_space(text[i]) && text[i] != '(' && text[i] != ')') {
        parse_fail(i, "unexpected character '" + std::string(1, text[i]) + "'");
      }
      nodes.push_back({NodeLabel::Leaf, v, {}});
      attach(static_cast<int>(nodes.size()) - 1, at);
    } else {
      parse_fail(i, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (!open.empty()) parse_fail(open.back().second, "unclosed '('");
  if (root == -1) parse_fail(0, "empty cotree");
  std::vector<int> remap(nodes.size(), -1);
  std::vector<CotreeNode> compact;
  compact.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].label != NodeLabel::Leaf && nodes[k].vertex == -2) continue;
    remap[k] = static_cast<int>(compact.size());
    compact.push_back(std::move(nodes[k]));
  }
  for (auto& nd : compact) {
    for (int& ch : nd.children) ch = remap[static_cast<std::size_t>(ch)];
  }
  return Cotree(std::move(compact), remap[static_cast<std::size_t>(root)]);
}

namespace {

template <typename Tree, typename Kids>
std::string serialize_generic(const Tree& t, Kids kids) {
  std::string out;
  std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    const auto& nd = t.node(i);
    if (nd.label == NodeLabel::Leaf) {
      if (!out.empty() && out.back() != '(') out += ' ';
      out += std::to_string(nd.vertex);
      stack.pop_back();
      continue;
    }
    const std::vector<int> children = kids(i);
    if (next == 0) {
      if (!out.empty() && out.back() != '(') out += ' ';
      out += nd.label == NodeLabel::Union ? "(0" : "(1";
    }
    if (next < children.size()) {
      int c = children[next++];
      stack.emplace_back(c, 0);
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

}  // namespace

std::string serialize_cotree(const Cotree& t) {
  return serialize_generic(t, [&](int i) { return t.node(i).children; });
}

std::string serialize_cotree(const BinaryCotree& t) {
  return serialize_generic(t, [&](int i) { return std::vector<int>{t.node(i).left, t.node(i).right}; });
}

bool looks_like_cotree(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
    } else if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      break;
    }
  }
  if (i >= text.size()) return false;
  if (text[i] == '(') return true;
  std::size_t eol = text.find('\n', i);
  std::string_view line = text.substr(i, eol == std::string_view::npos ? std::string_view::npos : eol - i);
  std::size_t tokens = 0;
  bool in_token = false;
  for (char c : line) {
    if (is_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++tokens;
    }
  }
  return tokens == 1;
}

}  // namespace clustervd
