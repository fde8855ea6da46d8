#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clustervd/graph.hpp"
#include "clustervd/pattern.hpp"

namespace clustervd {

enum class NodeLabel : std::uint8_t { Leaf, Union, Join };

struct CotreeNode {
  NodeLabel label = NodeLabel::Leaf;
  int vertex = -1;  // leaves only
  std::vector<int> children;

  friend bool operator==(const CotreeNode&, const CotreeNode&) = default;
};

/// Canonical cotree of a cograph: internal nodes have at least two children,
/// no internal node has a child with the same label, leaves are the vertices
/// 0..n-1 each exactly once. The constructor enforces all of this and throws
/// Error(Structure) otherwise.
class Cotree {
 public:
  Cotree(std::vector<CotreeNode> nodes, int root);

  const std::vector<CotreeNode>& nodes() const noexcept { return nodes_; }
  const CotreeNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  int root() const noexcept { return root_; }
  int vertex_count() const noexcept { return vertex_count_; }

  /// Cotree of the complement graph: every Union/Join label swapped.
  Cotree complemented() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;

 private:
  std::vector<CotreeNode> nodes_;
  int root_ = 0;
  int vertex_count_ = 0;
};

struct BinaryNode {
  NodeLabel label = NodeLabel::Leaf;
  int vertex = -1;
  int left = -1;
  int right = -1;

  friend bool operator==(const BinaryNode&, const BinaryNode&) = default;
};

/// Every internal node has exactly two children; equal labels may be
/// adjacent. The constructor checks that the nodes form a tree rooted at
/// `root` whose leaves are 0..n-1 each once.
class BinaryCotree {
 public:
  BinaryCotree(std::vector<BinaryNode> nodes, int root);

  const std::vector<BinaryNode>& nodes() const noexcept { return nodes_; }
  const BinaryNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  int root() const noexcept { return root_; }
  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  friend bool operator==(const BinaryCotree&, const BinaryCotree&) = default;

 private:
  std::vector<BinaryNode> nodes_;
  int root_ = 0;
  int vertex_count_ = 0;
};

/// Recognise a cograph by complement-connectivity decomposition. Returns the
/// cotree, or an induced P4 when g is not a cograph. Children are ordered by
/// their smallest vertex. Throws Error(Input) on the empty graph.
std::variant<Cotree, PatternWitness> build_cotree(const Graph& g);

/// Right-associated binarisation: (op c1 c2 ... ck) -> c1 op (c2 op (... op ck)).
BinaryCotree binarize(const Cotree& t);

/// Merge adjacent equal labels into canonical form.
Cotree canonicalize(const BinaryCotree& t);

Graph expand(const Cotree& t);
Graph expand(const BinaryCotree& t);

/// Node indices in post-order (children before parents).
std::vector<int> post_order(const BinaryCotree& t);

// S-expression form: a leaf is its decimal vertex id; an internal node is
// "(0 c1 c2 ...)" for union or "(1 c1 c2 ...)" for join. Lines starting with
// '#' are comments. Malformed text -> Error(Parse) with the character offset;
// arity < 2, repeated labels or bad leaf sets -> Error(Structure).
Cotree parse_cotree(std::string_view text);
std::string serialize_cotree(const Cotree& t);
std::string serialize_cotree(const BinaryCotree& t);

/// True when the first data character of `text` starts a cotree rather than
/// a graph file (an opening parenthesis, or a lone integer on the line).
bool looks_like_cotree(std::string_view text);

}  // namespace clustervd
