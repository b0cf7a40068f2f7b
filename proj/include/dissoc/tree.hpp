#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dissoc {

/// Classification of a vertex with respect to the maximum dissociation sets
/// of a tree: contained in all of them, in some but not all, or in none.
enum class VertexClass { ALL, SOME, NONE };

const char* to_string(VertexClass c);
std::ostream& operator<<(std::ostream& os, VertexClass c);

/// Raised by tree parsing/construction. line() is 1-based; 0 means the
/// input as a whole (no single offending line).
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    LabelOutOfRange,
    CycleDetected,
    Disconnected,
  };

  ParseError(Kind kind, int line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Undirected labeled tree on vertices 0..n-1.
/// Immutable after construction; neighbor lists are sorted ascending.
class Tree {
 public:
  /// Builds a tree from an edge list, validating all tree invariants
  /// (labels in range, no self-loops or duplicate edges, connected,
  /// exactly n-1 edges). Throws ParseError on violation.
  static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  const std::vector<int>& neighbors(int v) const { return adj_[check_label(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[check_label(v)].size()); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Tree& other) const = default;

 private:
  Tree(int n, std::vector<std::vector<int>> adj)
      : n_(n), adj_(std::move(adj)) {}

  int check_label(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex label out of range");
    return v;
  }

  friend Tree parse_edge_list(std::istream& in);
  friend Tree decode_pruefer(int n, std::span<const int> code);

  int n_;
  std::vector<std::vector<int>> adj_;
};

/// Parses the edge-list text format: optional first line "n <count>",
/// then one edge "u v" per line; '#'-prefixed lines are comments and
/// blank lines are ignored. Without a header, n is 1 + max label.
Tree parse_edge_list(std::istream& in);
Tree parse_edge_list(const std::string& text);

/// Canonical text form: "n 1" for the one-vertex tree, otherwise one
/// "u v" line per edge with u < v, lexicographically sorted.
std::string serialize_edge_list(const Tree& tree);

/// Tree rooted at a vertex; parent/children/depth fixed by BFS from the
/// root, children ordered by ascending label.
class RootedTree {
 public:
  RootedTree(const Tree& base, int root);

  int order() const { return n_; }
  int root() const { return root_; }
  /// Parent of v, or -1 for the root.
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int depth(int v) const { return depth_[v]; }
  /// Vertices in BFS order from the root (non-decreasing depth).
  const std::vector<int>& bfs_order() const { return bfs_; }

 private:
  int n_;
  int root_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> bfs_;
  std::vector<std::vector<int>> children_;
};

/// Roots the tree at v. Throws std::out_of_range for an invalid label.
RootedTree root_at(const Tree& tree, int v);

/// Decodes a Pruefer sequence into the labeled tree it encodes.
/// code.size() must equal max(0, n-2); entries must lie in [0, n).
Tree decode_pruefer(int n, std::span<const int> code);

/// Uniformly random labeled tree on n vertices, deterministic in (n, seed).
Tree random_tree(int n, std::uint64_t seed);

/// Vertices of degree >= 3, ascending.
std::vector<int> branch_vertices(const Tree& tree);

}  // namespace dissoc
