#include "dissoc/tree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace dissoc {

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::ALL: return "ALL";
    case VertexClass::SOME: return "SOME";
    case VertexClass::NONE: return "NONE";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, VertexClass c) {
  return os << to_string(c);
}

namespace {

std::string line_prefix(int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " : std::string("input: ");
}

// Union-find with path halving; used to pin cycles to an input line.
struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

// Shared validation for both the parser and from_edges. `lines` holds the
// 1-based source line of each edge, or is null for programmatic input.
std::vector<std::vector<int>> validate_edges(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>* lines) {
  auto line_of = [&](std::size_t i) {
    return lines != nullptr ? (*lines)[i] : 0;
  };
  if (n < 1) {
    throw ParseError(ParseError::Kind::MalformedLine, 0,
                     "input: vertex count must be positive");
  }

  DisjointSets ds(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::vector<int>> adj(n);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    int line = line_of(i);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(ParseError::Kind::LabelOutOfRange, line,
                       line_prefix(line) + "label out of range [0, " +
                           std::to_string(n) + ")");
    }
    if (u == v) {
      throw ParseError(ParseError::Kind::SelfLoop, line,
                       line_prefix(line) + "self-loop at vertex " +
                           std::to_string(u));
    }
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                        static_cast<std::uint32_t>(std::max(u, v));
    if (!seen.insert(key).second) {
      throw ParseError(ParseError::Kind::DuplicateEdge, line,
                       line_prefix(line) + "duplicate edge " +
                           std::to_string(u) + " " + std::to_string(v));
    }
    if (!ds.unite(u, v)) {
      throw ParseError(ParseError::Kind::CycleDetected, line,
                       line_prefix(line) + "edge " + std::to_string(u) + " " +
                           std::to_string(v) + " closes a cycle");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  if (static_cast<int>(edges.size()) != n - 1) {
    throw ParseError(ParseError::Kind::Disconnected, 0,
                     "input: " + std::to_string(edges.size()) +
                         " edges on " + std::to_string(n) +
                         " vertices; tree needs " + std::to_string(n - 1));
  }
  // n-1 edges and no cycle implies connected.
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return Tree(n, validate_edges(n, edges, nullptr));
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Tree parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> lines;
  long long header_n = -1;
  bool saw_significant = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!saw_significant && tokens[0] == "n") {
      saw_significant = true;
      long long count = 0;
      if (tokens.size() != 2 || !parse_int(tokens[1], count)) {
        throw ParseError(ParseError::Kind::MalformedLine, line_no,
                         line_prefix(line_no) + "expected header 'n <count>'");
      }
      if (count < 1) {
        throw ParseError(ParseError::Kind::MalformedLine, line_no,
                         line_prefix(line_no) + "vertex count must be positive");
      }
      header_n = count;
      continue;
    }
    saw_significant = true;

    long long u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw ParseError(ParseError::Kind::MalformedLine, line_no,
                       line_prefix(line_no) + "expected two integer labels");
    }
    if (u < 0 || v < 0 || u > INT32_MAX || v > INT32_MAX) {
      throw ParseError(ParseError::Kind::LabelOutOfRange, line_no,
                       line_prefix(line_no) + "label out of supported range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    lines.push_back(line_no);
  }

  long long n;
  if (header_n >= 0) {
    n = header_n;
  } else {
    if (edges.empty()) {
      throw ParseError(ParseError::Kind::MalformedLine, 0,
                       "input: empty (no header and no edges)");
    }
    long long max_label = 0;
    for (auto [u, v] : edges) max_label = std::max<long long>({max_label, u, v});
    n = max_label + 1;
  }
  if (n > INT32_MAX) {
    throw ParseError(ParseError::Kind::LabelOutOfRange, 0,
                     "input: vertex count out of supported range");
  }
  return Tree(static_cast<int>(n),
              validate_edges(static_cast<int>(n), edges, &lines));
}

Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Tree& tree) {
  if (tree.order() == 1) return "n 1\n";
  std::string out;
  for (auto [u, v] : tree.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

RootedTree::RootedTree(const Tree& base, int root)
    : n_(base.order()), root_(root) {
  if (root < 0 || root >= n_) {
    throw std::out_of_range("root label out of range");
  }
  parent_.assign(n_, -1);
  depth_.assign(n_, -1);
  children_.assign(n_, {});
  bfs_.clear();
  bfs_.reserve(n_);

  depth_[root] = 0;
  bfs_.push_back(root);
  // Neighbor lists are sorted, so children come out in ascending label order.
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    int u = bfs_[head];
    for (int w : base.neighbors(u)) {
      if (depth_[w] >= 0) continue;
      depth_[w] = depth_[u] + 1;
      parent_[w] = u;
      children_[u].push_back(w);
      bfs_.push_back(w);
    }
  }
}

RootedTree root_at(const Tree& tree, int v) { return RootedTree(tree, v); }

Tree decode_pruefer(int n, std::span<const int> code) {
  if (n < 1) throw std::invalid_argument("decode_pruefer: n must be positive");
  if (static_cast<int>(code.size()) != std::max(0, n - 2)) {
    throw std::invalid_argument("decode_pruefer: code length must be n-2");
  }
  std::vector<std::vector<int>> adj(n);
  if (n >= 2) {
    std::vector<int> degree(n, 1);
    for (int a : code) {
      if (a < 0 || a >= n) {
        throw std::invalid_argument("decode_pruefer: code entry out of range");
      }
      ++degree[a];
    }
    auto add_edge = [&](int u, int v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    };
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : code) {
      add_edge(leaf, a);
      if (--degree[a] == 1 && a < ptr) {
        leaf = a;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    add_edge(leaf, n - 1);
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }
  return Tree(n, std::move(adj));
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
  std::mt19937_64 eng(seed);
  std::vector<int> code(std::max(0, n - 2));
  // Modulo reduction keeps draws identical across standard libraries;
  // the bias is ~n / 2^64.
  for (int& a : code) a = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
  return decode_pruefer(n, code);
}

std::vector<int> branch_vertices(const Tree& tree) {
  std::vector<int> out;
  for (int v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

}  // namespace dissoc
