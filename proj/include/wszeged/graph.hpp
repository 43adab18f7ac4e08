#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wszeged/exact.hpp"

namespace wsz {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple connected undirected graph on vertices 0..vertex_count()-1.
class Graph {
public:
  // Validates: no self-loops, no duplicate edges, endpoints in range,
  // connected. Throws ValidationError otherwise.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;
  bool is_tree() const noexcept { return edges_.size() + 1 == adjacency_.size(); }

  // Breadth-first distances from `source`.
  std::vector<std::size_t> distances_from(Vertex source) const;

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A tree with a distinguished root, parent links and subtree sizes.
class RootedTree {
public:
  // Builds from a tree-shaped graph; throws ValidationError if `g` is not a tree.
  RootedTree(const Graph& g, Vertex root);

  // parent[root] must be empty, every other entry must name the parent.
  static RootedTree from_parents(std::vector<std::optional<Vertex>> parent);

  std::size_t vertex_count() const noexcept { return parent_.size(); }
  Vertex root() const noexcept { return root_; }
  std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  std::size_t subtree_size(Vertex v) const { return subtree_size_.at(v); }
  std::size_t degree(Vertex v) const {
    return children_.at(v).size() + (parent_.at(v).has_value() ? 1 : 0);
  }

  // Vertices in breadth-first order from the root.
  std::vector<Vertex> bfs_order() const;
  Graph to_graph() const;

private:
  RootedTree() = default;
  void finish();

  Vertex root_ = 0;
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> subtree_size_;
};

struct EdgeSplit {
  std::size_t n_u = 0; // vertices strictly closer to u
  std::size_t n_v = 0; // vertices strictly closer to v
  friend bool operator==(const EdgeSplit&, const EdgeSplit&) = default;
};

// Edge list text: one "u v" pair per line, '#' comments, optional
// "n <count>" header fixing the vertex count.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

EdgeSplit edge_split(const Graph& g, Vertex u, Vertex v);
EdgeSplit edge_split(const RootedTree& t, Vertex u, Vertex v);

// Dispatches to the subtree-size path for trees, the BFS path otherwise.
Int szeged_index(const Graph& g);
Int weighted_szeged_index(const Graph& g);

// Per-edge double BFS; valid for every connected graph.
Int szeged_index_bfs(const Graph& g);
Int weighted_szeged_index_bfs(const Graph& g);

// Single subtree-size pass.
Int szeged_index(const RootedTree& t);
Int weighted_szeged_index(const RootedTree& t);

inline constexpr std::size_t kDefaultTreeSizeLimit = 5'000'000;

RootedTree complete_kary_tree(std::size_t k, std::size_t levels,
                              std::size_t size_limit = kDefaultTreeSizeLimit);

// n^2 (2k+2) ln n / ln k.
double kary_estimate(double n, unsigned k);

} // namespace wsz
