#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wszeged/branch.hpp"
#include "wszeged/graph.hpp"

namespace wsz {

inline constexpr std::size_t kFreeTreeCap = 18;
inline constexpr std::size_t kBranchShapeCap = 14;

// AHU encoding of a tree rooted at `root`.
std::string rooted_encoding(const Graph& tree, Vertex root);
std::vector<Vertex> centroids(const Graph& tree);
// Isomorphism-class key: rooted encoding at the centroid, the smaller of the
// two encodings when the centroid is an edge.
std::string free_tree_encoding(const Graph& tree);

// Non-increasing index sequences over a candidate list whose sizes add up to
// a target. Each multiset is produced exactly once.
class MultisetOdometer {
public:
  MultisetOdometer(std::vector<std::size_t> candidate_sizes, std::size_t target);
  // Indices of the next multiset, largest index first.
  const std::vector<std::size_t>* next();

private:
  struct Frame {
    std::ptrdiff_t cursor;
    std::size_t remaining;
  };
  std::vector<std::size_t> sizes_;
  std::vector<Frame> stack_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> emitted_;
  bool started_ = false;
};

// Every rooted shape of size m exactly once, in no particular order.
class ShapeIterator {
public:
  ShapeIterator(std::size_t m, std::size_t cap = kBranchShapeCap);
  std::optional<BranchShape> next();

private:
  std::vector<BranchShape> candidates_;
  MultisetOdometer odometer_;
  bool single_ = false;
};

// Every free tree of order n exactly once: centroid-rooted multisets of
// small branches, then (n even) unordered pairs of halves joined by an edge.
class TreeIterator {
public:
  TreeIterator(std::size_t n, std::size_t cap = kFreeTreeCap);
  std::size_t order() const noexcept { return n_; }
  std::optional<Graph> next();

private:
  std::size_t n_;
  std::vector<BranchShape> small_;  // sizes <= (n-1)/2
  std::vector<BranchShape> halves_; // size n/2, when n is even
  MultisetOdometer odometer_;
  std::size_t pair_a_ = 0;
  std::size_t pair_b_ = 0;
  bool in_pairs_ = false;
  bool done_ = false;
};

TreeIterator enumerate_free_trees(std::size_t n, std::size_t cap = kFreeTreeCap);
ShapeIterator enumerate_branch_shapes(std::size_t m, std::size_t cap = kBranchShapeCap);
// Materialized enumeration, memoized per size; shapes sorted canonically.
const std::vector<BranchShape>& all_branch_shapes(std::size_t m, std::size_t cap = kBranchShapeCap);

struct BruteForceTree {
  Int cost = 0;
  std::vector<Graph> minimizers;
  std::size_t trees_examined = 0;
};

struct BruteForceBranch {
  Int cost = 0;
  std::vector<BranchShape> minimizers;
};

BruteForceTree brute_force_min_tree(std::size_t n, std::size_t cap = kFreeTreeCap);
BruteForceBranch brute_force_min_branch(std::size_t m, Int n, std::size_t cap = kBranchShapeCap);

// Uniform random labeled tree on n vertices (Pruefer decoding), rooted at 0.
RootedTree random_tree(std::size_t n, std::uint64_t seed);

} // namespace wsz
