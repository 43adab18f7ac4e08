#include "wszeged/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace wsz {

std::string rooted_encoding(const Graph& tree, Vertex root) {
  const RootedTree rt(tree, root);
  const auto order = rt.bfs_order();
  std::vector<std::string> code(rt.vertex_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string*> parts;
    for (Vertex c : rt.children(*it)) parts.push_back(&code[c]);
    std::sort(parts.begin(), parts.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string s = "(";
    for (auto* p : parts) {
      s += *p;
      p->clear();
    }
    s += ')';
    code[*it] = std::move(s);
  }
  return code[root];
}

std::vector<Vertex> centroids(const Graph& tree) {
  const RootedTree rt(tree, 0);
  const std::size_t n = rt.vertex_count();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t heaviest = n - rt.subtree_size(v);
    for (Vertex c : rt.children(v)) heaviest = std::max(heaviest, rt.subtree_size(c));
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

std::string free_tree_encoding(const Graph& tree) {
  std::string best;
  for (Vertex c : centroids(tree)) {
    std::string e = rooted_encoding(tree, c);
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

MultisetOdometer::MultisetOdometer(std::vector<std::size_t> candidate_sizes, std::size_t target)
    : sizes_(std::move(candidate_sizes)) {
  stack_.push_back({static_cast<std::ptrdiff_t>(sizes_.size()) - 1, target});
}

const std::vector<std::size_t>* MultisetOdometer::next() {
  started_ = true;
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (f.remaining == 0) {
      emitted_ = chosen_;
      stack_.pop_back();
      if (!chosen_.empty()) chosen_.pop_back();
      return &emitted_;
    }
    while (f.cursor >= 0 && sizes_[static_cast<std::size_t>(f.cursor)] > f.remaining) --f.cursor;
    if (f.cursor < 0) {
      stack_.pop_back();
      if (!chosen_.empty()) chosen_.pop_back();
      continue;
    }
    const auto i = static_cast<std::size_t>(f.cursor--);
    const std::size_t rest = f.remaining - sizes_[i];
    chosen_.push_back(i);
    stack_.push_back({static_cast<std::ptrdiff_t>(i), rest});
  }
  return nullptr;
}

namespace {

std::vector<std::size_t> sizes_of(const std::vector<BranchShape>& shapes) {
  std::vector<std::size_t> out;
  out.reserve(shapes.size());
  for (const auto& s : shapes) out.push_back(s.size());
  return out;
}

std::vector<BranchShape> shapes_up_to(std::size_t max_size, std::size_t cap) {
  std::vector<BranchShape> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    const auto& level = all_branch_shapes(s, cap);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

} // namespace

ShapeIterator::ShapeIterator(std::size_t m, std::size_t cap)
    : candidates_(m >= 2 && m <= cap ? shapes_up_to(m - 1, cap) : std::vector<BranchShape>{}),
      odometer_(sizes_of(candidates_), m == 0 ? 0 : m - 1) {
  if (m == 0) throw DomainError("a branch has at least one vertex");
  if (m > cap) throw LimitError("branch shape enumeration is capped at size " + std::to_string(cap));
  single_ = (m == 1);
}

std::optional<BranchShape> ShapeIterator::next() {
  if (single_) {
    single_ = false;
    odometer_.next(); // consume the empty multiset
    return BranchShape::leaf();
  }
  const auto* idx = odometer_.next();
  if (!idx || candidates_.empty()) return std::nullopt;
  std::vector<BranchShape> children;
  children.reserve(idx->size());
  for (std::size_t i : *idx) children.push_back(candidates_[i]);
  return BranchShape(std::move(children));
}

const std::vector<BranchShape>& all_branch_shapes(std::size_t m, std::size_t cap) {
  if (m == 0) throw DomainError("a branch has at least one vertex");
  if (m > cap) throw LimitError("branch shape enumeration is capped at size " + std::to_string(cap));
  static std::recursive_mutex mutex;
  static std::vector<std::vector<BranchShape>> memo;
  std::lock_guard lock(mutex);
  if (memo.size() <= m) memo.resize(m + 1);
  if (memo[m].empty()) {
    std::vector<BranchShape> out;
    ShapeIterator it(m, cap);
    while (auto s = it.next()) out.push_back(std::move(*s));
    std::sort(out.begin(), out.end());
    memo[m] = std::move(out);
  }
  return memo[m];
}

TreeIterator::TreeIterator(std::size_t n, std::size_t cap)
    : n_(n),
      small_(n >= 3 && n <= cap ? shapes_up_to((n - 1) / 2, cap) : std::vector<BranchShape>{}),
      halves_(n >= 2 && n <= cap && n % 2 == 0 ? all_branch_shapes(n / 2, cap) : std::vector<BranchShape>{}),
      odometer_(sizes_of(small_), n >= 3 ? n - 1 : 0) {
  if (n == 0) throw DomainError("a tree has at least one vertex");
  if (n > cap) throw LimitError("free tree enumeration is capped at order " + std::to_string(cap));
  // Orders 1 and 2 have no unicentroidal tree with children; handle directly.
  if (n == 2) in_pairs_ = true;
}

std::optional<Graph> TreeIterator::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    return Graph(1, {});
  }
  if (!in_pairs_) {
    if (const auto* idx = odometer_.next()) {
      std::vector<BranchShape> children;
      for (std::size_t i : *idx) children.push_back(small_[i]);
      return assemble_tree(children).to_graph();
    }
    in_pairs_ = true;
  }
  if (n_ % 2 != 0 || pair_a_ >= halves_.size()) {
    done_ = true;
    return std::nullopt;
  }
  // Unordered pairs b <= a.
  const BranchShape& a = halves_[pair_a_];
  const BranchShape& b = halves_[pair_b_];
  if (++pair_b_ > pair_a_) {
    ++pair_a_;
    pair_b_ = 0;
  }
  auto parent = shape_parents(a);
  const Vertex offset = parent.size();
  for (auto p : shape_parents(b)) parent.push_back(p ? std::optional<Vertex>(*p + offset) : std::optional<Vertex>(0));
  return RootedTree::from_parents(std::move(parent)).to_graph();
}

TreeIterator enumerate_free_trees(std::size_t n, std::size_t cap) { return TreeIterator(n, cap); }
ShapeIterator enumerate_branch_shapes(std::size_t m, std::size_t cap) { return ShapeIterator(m, cap); }

BruteForceTree brute_force_min_tree(std::size_t n, std::size_t cap) {
  BruteForceTree out;
  TreeIterator it(n, cap);
  bool first = true;
  while (auto g = it.next()) {
    ++out.trees_examined;
    const Int w = weighted_szeged_index(*g);
    if (first || w < out.cost) {
      out.cost = w;
      out.minimizers.clear();
      first = false;
    }
    if (w == out.cost) out.minimizers.push_back(std::move(*g));
  }
  return out;
}

BruteForceBranch brute_force_min_branch(std::size_t m, Int n, std::size_t cap) {
  if (n < static_cast<Int>(m) + 1) throw DomainError("tree order must exceed the branch size");
  BruteForceBranch out;
  bool first = true;
  for (const auto& s : all_branch_shapes(m, cap)) {
    const Int c = branch_cost_at(s, n);
    if (first || c < out.cost) {
      out.cost = c;
      out.minimizers.clear();
      first = false;
    }
    if (c == out.cost) out.minimizers.push_back(s);
  }
  return out;
}

RootedTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("a tree has at least one vertex");
  std::vector<std::optional<Vertex>> parent(n);
  if (n == 1) return RootedTree::from_parents(std::move(parent));
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    // Linear-time decoding.
    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex c : code) {
      edges.emplace_back(leaf, c);
      if (--degree[c] == 1 && c < ptr) {
        leaf = c;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    edges.emplace_back(leaf, n - 1);
  }
  return RootedTree(Graph(n, std::move(edges)), 0);
}

} // namespace wsz
