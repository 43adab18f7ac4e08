#include "wszeged/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

namespace wsz {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

Int as_int(std::size_t v) {
  if (v > static_cast<std::size_t>(std::numeric_limits<Int>::max()))
    throw OverflowError("count does not fit in a 64-bit integer");
  return static_cast<Int>(v);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

} // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) throw ValidationError("graph must have at least one vertex");
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u >= vertex_count || v >= vertex_count)
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a vertex outside 0.." +
                            std::to_string(vertex_count - 1));
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    const Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw ValidationError("duplicate edge (" + std::to_string(key.first) + ", " +
                            std::to_string(key.second) + ")");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  const auto dist = distances_from(0);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end())
    throw ValidationError("graph is disconnected");
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& a : adjacency_) d = std::max(d, a.size());
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adjacency_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

std::vector<std::size_t> Graph::distances_from(Vertex source) const {
  std::vector<std::size_t> dist(vertex_count(), kUnreached);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[v]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

RootedTree::RootedTree(const Graph& g, Vertex root) {
  if (!g.is_tree()) throw ValidationError("graph is not a tree");
  if (root >= g.vertex_count()) throw ValidationError("root outside the vertex range");
  root_ = root;
  parent_.assign(g.vertex_count(), std::nullopt);
  children_.assign(g.vertex_count(), {});
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent_[w] = v;
      children_[v].push_back(w);
      queue.push_back(w);
    }
  }
  finish();
}

RootedTree RootedTree::from_parents(std::vector<std::optional<Vertex>> parent) {
  RootedTree t;
  const std::size_t n = parent.size();
  if (n == 0) throw ValidationError("tree must have at least one vertex");
  t.parent_ = std::move(parent);
  t.children_.assign(n, {});
  std::size_t roots = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!t.parent_[v]) {
      t.root_ = v;
      ++roots;
    } else {
      if (*t.parent_[v] >= n || *t.parent_[v] == v)
        throw ValidationError("invalid parent for vertex " + std::to_string(v));
      t.children_[*t.parent_[v]].push_back(v);
    }
  }
  if (roots != 1) throw ValidationError("a rooted tree needs exactly one root");
  t.finish();
  return t;
}

void RootedTree::finish() {
  const auto order = bfs_order();
  if (order.size() != parent_.size()) throw ValidationError("parent links contain a cycle");
  subtree_size_.assign(parent_.size(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent_[*it]) subtree_size_[*parent_[*it]] += subtree_size_[*it];
}

std::vector<Vertex> RootedTree::bfs_order() const {
  std::vector<Vertex> order;
  order.reserve(parent_.size());
  order.push_back(root_);
  for (std::size_t i = 0; i < order.size() && order.size() <= parent_.size(); ++i)
    for (Vertex c : children_[order[i]]) order.push_back(c);
  return order;
}

Graph RootedTree::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(parent_.size() - 1);
  for (Vertex v = 0; v < parent_.size(); ++v)
    if (parent_[v]) edges.emplace_back(*parent_[v], v);
  return Graph(parent_.size(), std::move(edges));
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_label = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(line_no, "expected two fields, got " + std::to_string(tokens.size()));
    if (tokens[0] == "n") {
      if (declared) throw ParseError(line_no, "repeated vertex-count header");
      declared = parse_count(tokens[1], line_no);
      continue;
    }
    const Vertex u = parse_count(tokens[0], line_no);
    const Vertex v = parse_count(tokens[1], line_no);
    max_label = std::max({max_label, u, v});
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw ParseError("read error");
  std::size_t count = 0;
  if (declared) {
    count = *declared;
    if (!edges.empty() && max_label >= count)
      throw ValidationError("vertex label " + std::to_string(max_label) +
                            " exceeds declared count " + std::to_string(count));
  } else {
    if (edges.empty()) throw ParseError("no edges and no vertex-count header");
    count = max_label + 1;
  }
  return Graph(count, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

EdgeSplit edge_split(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw ValidationError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  const auto du = g.distances_from(u);
  const auto dv = g.distances_from(v);
  EdgeSplit s;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (du[w] < dv[w]) ++s.n_u;
    else if (dv[w] < du[w]) ++s.n_v;
  }
  return s;
}

EdgeSplit edge_split(const RootedTree& t, Vertex u, Vertex v) {
  if (u >= t.vertex_count() || v >= t.vertex_count())
    throw ValidationError("edge endpoint outside the vertex range");
  const std::size_t n = t.vertex_count();
  if (t.parent(v) == u) return {n - t.subtree_size(v), t.subtree_size(v)};
  if (t.parent(u) == v) return {t.subtree_size(u), n - t.subtree_size(u)};
  throw ValidationError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
}

namespace {

template <typename SplitFn>
Int sum_over_edges(const Graph& g, bool weighted, SplitFn&& split) {
  Int total = 0;
  for (const auto& [u, v] : g.edges()) {
    const EdgeSplit s = split(u, v);
    Int term = checked_mul(as_int(s.n_u), as_int(s.n_v));
    if (weighted) term = checked_mul(term, as_int(g.degree(u) + g.degree(v)));
    total = checked_add(total, term);
  }
  return total;
}

Int tree_sum(const RootedTree& t, bool weighted) {
  Int total = 0;
  const Int n = as_int(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto p = t.parent(v);
    if (!p) continue;
    const Int below = as_int(t.subtree_size(v));
    Int term = checked_mul(below, n - below);
    if (weighted) term = checked_mul(term, as_int(t.degree(v) + t.degree(*p)));
    total = checked_add(total, term);
  }
  return total;
}

} // namespace

Int szeged_index_bfs(const Graph& g) {
  return sum_over_edges(g, false, [&](Vertex u, Vertex v) { return edge_split(g, u, v); });
}

Int weighted_szeged_index_bfs(const Graph& g) {
  return sum_over_edges(g, true, [&](Vertex u, Vertex v) { return edge_split(g, u, v); });
}

Int szeged_index(const RootedTree& t) { return tree_sum(t, false); }
Int weighted_szeged_index(const RootedTree& t) { return tree_sum(t, true); }

Int szeged_index(const Graph& g) {
  return g.is_tree() ? szeged_index(RootedTree(g, 0)) : szeged_index_bfs(g);
}

Int weighted_szeged_index(const Graph& g) {
  return g.is_tree() ? weighted_szeged_index(RootedTree(g, 0)) : weighted_szeged_index_bfs(g);
}

RootedTree complete_kary_tree(std::size_t k, std::size_t levels, std::size_t size_limit) {
  if (k < 2) throw DomainError("branching factor must be at least 2");
  if (levels < 1) throw DomainError("depth must be at least 1");
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t l = 0; l < levels; ++l) {
    if (layer > size_limit / k) throw LimitError("complete k-ary tree exceeds the size limit");
    layer *= k;
    total += layer;
    if (total > size_limit) throw LimitError("complete k-ary tree exceeds the size limit");
  }
  std::vector<std::optional<Vertex>> parent(total);
  // Heap layout: children of v are k*v+1 .. k*v+k.
  for (Vertex v = 1; v < total; ++v) parent[v] = (v - 1) / k;
  return RootedTree::from_parents(std::move(parent));
}

double kary_estimate(double n, unsigned k) {
  if (n < 2 || k < 2) throw DomainError("k-ary estimate needs n >= 2 and k >= 2");
  return n * n * (2.0 * k + 2.0) * std::log(n) / std::log(static_cast<double>(k));
}

} // namespace wsz
