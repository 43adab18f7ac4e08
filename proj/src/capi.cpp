#include "wszeged/wszeged.h"

#include <cstring>
#include <new>
#include <sstream>

#include "wszeged/conjectures.hpp"
#include "wszeged/records.hpp"
#include "wszeged/verify.hpp"

struct wsz_graph {
  wsz::Graph graph;
};

struct wsz_branch {
  wsz::BranchShape shape;
};

struct wsz_branch_table {
  wsz::BranchTable table;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_notices;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** slot, const std::string& s) {
  if (slot) *slot = duplicate(s);
}

struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be null");
}

template <typename Fn>
wsz_status guarded(Fn&& fn) {
  last_error.clear();
  last_notices.clear();
  try {
    fn();
    return WSZ_OK;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return WSZ_ERR_INVALID_ARGUMENT;
  } catch (const wsz::ParseError& e) {
    last_error = e.what();
    return WSZ_ERR_PARSE;
  } catch (const wsz::ValidationError& e) {
    last_error = e.what();
    return WSZ_ERR_VALIDATION;
  } catch (const wsz::DomainError& e) {
    last_error = e.what();
    return WSZ_ERR_DOMAIN;
  } catch (const wsz::OverflowError& e) {
    last_error = e.what();
    return WSZ_ERR_OVERFLOW;
  } catch (const wsz::LimitError& e) {
    last_error = e.what();
    return WSZ_ERR_LIMIT;
  } catch (const std::filesystem::filesystem_error& e) {
    last_error = e.what();
    return WSZ_ERR_IO;
  } catch (const wsz::Error& e) {
    last_error = e.what();
    return WSZ_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WSZ_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return WSZ_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return WSZ_ERR_INTERNAL;
  }
}

wsz::ResultCache open_cache(const wsz_run_options* options) {
  if (options && options->cache_path) {
    if (!*options->cache_path) return {};
    return wsz::ResultCache(options->cache_path);
  }
  if (auto p = wsz::ResultCache::default_path()) return wsz::ResultCache(*p);
  return {};
}

unsigned jobs_of(const wsz_run_options* options) { return options && options->jobs ? options->jobs : 1; }

void note(const std::string& s) {
  if (!last_notices.empty()) last_notices += '\n';
  last_notices += s;
}

// Returns the cached value under `key` decoded by `decode`, or computes,
// stores and returns a fresh one. Entries that fail to decode are recomputed.
template <typename T, typename Decode, typename Encode, typename Compute>
T cached(wsz::ResultCache& cache, const std::string& key, Decode decode, Encode encode, Compute compute) {
  for (const auto& n : cache.notices()) note(n);
  if (auto hit = cache.get(key)) {
    try {
      return decode(*hit);
    } catch (const std::exception&) {
      note("cache entry " + key + " is unreadable; recomputing");
    }
  }
  T value = compute();
  cache.put(key, encode(value));
  return value;
}

wsz::ThresholdTable threshold_table_cached(wsz::ResultCache& cache, std::size_t max_size, wsz::Int n_max,
                                           unsigned jobs) {
  const std::string key = "threshold/" + std::to_string(max_size) + "/" + std::to_string(n_max);
  return cached<wsz::ThresholdTable>(
      cache, key, [](const wsz::Json& j) { return wsz::threshold_table_from_json(j); },
      [](const wsz::ThresholdTable& t) { return wsz::to_json(t); },
      [&] { return wsz::threshold_table(max_size, n_max, {{}, jobs}); });
}

std::vector<wsz::ResultRecord> tree_table_cached(wsz::ResultCache& cache, wsz::Int max_n) {
  const std::string key = "trees/" + std::to_string(max_n);
  return cached<std::vector<wsz::ResultRecord>>(
      cache, key, [](const wsz::Json& j) { return wsz::tree_table_from_json(j); },
      [](const std::vector<wsz::ResultRecord>& rows) { return wsz::tree_table_document(rows); },
      [&] {
        std::vector<wsz::ResultRecord> rows;
        for (wsz::Int n = 2; n <= max_n; ++n) rows.push_back(wsz::tree_record(wsz::minimal_tree(n)));
        return rows;
      });
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

} // namespace

extern "C" {

const char* wsz_version(void) { return "1.0.0"; }
const char* wsz_last_error(void) { return last_error.c_str(); }
const char* wsz_last_notices(void) { return last_notices.c_str(); }

const char* wsz_status_name(wsz_status status) {
  switch (status) {
  case WSZ_OK: return "ok";
  case WSZ_ERR_INVALID_ARGUMENT: return "invalid argument";
  case WSZ_ERR_PARSE: return "parse error";
  case WSZ_ERR_VALIDATION: return "validation error";
  case WSZ_ERR_DOMAIN: return "domain error";
  case WSZ_ERR_OVERFLOW: return "overflow";
  case WSZ_ERR_LIMIT: return "limit exceeded";
  case WSZ_ERR_IO: return "i/o error";
  case WSZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void wsz_string_free(char* s) { std::free(s); }

wsz_status wsz_graph_parse_edge_list(const char* text, wsz_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wsz_graph{wsz::parse_edge_list(std::string_view(text))};
  });
}

wsz_status wsz_graph_from_edges(size_t vertex_count, const size_t* pairs, size_t edge_count, wsz_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count) require(pairs, "pairs");
    std::vector<wsz::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new wsz_graph{wsz::Graph(vertex_count, std::move(edges))};
  });
}

void wsz_graph_free(wsz_graph* g) { delete g; }

wsz_status wsz_graph_vertex_count(const wsz_graph* g, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->graph.vertex_count();
  });
}

wsz_status wsz_graph_edge_count(const wsz_graph* g, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->graph.edge_count();
  });
}

wsz_status wsz_graph_edge_split(const wsz_graph* g, size_t u, size_t v, size_t* n_u, size_t* n_v) {
  return guarded([&] {
    require(g, "graph");
    require(n_u, "n_u");
    require(n_v, "n_v");
    const auto split = wsz::edge_split(g->graph, u, v);
    *n_u = split.n_u;
    *n_v = split.n_v;
  });
}

wsz_status wsz_graph_szeged(const wsz_graph* g, int64_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wsz::szeged_index(g->graph);
  });
}

wsz_status wsz_graph_weighted_szeged(const wsz_graph* g, int64_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wsz::weighted_szeged_index(g->graph);
  });
}

wsz_status wsz_graph_index_string(const wsz_graph* g, const char* kind, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(kind, "kind");
    require(out, "out");
    const std::string k(kind);
    if (k == "wsz")
      emit(out, std::to_string(wsz::weighted_szeged_index(g->graph)));
    else if (k == "sz")
      emit(out, std::to_string(wsz::szeged_index(g->graph)));
    else
      throw InvalidArgument("index kind must be 'wsz' or 'sz'");
  });
}

wsz_status wsz_branch_parse(const char* text, wsz_branch** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wsz_branch{wsz::parse_branch(text)};
  });
}

wsz_status wsz_branch_from_sizes(const char* text, int64_t n, wsz_branch** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    if (n < 0) throw wsz::DomainError("tree order must be non-negative");
    *out = new wsz_branch{wsz::shape_from_children_sizes(wsz::parse_children_sizes(text), n)};
  });
}

void wsz_branch_free(wsz_branch* b) { delete b; }

wsz_status wsz_branch_size(const wsz_branch* b, size_t* out) {
  return guarded([&] {
    require(b, "branch");
    require(out, "out");
    *out = b->shape.size();
  });
}

wsz_status wsz_branch_print(const wsz_branch* b, char** out) {
  return guarded([&] {
    require(b, "branch");
    require(out, "out");
    emit(out, wsz::print_branch(b->shape));
  });
}

wsz_status wsz_branch_cost(const wsz_branch* b, int64_t* slope, int64_t* intercept) {
  return guarded([&] {
    require(b, "branch");
    require(slope, "slope");
    require(intercept, "intercept");
    const auto c = wsz::branch_cost(b->shape);
    *slope = c.slope;
    *intercept = c.intercept;
  });
}

wsz_status wsz_branch_cost_at(const wsz_branch* b, int64_t n, int64_t* out) {
  return guarded([&] {
    require(b, "branch");
    require(out, "out");
    *out = wsz::branch_cost_at(b->shape, n);
  });
}

wsz_status wsz_branch_to_graph(const wsz_branch* b, size_t host_path_length, wsz_graph** out) {
  return guarded([&] {
    require(b, "branch");
    require(out, "out");
    if (host_path_length == 0)
      *out = new wsz_graph{wsz::RootedTree::from_parents(wsz::shape_parents(b->shape)).to_graph()};
    else
      *out = new wsz_graph{wsz::shape_to_tree(b->shape, host_path_length).to_graph()};
  });
}

wsz_status wsz_branch_table_new(int64_t n, size_t max_size, wsz_branch_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wsz_branch_table{wsz::minimal_branches(n, max_size)};
  });
}

void wsz_branch_table_free(wsz_branch_table* t) { delete t; }

wsz_status wsz_branch_table_cost(const wsz_branch_table* t, size_t m, int64_t* out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    *out = t->table.cost(m);
  });
}

wsz_status wsz_branch_table_record(const wsz_branch_table* t, size_t m, char** json, char** text) {
  return guarded([&] {
    require(t, "table");
    if (m < 1 || m > t->table.max_size()) throw wsz::DomainError("size outside the table");
    const auto r = wsz::branch_record(t->table, m);
    emit(json, wsz::to_json(r).dump(2));
    emit(text, wsz::format_record(r));
  });
}

wsz_status wsz_optimal_tree(int64_t n, char** json, char** text, char** dot) {
  return guarded([&] {
    const auto tree = wsz::minimal_tree(n);
    const auto r = wsz::tree_record(tree);
    emit(json, wsz::to_json(r).dump(2));
    emit(text, wsz::format_record(r));
    if (dot)
      emit(dot, wsz::to_dot(tree.classes.front().tree,
                            "Best weighted Szeged index on " + std::to_string(n) + " vertices"));
  });
}

wsz_status wsz_threshold_table(size_t max_size, int64_t n_max, const wsz_run_options* options, char** json,
                               char** text) {
  return guarded([&] {
    auto cache = open_cache(options);
    const auto table = threshold_table_cached(cache, max_size, n_max, jobs_of(options));
    emit(json, wsz::to_json(table).dump(2));
    emit(text, wsz::format_threshold_table(table));
  });
}

wsz_status wsz_tree_table(int64_t max_n, const wsz_run_options* options, char** json, char** text) {
  return guarded([&] {
    if (max_n < 2) throw wsz::DomainError("tree table needs max >= 2");
    auto cache = open_cache(options);
    const auto rows = tree_table_cached(cache, max_n);
    emit(json, wsz::tree_table_document(rows).dump(2));
    emit(text, wsz::format_tree_table(rows));
  });
}

wsz_status wsz_conjectures(int64_t max_n, const wsz_run_options* options, char** json, char** text) {
  return guarded([&] {
    if (max_n < 2) throw wsz::DomainError("conjecture sweep needs max >= 2");
    auto cache = open_cache(options);
    const auto branch_max = static_cast<std::size_t>(std::max<int64_t>(max_n - 1, 2));
    const auto table = threshold_table_cached(cache, branch_max, 1200, jobs_of(options));
    const auto branch_orders = wsz::regular_branch_orders(table);
    const auto tree_orders = wsz::regular_orders(wsz::OrderKind::Tree, static_cast<std::size_t>(max_n));
    const auto reports = wsz::conjecture_sweep(2, max_n, branch_orders);
    auto doc = wsz::conjecture_document(reports);
    doc["regularBranchOrders"] = branch_orders;
    doc["regularTreeOrders"] = tree_orders;
    emit(json, doc.dump(2));
    emit(text, wsz::format_conjectures(reports) + "regular branch orders: " + join(branch_orders) +
                   "\nregular tree orders:   " + join(tree_orders) + "\n");
  });
}

wsz_status wsz_verify(size_t tree_max, size_t branch_max, int* passed, char** json, char** text) {
  return guarded([&] {
    require(passed, "passed");
    wsz::VerifyOptions opts;
    opts.tree_max = tree_max;
    opts.branch_max = branch_max;
    const auto report = wsz::run_verification(opts);
    *passed = report.all_passed() ? 1 : 0;
    wsz::Json checks = wsz::Json::array();
    std::ostringstream out;
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    out << (*passed ? "all checks passed\n" : "some checks FAILED\n");
    emit(json, wsz::Json{{"schemaVersion", wsz::kSchemaVersion}, {"mode", "verify"}, {"passed", *passed != 0},
                         {"checks", checks}}
                   .dump(2));
    emit(text, out.str());
  });
}

wsz_status wsz_order326(int64_t n_lo, int64_t n_hi, int64_t step, const wsz_run_options* options, char** json,
                        char** text) {
  return guarded([&] {
    const auto report = wsz::regular_vs_optimal_326(n_lo, n_hi, step, {{}, jobs_of(options)});
    wsz::Json rows = wsz::Json::array();
    for (const auto& r : report.rows)
      rows.push_back({{"n", r.n},
                      {"candidateCost", std::to_string(r.candidate_cost)},
                      {"regularCost", std::to_string(r.regular_cost)},
                      {"regularShapeCost", std::to_string(r.regular_shape_cost)},
                      {"optimumCost", std::to_string(r.optimum_cost)},
                      {"optimum", r.optimum},
                      {"optimumRegular", r.optimum_regular}});
    wsz::Json doc{{"schemaVersion", wsz::kSchemaVersion}, {"mode", "order326"}, {"nLo", report.n_lo},
                  {"nHi", report.n_hi}, {"rows", rows}};
    doc["tailStart"] = report.tail_start ? wsz::Json(*report.tail_start) : wsz::Json();
    doc["lastRegularWin"] = report.last_regular_win ? wsz::Json(*report.last_regular_win) : wsz::Json();
    emit(json, doc.dump(2));
    std::ostringstream out;
    out << "size-326 branch, n = " << report.n_lo << ".." << report.n_hi << " step " << step << '\n';
    if (report.tail_start)
      out << "children 103, 103, 119 beat five children of order 65 for every scanned n >= " << *report.tail_start
          << '\n';
    else
      out << "children 103, 103, 119 do not win on a tail of the scanned range\n";
    if (report.last_regular_win) out << "last scanned n where the regular branch is no worse: " << *report.last_regular_win << '\n';
    std::size_t non_regular = 0;
    for (const auto& r : report.rows) non_regular += !r.optimum_regular;
    out << "non-regular DP optimum at " << non_regular << " of " << report.rows.size() << " scanned orders\n";
    emit(text, out.str());
  });
}

wsz_status wsz_kary_estimate(double n, unsigned k, double* out) {
  return guarded([&] {
    require(out, "out");
    if (n < 2 || k < 2) throw wsz::DomainError("k-ary estimate needs n >= 2 and k >= 2");
    *out = wsz::kary_estimate(n, k);
  });
}

} // extern "C"
