// Command-line front end. Links only the C API of libwszeged.
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wszeged/wszeged.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct CString {
  char* ptr = nullptr;
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { wsz_string_free(ptr); }
  char** out() { return &ptr; }
  std::string str() const { return ptr ? ptr : ""; }
};

struct GraphDeleter {
  void operator()(wsz_graph* g) const { wsz_graph_free(g); }
};
struct BranchDeleter {
  void operator()(wsz_branch* b) const { wsz_branch_free(b); }
};
struct TableDeleter {
  void operator()(wsz_branch_table* t) const { wsz_branch_table_free(t); }
};

// Thrown once a C call failed; carries the process exit code.
struct Failure {
  int code;
};

void check(wsz_status status) {
  if (const char* notices = wsz_last_notices(); notices && *notices) std::cerr << "notice: " << notices << '\n';
  if (status == WSZ_OK) return;
  std::cerr << "error (" << wsz_status_name(status) << "): " << wsz_last_error() << '\n';
  throw Failure{status == WSZ_ERR_INTERNAL ? kExitInternal : kExitInput};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    throw Failure{kExitInput};
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    throw Failure{kExitInput};
  }
}

struct Globals {
  std::optional<std::string> cache;
  unsigned jobs = 1;

  wsz_run_options options() const { return {cache ? cache->c_str() : nullptr, jobs}; }
};

bool is_sizes_shorthand(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && std::isdigit(static_cast<unsigned char>(text[pos]));
}

wsz_branch* read_branch(const std::string& text, long long n) {
  wsz_branch* b = nullptr;
  if (is_sizes_shorthand(text))
    check(wsz_branch_from_sizes(text.c_str(), n, &b));
  else
    check(wsz_branch_parse(text.c_str(), &b));
  return b;
}

int cmd_compute(const std::string& input, const std::string& index, const std::string& format) {
  const std::string text = read_input(input);
  std::unique_ptr<wsz_graph, GraphDeleter> graph;
  wsz_graph* g = nullptr;
  if (format == "edgelist") {
    check(wsz_graph_parse_edge_list(text.c_str(), &g));
  } else {
    std::unique_ptr<wsz_branch, BranchDeleter> branch(read_branch(text, 0));
    check(wsz_branch_to_graph(branch.get(), 0, &g));
  }
  graph.reset(g);
  CString value;
  check(wsz_graph_index_string(g, index.c_str(), value.out()));
  std::cout << value.str() << '\n';
  return kExitOk;
}

int cmd_branch_cost(const std::string& input, std::optional<long long> n) {
  const std::string text = read_input(input);
  if (is_sizes_shorthand(text) && !n) {
    std::cerr << "error: children-size shorthand needs --n\n";
    throw Failure{kExitInput};
  }
  std::unique_ptr<wsz_branch, BranchDeleter> branch(read_branch(text, n.value_or(0)));
  wsz_branch* b = branch.get();
  int64_t slope = 0;
  int64_t intercept = 0;
  check(wsz_branch_cost(b, &slope, &intercept));
  std::cout << slope << "n" << (intercept < 0 ? "" : "+") << intercept;
  if (n) {
    int64_t value = 0;
    check(wsz_branch_cost_at(b, *n, &value));
    std::cout << " = " << value << " at n=" << *n;
  }
  std::cout << '\n';
  return kExitOk;
}

int cmd_optimal_tree(long long n, bool json, const std::string& dot_path) {
  CString js;
  CString text;
  CString dot;
  check(wsz_optimal_tree(n, js.out(), text.out(), dot_path.empty() ? nullptr : dot.out()));
  std::cout << (json ? js.str() + "\n" : text.str());
  if (!dot_path.empty()) write_file(dot_path, dot.str());
  return kExitOk;
}

int cmd_optimal_branch(std::size_t size, long long n, bool json) {
  wsz_branch_table* t = nullptr;
  check(wsz_branch_table_new(n, size, &t));
  std::unique_ptr<wsz_branch_table, TableDeleter> table(t);
  CString js;
  CString text;
  check(wsz_branch_table_record(t, size, js.out(), text.out()));
  std::cout << (json ? js.str() + "\n" : text.str());
  return kExitOk;
}

void emit_document(const CString& text, const CString& js, bool json, const std::string& out_prefix) {
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".txt", text.str());
    write_file(out_prefix + ".json", js.str() + "\n");
  }
  std::cout << (json ? js.str() + "\n" : text.str());
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted Szeged index toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--cache", globals.cache, "Result cache file (default: $WSZ_CACHE_DIR/wszeged-cache.json; '' disables)");
  app.add_option("--jobs", globals.jobs, "Worker threads for scans")->check(CLI::Range(1u, 256u));

  std::string input = "-";
  std::string index = "wsz";
  std::string format = "edgelist";
  auto* compute = app.add_subcommand("compute", "Szeged or weighted Szeged index of a graph");
  compute->add_option("input", input, "Input file, '-' for stdin");
  compute->add_option("--index", index, "Index to compute")->check(CLI::IsMember({"wsz", "sz"}));
  compute->add_option("--format", format, "Input format (branch also accepts children sizes, e.g. 16,16,16,18)")->check(CLI::IsMember({"edgelist", "branch"}));

  std::optional<long long> cost_n;
  auto* branch_cost = app.add_subcommand("branch-cost", "Affine cost of an ending branch in parenthesis notation");
  branch_cost->add_option("input", input, "Input file, '-' for stdin");
  branch_cost->add_option("--n", cost_n, "Evaluate at this tree order");

  long long n = 0;
  bool json = false;
  std::string dot_path;
  auto* tree = app.add_subcommand("optimal-tree", "Minimum weighted Szeged index tree");
  tree->add_option("--n", n, "Number of vertices")->required();
  tree->add_flag("--json", json, "Print the JSON record");
  tree->add_option("--dot", dot_path, "Write a Graphviz drawing of the tree");

  std::size_t size = 0;
  auto* branch = app.add_subcommand("optimal-branch", "Minimal ending branch of a given size");
  branch->add_option("--size", size, "Branch order")->required();
  branch->add_option("--n", n, "Tree order")->required();
  branch->add_flag("--json", json, "Print the JSON record");

  bool branches = false;
  bool trees = false;
  std::size_t max_size = 80;
  long long n_max = 1200;
  long long max_n = 81;
  std::string out_prefix;
  auto* tables = app.add_subcommand("tables", "Tables of minimal branches or optimal trees");
  auto* kind = tables->add_option_group("kind");
  kind->add_flag("--branches", branches, "Minimal ending branches with thresholds");
  kind->add_flag("--trees", trees, "Minimum weighted Szeged trees");
  kind->require_option(1);
  tables->add_option("--max-size", max_size, "Largest branch order");
  tables->add_option("--n-max", n_max, "Largest tree order scanned for thresholds");
  tables->add_option("--max", max_n, "Largest tree order");
  tables->add_flag("--json", json, "Print JSON instead of text");
  tables->add_option("--out", out_prefix, "Also write PREFIX.txt and PREFIX.json");

  bool oracle = false;
  std::size_t tree_max = 16;
  std::size_t branch_max = 12;
  auto* verify = app.add_subcommand("verify", "Compare the DP with exhaustive search and check invariants");
  verify->add_flag("--oracle", oracle, "Run the exhaustive oracle comparison (always on)");
  verify->add_option("--tree-max", tree_max, "Largest tree order for the oracle");
  verify->add_option("--branch-max", branch_max, "Largest branch order for the oracle");
  verify->add_flag("--json", json, "Print JSON instead of text");

  auto* conjectures = app.add_subcommand("conjectures", "Structural conjectures over optimal trees");
  conjectures->add_option("--max", max_n, "Largest tree order");
  conjectures->add_flag("--json", json, "Print JSON instead of text");

  long long from = 330;
  long long to = 2000;
  long long step = 1;
  auto* order326 = app.add_subcommand("order326", "Regular versus optimal branches of order 326");
  order326->add_option("--from", from, "First tree order");
  order326->add_option("--to", to, "Last tree order");
  order326->add_option("--step", step, "Scan step");
  order326->add_flag("--json", json, "Print JSON instead of text");

  double kary_n = 1e6;
  unsigned k_max = 10;
  auto* kary = app.add_subcommand("kary", "Asymptotic estimate for complete k-ary trees");
  kary->add_option("--n", kary_n, "Number of vertices");
  kary->add_option("--k-max", k_max, "Largest branching factor")->check(CLI::Range(2u, 1000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const wsz_run_options options = globals.options();
    if (*compute) return cmd_compute(input, index, format);
    if (*branch_cost) return cmd_branch_cost(input, cost_n);
    if (*tree) return cmd_optimal_tree(n, json, dot_path);
    if (*branch) return cmd_optimal_branch(size, n, json);
    if (*tables) {
      CString js;
      CString text;
      if (branches)
        check(wsz_threshold_table(max_size, n_max, &options, js.out(), text.out()));
      else
        check(wsz_tree_table(max_n, &options, js.out(), text.out()));
      emit_document(text, js, json, out_prefix);
      return kExitOk;
    }
    if (*verify) {
      int passed = 0;
      CString js;
      CString text;
      check(wsz_verify(tree_max, branch_max, &passed, js.out(), text.out()));
      std::cout << (json ? js.str() + "\n" : text.str());
      return passed ? kExitOk : kExitInternal;
    }
    if (*conjectures) {
      CString js;
      CString text;
      check(wsz_conjectures(max_n, &options, js.out(), text.out()));
      std::cout << (json ? js.str() + "\n" : text.str());
      return kExitOk;
    }
    if (*order326) {
      CString js;
      CString text;
      check(wsz_order326(from, to, step, &options, js.out(), text.out()));
      std::cout << (json ? js.str() + "\n" : text.str());
      return kExitOk;
    }
    if (*kary) {
      unsigned best = 2;
      double best_value = 0;
      for (unsigned k = 2; k <= k_max; ++k) {
        double value = 0;
        check(wsz_kary_estimate(kary_n, k, &value));
        std::cout << "k=" << k << "  estimate " << value << '\n';
        if (k == 2 || value < best_value) {
          best = k;
          best_value = value;
        }
      }
      std::cout << "minimized at k=" << best << '\n';
      return kExitOk;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitInternal;
}
