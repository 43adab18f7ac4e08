#include "wszeged/records.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace wsz {

namespace {

std::string join(const Structure& s, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

std::string structure_shape(const BranchTable& table, const Structure& children) {
  std::vector<BranchShape> parts;
  for (auto x : children) parts.push_back(table.shape(x));
  return print_branch(BranchShape(std::move(parts)));
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Int parse_cost(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError("cost '" + s + "' is not an integer");
  }
  if (used != s.size()) throw ParseError("cost '" + s + "' is not an integer");
  return v;
}

} // namespace

ResultRecord tree_record(const OptimalTree& tree) {
  if (tree.classes.empty()) throw ValidationError("optimal tree has no materialized class");
  ResultRecord r;
  r.mode = "tree";
  r.n = tree.n;
  r.size = static_cast<std::size_t>(tree.n);
  r.cost = std::to_string(tree.cost);
  const auto& first = tree.classes.front();
  r.child_count = first.representative.size();
  r.children_sizes = first.representative;
  r.shape = print_branch(branch_shape_of(first.tree, first.tree.root()));
  r.rootings = first.max_degree_rootings;
  for (std::size_t i = 1; i < tree.classes.size(); ++i) {
    const auto& c = tree.classes[i];
    r.ties.push_back({c.representative, print_branch(branch_shape_of(c.tree, c.tree.root())), c.max_degree_rootings});
  }
  r.root_structures = tree.root_structures;
  return r;
}

ResultRecord branch_record(const BranchTable& table, std::size_t m) {
  ResultRecord r;
  r.mode = "branch";
  r.n = table.total_order();
  r.size = m;
  r.cost = std::to_string(table.cost(m));
  const auto& structures = table.structures(m);
  r.children_sizes = structures.front();
  r.child_count = r.children_sizes.size();
  r.shape = structure_shape(table, r.children_sizes);
  for (std::size_t i = 1; i < structures.size(); ++i)
    r.ties.push_back({structures[i], structure_shape(table, structures[i]), {}});
  r.root_structures = structures;
  return r;
}

Json to_json(const ResultRecord& r) {
  Json ties = Json::array();
  for (const auto& t : r.ties)
    ties.push_back({{"childrenSizes", t.children_sizes}, {"shape", t.shape}, {"rootings", t.rootings}});
  return {{"schemaVersion", r.schema_version},
          {"mode", r.mode},
          {"n", r.n},
          {"size", r.size},
          {"cost", r.cost},
          {"childCount", r.child_count},
          {"rootDegree", r.root_degree()},
          {"childrenSizes", r.children_sizes},
          {"shape", r.shape},
          {"rootings", r.rootings},
          {"ties", ties},
          {"rootStructures", r.root_structures}};
}

ResultRecord record_from_json(const Json& j) {
  ResultRecord r;
  r.schema_version = field<int>(j, "schemaVersion");
  if (r.schema_version != kSchemaVersion)
    throw ParseError("schema version " + std::to_string(r.schema_version) + " is not supported");
  r.mode = field<std::string>(j, "mode");
  if (r.mode != "tree" && r.mode != "branch") throw ParseError("unknown record mode '" + r.mode + "'");
  r.n = field<Int>(j, "n");
  r.size = field<std::size_t>(j, "size");
  r.cost = field<std::string>(j, "cost");
  parse_cost(r.cost);
  r.child_count = field<std::size_t>(j, "childCount");
  r.children_sizes = field<Structure>(j, "childrenSizes");
  r.shape = field<std::string>(j, "shape");
  for (const auto& t : field<Json>(j, "ties"))
    r.ties.push_back({field<Structure>(t, "childrenSizes"), field<std::string>(t, "shape"),
                      field<std::vector<Structure>>(t, "rootings")});
  r.rootings = field<std::vector<Structure>>(j, "rootings");
  r.root_structures = field<std::vector<Structure>>(j, "rootStructures");
  if (r.child_count != r.children_sizes.size()) throw ParseError("childCount disagrees with childrenSizes");
  const BranchShape shape = parse_branch(r.shape);
  if (shape.children_sizes() != r.children_sizes) throw ParseError("shape disagrees with childrenSizes");
  return r;
}

Json to_json(const ThresholdTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"size", row.size},
                    {"threshold", row.threshold},
                    {"childCount", row.child_count()},
                    {"rootDegree", row.child_count() + 1},
                    {"childrenSizes", row.children},
                    {"starred", row.starred},
                    {"certified", row.certified},
                    {"envelopeThreshold", row.envelope_threshold ? Json(*row.envelope_threshold) : Json()},
                    {"lastBreakpoint", {row.last_breakpoint.num(), row.last_breakpoint.den()}}});
  }
  return {{"schemaVersion", kSchemaVersion}, {"mode", "threshold"}, {"maxSize", t.max_size},
          {"nMax", t.n_max},                 {"rows", rows},        {"warnings", t.warnings}};
}

ThresholdTable threshold_table_from_json(const Json& j) {
  if (field<int>(j, "schemaVersion") != kSchemaVersion) throw ParseError("unsupported schema version");
  if (field<std::string>(j, "mode") != "threshold") throw ParseError("not a threshold table");
  ThresholdTable t;
  t.max_size = field<std::size_t>(j, "maxSize");
  t.n_max = field<Int>(j, "nMax");
  t.warnings = field<std::vector<std::string>>(j, "warnings");
  for (const auto& row : field<Json>(j, "rows")) {
    ThresholdRow r;
    r.size = field<std::size_t>(row, "size");
    r.threshold = field<Int>(row, "threshold");
    r.children = field<Structure>(row, "childrenSizes");
    r.starred = field<bool>(row, "starred");
    r.certified = field<bool>(row, "certified");
    if (!row.at("envelopeThreshold").is_null()) r.envelope_threshold = field<Int>(row, "envelopeThreshold");
    const auto bp = field<std::vector<Int>>(row, "lastBreakpoint");
    if (bp.size() != 2 || bp[1] <= 0) throw ParseError("malformed breakpoint");
    r.last_breakpoint = Rational(bp[0], bp[1]);
    t.rows.push_back(std::move(r));
  }
  return t;
}

Json to_json(const ConjectureReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"n", w.n}, {"path", w.path}, {"detail", w.detail}});
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  return {{"id", r.id},
          {"range", r.range},
          {"verdict", r.holds ? "holds" : "fails"},
          {"witnesses", witnesses},
          {"counts", counts}};
}

Json conjecture_document(const std::vector<ConjectureReport>& reports) {
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  return {{"schemaVersion", kSchemaVersion}, {"mode", "conjecture"}, {"reports", list}};
}

Json tree_table_document(const std::vector<ResultRecord>& rows) {
  Json list = Json::array();
  for (const auto& r : rows) list.push_back(to_json(r));
  return {{"schemaVersion", kSchemaVersion}, {"mode", "tree-table"}, {"rows", list}};
}

std::vector<ResultRecord> tree_table_from_json(const Json& j) {
  if (field<int>(j, "schemaVersion") != kSchemaVersion) throw ParseError("unsupported schema version");
  if (field<std::string>(j, "mode") != "tree-table") throw ParseError("not a tree table");
  std::vector<ResultRecord> rows;
  for (const auto& r : field<Json>(j, "rows")) rows.push_back(record_from_json(r));
  return rows;
}

std::string format_threshold_table(const ThresholdTable& t) {
  std::ostringstream out;
  out << std::setw(5) << "n_v" << " | " << std::setw(5) << "n >=" << " | " << std::setw(8) << "children"
      << " | " << std::setw(6) << "degree" << " | children sizes\n";
  for (const auto& row : t.rows) {
    std::string label = std::to_string(row.size) + (row.starred ? "*" : "");
    out << std::setw(5) << label << " | " << std::setw(5) << row.threshold << " | " << std::setw(8)
        << row.child_count() << " | " << std::setw(6) << row.child_count() + 1 << " | " << join(row.children)
        << (row.certified ? "" : "  (uncertified)") << '\n';
  }
  for (const auto& w : t.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string format_tree_table(const std::vector<ResultRecord>& rows) {
  std::ostringstream out;
  out << std::setw(5) << "n" << " | " << std::setw(6) << "degree" << " | " << std::setw(10) << "cost"
      << " | children sizes\n";
  auto line = [&](const std::string& label, const ResultRecord& r, const Structure& children,
                  const std::vector<Structure>& rootings) {
    out << std::setw(5) << label << " | " << std::setw(6) << children.size() << " | " << std::setw(10) << r.cost
        << " | " << join(children);
    std::string others;
    for (const auto& s : rootings)
      if (s != children) others += (others.empty() ? "" : "; ") + join(s);
    if (!others.empty()) out << "   (also rooted as " << others << ")";
    out << '\n';
  };
  for (const auto& r : rows) {
    line(std::to_string(r.n), r, r.children_sizes, r.rootings);
    for (const auto& tie : r.ties) line(std::to_string(r.n) + "*", r, tie.children_sizes, tie.rootings);
  }
  return out.str();
}

std::string format_record(const ResultRecord& r) {
  std::ostringstream out;
  if (r.mode == "tree")
    out << "optimal tree on " << r.n << " vertices\n";
  else
    out << "minimal branch of size " << r.size << " in a tree of order " << r.n << '\n';
  out << "  cost:        " << r.cost << '\n';
  out << "  child count: " << r.child_count << '\n';
  out << "  root degree: " << r.root_degree() << '\n';
  out << "  children:    " << join(r.children_sizes) << '\n';
  out << "  shape:       " << r.shape << '\n';
  for (const auto& s : r.rootings)
    if (s != r.children_sizes) out << "  also rooted: " << join(s) << '\n';
  for (const auto& t : r.ties) out << "  tie:         " << join(t.children_sizes) << "  " << t.shape << '\n';
  return out.str();
}

std::string format_conjectures(const std::vector<ConjectureReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << " [" << r.range << "]: " << (r.holds ? "holds" : "fails");
    for (const auto& [k, v] : r.counts) out << "  " << k << "=" << v;
    out << '\n';
    for (const auto& w : r.witnesses) {
      out << "  witness n=" << w.n << " path";
      for (auto v : w.path) out << ' ' << v;
      out << ": " << w.detail << '\n';
    }
  }
  return out.str();
}

std::string to_dot(const RootedTree& tree, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < tree.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << tree.degree(v) << "\"" << (v == tree.root() ? ", style=bold" : "")
        << "];\n";
  for (Vertex v : tree.bfs_order())
    if (auto p = tree.parent(v)) out << "  " << *p << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return; // cold cache
  try {
    const Json doc = Json::parse(in);
    if (!doc.is_object() || doc.value("format", "") != "wszeged-cache") {
      notices_.push_back("cache " + path_.string() + " is not a result cache; recomputing");
    } else if (doc.value("schemaVersion", -1) != kSchemaVersion) {
      notices_.push_back("cache " + path_.string() + " has an outdated version; recomputing");
    } else {
      entries_ = doc.at("entries");
      if (!entries_.is_object()) throw ParseError("entries must be an object");
    }
  } catch (const std::exception&) {
    entries_ = Json::object();
    notices_.push_back("cache " + path_.string() + " is corrupt; recomputing");
  }
}

std::optional<std::filesystem::path> ResultCache::default_path() {
  const char* dir = std::getenv("WSZ_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "wszeged-cache.json";
}

std::optional<Json> ResultCache::get(const std::string& key) const {
  if (!enabled() || !entries_.contains(key)) return std::nullopt;
  return entries_.at(key);
}

void ResultCache::put(const std::string& key, Json value) {
  if (!enabled()) return;
  entries_[key] = std::move(value);
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  const auto tmp = path_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache " + path_.string());
    out << Json{{"format", "wszeged-cache"}, {"schemaVersion", kSchemaVersion}, {"entries", entries_}}.dump(1)
        << '\n';
    if (!out) throw Error("cannot write cache " + path_.string());
  }
  std::filesystem::rename(tmp, path_);
}

} // namespace wsz
