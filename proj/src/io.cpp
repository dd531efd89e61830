#include "ashg/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "ashg/error.hpp"

namespace ashg::io {

namespace {

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

void expect_format(const Json& j, const char* format) {
  const auto got = required<std::string>(j, "format");
  if (got != format) throw ParseError("expected format '" + std::string(format) + "', got '" + got + "'");
}

}  // namespace

Json meta_to_json(const InstanceMeta& meta) {
  Json j;
  j["kind"] = std::string(to_string(meta.kind));
  j["n"] = meta.n;
  if (meta.p) j["p"] = *meta.p;
  if (meta.k) j["k"] = *meta.k;
  if (meta.q) j["q"] = *meta.q;
  if (!meta.class_sizes.empty()) j["class_sizes"] = meta.class_sizes;
  j["seed"] = meta.seed;
  if (meta.v_minus) j["v_minus"] = *meta.v_minus;
  return j;
}

InstanceMeta meta_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("meta must be an object");
  InstanceMeta meta;
  meta.kind = model_kind_from_string(required<std::string>(j, "kind"));
  meta.n = required<std::size_t>(j, "n");
  if (j.contains("p")) meta.p = required<double>(j, "p");
  if (j.contains("k")) meta.k = required<std::size_t>(j, "k");
  if (j.contains("q")) meta.q = required<double>(j, "q");
  if (j.contains("class_sizes")) meta.class_sizes = required<std::vector<std::size_t>>(j, "class_sizes");
  if (j.contains("seed")) meta.seed = required<std::uint64_t>(j, "seed");
  if (j.contains("v_minus")) meta.v_minus = required<std::int64_t>(j, "v_minus");
  return meta;
}

Json game_to_json(const ValuationMatrix& game) {
  Json j;
  j["format"] = "ashg-v1";
  j["n"] = game.n();
  j["mode"] = game.is_integer() ? "int" : "real";
  if (game.is_integer() && game.unit() != 1) j["unit"] = game.unit();
  j["symmetric"] = game.symmetric();
  if (game.is_integer())
    j["weights"] = game.int_weights();
  else
    j["weights"] = game.real_weights();
  j["meta"] = meta_to_json(game.meta());
  return j;
}

ValuationMatrix game_from_json(const Json& j) {
  expect_format(j, "ashg-v1");
  const auto n = required<std::size_t>(j, "n");
  const auto mode = required<std::string>(j, "mode");
  const bool symmetric = required<bool>(j, "symmetric");
  InstanceMeta meta;
  if (j.contains("meta")) meta = meta_from_json(j.at("meta"));
  if (meta.n != 0 && meta.n != n) throw ParseError("meta.n does not match n");
  if (meta.is_multipartite()) {
    std::size_t total = 0;
    for (std::size_t s : meta.class_sizes) total += s;
    if (total != n) throw ParseError("class_sizes do not sum to n");
  }
  try {
    if (mode == "int") {
      const auto unit = j.contains("unit") ? required<std::int64_t>(j, "unit") : 1;
      auto weights = required<std::vector<std::int64_t>>(j, "weights");
      return symmetric ? ValuationMatrix::symmetric_int(n, std::move(weights), unit, meta)
                       : ValuationMatrix::asymmetric_int(n, std::move(weights), unit, meta);
    }
    if (mode == "real") {
      auto weights = required<std::vector<double>>(j, "weights");
      return symmetric ? ValuationMatrix::symmetric_real(n, std::move(weights), meta)
                       : ValuationMatrix::asymmetric_real(n, std::move(weights), meta);
    }
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("mode must be 'int' or 'real'");
}

Json partition_to_json(const Partition& pi) {
  Json j;
  j["format"] = "part-v1";
  j["assignment"] = pi.assignment();
  return j;
}

std::vector<long long> raw_assignment_from_json(const Json& j) {
  expect_format(j, "part-v1");
  return required<std::vector<long long>>(j, "assignment");
}

Partition partition_from_json(const Json& j) {
  const auto raw = raw_assignment_from_json(j);
  if (raw.empty()) throw ParseError("empty assignment");
  std::vector<std::size_t> labels;
  labels.reserve(raw.size());
  for (long long v : raw) {
    if (v < 0) throw ParseError("assignment labels must be nonnegative");
    labels.push_back(static_cast<std::size_t>(v));
  }
  return Partition(labels);
}

Json welfare_to_json(const Welfare& w) {
  if (w.is_exact() && w.is_integral()) return Json(w.as_integer());
  return Json(w.to_double());
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

SimpleGraph read_dimacs(std::istream& in) {
  std::optional<SimpleGraph> g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      std::size_t n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
        throw ParseError("line " + std::to_string(line_no) + ": bad problem line");
      g.emplace(n);
    } else if (tag == "e") {
      std::size_t u = 0, v = 0;
      if (!g) throw ParseError("line " + std::to_string(line_no) + ": edge before problem line");
      if (!(ls >> u >> v) || u == 0 || v == 0 || u > g->n_vertices() || v > g->n_vertices())
        throw ParseError("line " + std::to_string(line_no) + ": bad edge");
      if (u != v) g->add_edge(u - 1, v - 1);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown tag '" + tag + "'");
    }
  }
  if (!g) throw ParseError("missing 'p edge' line");
  return *g;
}

std::string write_dimacs(const SimpleGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.n_vertices() << ' ' << g.edges().size() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace ashg::io
