#include "qgraph/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

int line_of(const YAML::Node& n) { return n.Mark().line + 1; }

[[noreturn]] void fail(const std::string& what, const YAML::Node& n) { throw ValidationError(what, line_of(n)); }

std::string scalar(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail(what + " must be a scalar", n);
  return n.Scalar();
}

Rational number(const YAML::Node& n, const std::string& what) {
  const std::string s = scalar(n, what);
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    fail(what + ": '" + s + "' is not a number", n);
  }
}

std::int64_t integer(const YAML::Node& n, const std::string& what) {
  const Rational r = number(n, what);
  if (!r.is_integer()) fail(what + " must be an integer", n);
  return r.num();
}

void check_keys(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (!allowed.contains(key)) fail("unknown key '" + key + "' in " + where, kv.first);
  }
}

std::map<std::string, Rational> weight_map(const YAML::Node& n, const std::string& what) {
  std::map<std::string, Rational> out;
  if (!n) return out;
  if (!n.IsMap()) fail(what + " weights must be a mapping", n);
  for (const auto& kv : n) out[scalar(kv.first, what + " id")] = number(kv.second, what + " weight");
  return out;
}

}  // namespace

GraphSpec parse_graph(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ValidationError(e.msg, e.mark.line + 1);
  }
  if (!root.IsMap()) throw ValidationError("graph document must be a mapping", root ? line_of(root) : 1);
  check_keys(root, {"vertices", "edges", "boundary", "weights"}, "graph document");

  GraphSpec spec;
  const YAML::Node vs = root["vertices"];
  if (!vs) throw ValidationError("missing 'vertices'", 1);
  if (!vs.IsSequence()) fail("'vertices' must be a list", vs);
  for (const auto& v : vs) {
    spec.vertices.push_back(scalar(v, "vertex id"));
    spec.vertex_lines.push_back(line_of(v));
  }

  const YAML::Node es = root["edges"];
  if (es && !es.IsSequence()) fail("'edges' must be a list", es);
  if (es) {
    std::size_t pos = 0;
    for (const auto& e : es) {
      ++pos;
      if (!e.IsMap()) fail("edge must be a mapping", e);
      check_keys(e, {"id", "tail", "head", "label", "length", "multiplicity"}, "edge");
      EdgeSpec s;
      s.line = line_of(e);
      s.id = e["id"] ? scalar(e["id"], "edge id") : "e" + std::to_string(pos);
      if (!e["tail"] || !e["head"]) fail("edge '" + s.id + "' needs tail and head", e);
      s.tail = scalar(e["tail"], "tail");
      s.head = scalar(e["head"], "head");
      if (const YAML::Node l = e["label"]) {
        if (!l.IsSequence()) fail("label must be a list of integers", l);
        for (const auto& x : l) s.label.push_back(integer(x, "label entry"));
      }
      if (e["length"]) s.length = number(e["length"], "length");
      if (e["multiplicity"]) {
        const std::int64_t m = integer(e["multiplicity"], "multiplicity");
        if (m < 1 || m > 1000) fail("multiplicity must lie in 1..1000", e["multiplicity"]);
        s.multiplicity = static_cast<int>(m);
      }
      spec.edges.push_back(std::move(s));
    }
  }

  if (const YAML::Node b = root["boundary"]) {
    if (!b.IsSequence()) fail("'boundary' must be a list", b);
    for (const auto& v : b) spec.boundary.push_back(scalar(v, "boundary vertex"));
  }

  if (const YAML::Node w = root["weights"]) {
    if (!w.IsMap()) fail("'weights' must be a mapping", w);
    check_keys(w, {"mode", "vertex", "edge"}, "weights");
    const std::string mode = w["mode"] ? scalar(w["mode"], "weight mode") : "standard";
    if (mode == "standard") {
      if (w["vertex"] || w["edge"]) fail("standard weights take no explicit values", w);
    } else if (mode == "explicit") {
      spec.weight_mode = WeightMode::Explicit;
      spec.vertex_weights = weight_map(w["vertex"], "vertex");
      spec.edge_weights = weight_map(w["edge"], "edge");
    } else {
      fail("weight mode must be 'standard' or 'explicit'", w["mode"]);
    }
  }
  return spec;
}

GraphSpec load_graph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot read '" + file.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const GraphSpec& spec) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "vertices" << YAML::Value << YAML::Flow << spec.vertices;
  out << YAML::Key << "edges" << YAML::Value << YAML::BeginSeq;
  for (const EdgeSpec& e : spec.edges) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << e.id;
    out << YAML::Key << "tail" << YAML::Value << e.tail;
    out << YAML::Key << "head" << YAML::Value << e.head;
    if (!e.label.empty()) out << YAML::Key << "label" << YAML::Value << YAML::Flow << e.label;
    if (e.length != Rational(1)) out << YAML::Key << "length" << YAML::Value << e.length.str();
    if (e.multiplicity != 1) out << YAML::Key << "multiplicity" << YAML::Value << e.multiplicity;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  if (!spec.boundary.empty()) out << YAML::Key << "boundary" << YAML::Value << YAML::Flow << spec.boundary;
  if (spec.weight_mode == WeightMode::Explicit) {
    out << YAML::Key << "weights" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "mode" << YAML::Value << "explicit";
    for (const auto& [key, m] : {std::pair{"vertex", &spec.vertex_weights}, std::pair{"edge", &spec.edge_weights}}) {
      out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginMap;
      for (const auto& [id, w] : *m) out << YAML::Key << id << YAML::Value << w.str();
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

GraphSpec strip_lines(GraphSpec s) {
  for (auto& l : s.vertex_lines) l.reset();
  for (auto& e : s.edges) e.line.reset();
  return s;
}

}  // namespace qgraph
