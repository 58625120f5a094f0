#include "localflow/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "localflow/errors.hpp"

namespace localflow {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw InputError("field '" + where + "': expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw InputError("missing field '" + where + name + "'");
  return *it;
}

std::int64_t int_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_integer()) {
    throw InputError("field '" + where + name + "': expected an integer");
  }
  return v.get<std::int64_t>();
}

const json& array_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_array()) throw InputError("field '" + where + name + "': expected an array");
  return v;
}

Color parse_color(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "R") return Color::kRegular;
    if (s == "S") return Color::kSource;
    if (s == "T") return Color::kTarget;
  }
  throw InputError("field '" + where + "color': expected \"R\", \"S\" or \"T\"");
}

}  // namespace

json graph_to_json(const ColoredGraph& g, const std::optional<InstanceMetadata>& meta) {
  json nodes = json::array();
  for (const auto& n : g.nodes()) {
    nodes.push_back({{"id", n.id}, {"color", std::string(1, color_letter(n.color))}});
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(
        {{"id", e.id}, {"a", e.a}, {"b", e.b}, {"cap_ab", e.cap_ab}, {"cap_ba", e.cap_ba}});
  }
  json out = {
      {"quantum", std::to_string(g.quantum().numerator()) + "/" +
                      std::to_string(g.quantum().denominator())},
      {"degree_bound", g.degree_bound()},
      {"capacity_bound_ticks", g.capacity_bound()},
      {"nodes", std::move(nodes)},
      {"edges", std::move(edges)},
  };
  if (meta) {
    json m = {{"family", meta->family}, {"gen_seed", meta->gen_seed}};
    if (meta->known_max_flow) m["known_max_flow"] = *meta->known_max_flow;
    out["metadata"] = std::move(m);
  }
  return out;
}

GraphDocument graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph document must be a JSON object");
  const json& q = field(j, "quantum", "");
  if (!q.is_string()) throw InputError("field 'quantum': expected a string \"p/q\"");
  Rational quantum;
  try {
    quantum = parse_rational(q.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(std::string("field 'quantum': ") + e.what());
  }
  if (quantum <= 0) throw InputError("field 'quantum': must be positive");

  const auto degree_bound = int_field(j, "degree_bound", "");
  const auto capacity_bound = int_field(j, "capacity_bound_ticks", "");
  if (degree_bound < 1 || degree_bound > (1 << 20)) {
    throw InputError("field 'degree_bound': must be a positive integer");
  }
  if (capacity_bound < 1) throw InputError("field 'capacity_bound_ticks': must be positive");

  std::vector<NodeSpec> nodes;
  const json& jn = array_field(j, "nodes", "");
  for (std::size_t i = 0; i < jn.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "].";
    nodes.push_back({int_field(jn[i], "id", where), parse_color(field(jn[i], "color", where), where)});
  }
  std::vector<EdgeSpec> edges;
  const json& je = array_field(j, "edges", "");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "].";
    edges.push_back({int_field(je[i], "id", where), int_field(je[i], "a", where),
                     int_field(je[i], "b", where), int_field(je[i], "cap_ab", where),
                     int_field(je[i], "cap_ba", where)});
  }

  GraphDocument doc{ColoredGraph(std::move(nodes), std::move(edges),
                                 static_cast<int>(degree_bound), capacity_bound, quantum),
                    std::nullopt};
  if (const auto it = j.find("metadata"); it != j.end() && it->is_object()) {
    InstanceMetadata meta;
    if (const auto f = it->find("family"); f != it->end() && f->is_string()) {
      meta.family = f->get<std::string>();
    }
    if (const auto s = it->find("gen_seed"); s != it->end() && s->is_number_integer()) {
      meta.gen_seed = s->get<std::uint64_t>();
    }
    if (const auto k = it->find("known_max_flow"); k != it->end() && k->is_number_integer()) {
      meta.known_max_flow = k->get<Ticks>();
    }
    doc.metadata = std::move(meta);
  }
  return doc;
}

json flow_to_json(const ColoredGraph& g, const Flow& f) {
  json values = json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    values.push_back({{"id", g.edges()[i].id}, {"f_ab", f.f_ab(i)}});
  }
  return {{"edge_values", std::move(values)}};
}

Flow flow_from_json(const ColoredGraph& g, const json& j) {
  const json& jv = array_field(j, "edge_values", "");
  std::vector<std::pair<EdgeId, Ticks>> values;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string where = "edge_values[" + std::to_string(i) + "].";
    values.emplace_back(int_field(jv[i], "id", where), int_field(jv[i], "f_ab", where));
  }
  return Flow::from_edge_values(g, values);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

GraphDocument read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace localflow
