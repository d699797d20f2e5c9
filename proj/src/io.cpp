#include "fgv/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fgv::io {

using nlohmann::json;

json to_json(const LineConfiguration& c) {
  json j;
  if (c.ambient_dim >= 0 && static_cast<int>(c.coords.size()) == c.n) {
    j["dim"] = c.ambient_dim;
    json pts = json::array();
    for (gf2::Mask m : c.coords) {
      json bits = json::array();
      for (int b = 0; b <= c.ambient_dim; ++b) bits.push_back((m >> b) & 1);
      pts.push_back(bits);
    }
    j["points"] = pts;
  } else {
    j["points"] = c.n;
    if (!c.labels.empty()) j["labels"] = c.labels;
  }
  json lines = json::array();
  for (const Triple& l : c.lines) lines.push_back({l[0], l[1], l[2]});
  j["lines"] = lines;
  return j;
}

LineConfiguration configuration_from_json(const json& j) {
  LineConfiguration c;
  if (!j.contains("points")) throw std::invalid_argument("schema: missing points");
  if (j["points"].is_number_integer()) {
    c.n = j["points"].get<int>();
    if (j.contains("labels")) c.labels = j["labels"].get<std::vector<std::string>>();
  } else if (j["points"].is_array()) {
    if (!j.contains("dim")) throw std::invalid_argument("schema: missing dim");
    c.ambient_dim = j["dim"].get<int>();
    for (const auto& bits : j["points"]) {
      gf2::Mask m = 0;
      int idx = 0;
      for (const auto& b : bits) {
        if (b.get<int>()) m |= gf2::Mask{1} << idx;
        ++idx;
      }
      if (idx != c.ambient_dim + 1)
        throw std::invalid_argument("schema: point length does not match dim");
      if (m == 0) throw std::invalid_argument("schema: zero point");
      c.coords.push_back(m);
    }
    c.n = static_cast<int>(c.coords.size());
  } else {
    throw std::invalid_argument("schema: points must be a count or an array");
  }
  if (j.contains("lines"))
    for (const auto& l : j["lines"]) {
      if (l.size() != 3) throw std::invalid_argument("schema: line is not a triple");
      Triple t{l[0].get<int>(), l[1].get<int>(), l[2].get<int>()};
      for (int x : t)
        if (x < 0 || x >= c.n) throw std::invalid_argument("schema: line index range");
      c.lines.push_back(t);
    }
  c.normalize();
  return c;
}

LineConfiguration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return configuration_from_json(j);
}

void save_configuration(const LineConfiguration& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << to_json(c).dump(2) << "\n";
}

json to_json(const IncidenceProfile& p) {
  json j;
  j["points"] = p.points;
  j["connected"] = p.connected;
  j["components"] = p.components;
  if (p.diameter >= 0)
    j["diameter"] = p.diameter;
  else
    j["diameter"] = "infinite";
  j["symmetric"] = p.symmetric;
  if (!p.asymmetry_witness.empty()) j["asymmetry_witness"] = p.asymmetry_witness;
  json v = json::array();
  for (long long x : p.v) v.push_back(x);
  j["v"] = v;
  json vij = json::object();
  for (const auto& [k, val] : p.vij)
    vij[std::to_string(k.first) + "," + std::to_string(k.second)] = val;
  j["vij"] = vij;
  return j;
}

json to_json(const ParameterTable& t) {
  json j;
  j["pv"] = t.pv;
  j["w1"] = t.w1;
  j["w11"] = t.w11;
  j["w12"] = t.w12;
  if (t.has_w2_row) {
    j["w2"] = t.w2;
    j["w21"] = t.w21;
    j["w22"] = t.w22;
  }
  j["w_total"] = t.w_total;
  j["steps"] = t.steps;
  return j;
}

json to_json(const std::vector<NumericEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    json j;
    j["id"] = e.id;
    j["applicable"] = e.applicable;
    j["pass"] = e.pass;
    if (e.applicable) {
      j["lhs"] = e.lhs;
      j["rhs"] = e.rhs;
    }
    if (!e.note.empty()) j["note"] = e.note;
    arr.push_back(j);
  }
  return arr;
}

json to_json(const ledger::DegreeLedger& l) {
  json j;
  json entries = json::array();
  for (const auto& e : l.entries)
    entries.push_back({{"name", e.name}, {"degree", e.degree}, {"anchor", e.anchor}});
  j["entries"] = entries;
  j["total"] = l.total;
  j["q8_point_count"] = l.q8_point_count;
  j["formula_count"] = l.formula_count;
  j["cross_checks_ok"] = l.cross_checks_ok;
  return j;
}

std::string to_dot(const LineConfiguration& c, const std::string& name) {
  IncidenceGraph g = incidence_graph(c);
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < g.n; ++i) os << "  " << i << ";\n";
  for (const auto& [a, b] : g.edges) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fgv::io
