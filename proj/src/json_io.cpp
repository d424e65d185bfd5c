#include "latrep/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "latrep/errors.hpp"

namespace latrep {

using nlohmann::json;

namespace {

std::vector<std::pair<int, int>> pairs_from(const json& j, const char* key, int n) {
  std::vector<std::pair<int, int>> out;
  if (!j.contains(key)) return out;
  for (const auto& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw MalformedInput(std::string(key) + " entries must be [lo, hi] index pairs");
    int lo = e[0], hi = e[1];
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw MalformedInput(std::string(key) + " index out of range");
    out.emplace_back(lo, hi);
  }
  return out;
}

std::vector<std::string> labels_from(const json& j) {
  if (!j.contains("elements") || !j.at("elements").is_array())
    throw MalformedInput("missing \"elements\" array");
  std::vector<std::string> out;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw MalformedInput("element names must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Poset poset_from_json(const json& j) {
  auto labels = labels_from(j);
  int n = (int)labels.size();
  return Poset::from_relations(n, pairs_from(j, "relations", n), std::move(labels));
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.labels();
  json rel = json::array();
  for (auto [a, b] : p.cover_pairs()) rel.push_back({a, b});
  j["relations"] = std::move(rel);
  return j;
}

Lattice lattice_from_json(const json& j) {
  auto labels = labels_from(j);
  int n = (int)labels.size();
  return Lattice::from_poset(
      Poset::from_relations(n, pairs_from(j, "covers", n), std::move(labels)));
}

json lattice_to_json(const Lattice& l) {
  json j;
  j["elements"] = l.order().labels();
  json cov = json::array();
  for (auto [a, b] : l.covers()) cov.push_back({a, b});
  j["covers"] = std::move(cov);
  return j;
}

json congruence_to_json(const Lattice& l, const Partition& p) {
  json j;
  j["lattice"] = lattice_id(l);
  json blocks = json::array();
  for (const auto& b : p.blocks()) blocks.push_back(b);
  j["blocks"] = std::move(blocks);
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["pass"] = r.pass;
  json items = json::array();
  for (const auto& it : r.items) {
    json e;
    e["id"] = it.id;
    e["pass"] = it.pass;
    if (!it.witness.empty()) e["witness"] = it.witness;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.claim << "  (" << r.instance << ")\n";
  for (const auto& it : r.items) {
    out << "  [" << (it.pass ? "ok" : "FAIL") << "] " << it.id;
    if (!it.witness.empty()) out << "  -- " << it.witness;
    out << "\n";
  }
  return out.str();
}

std::string lattice_to_dot(const Lattice& l) {
  auto is_anchor = [&](const std::string& s) {
    if (s == "o" || s == "i" || s == "o'") return true;
    for (const char* pre : {"a(", "b(", "a'(", "b'("})
      if (s.rfind(pre, 0) == 0) return true;
    return false;
  };
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=\"" << l.label(x) << "\"";
    if (is_anchor(l.label(x))) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  int h = l.order().height(l.top());
  for (int lev = 0; lev <= h; ++lev) {
    std::string row;
    for (int x = 0; x < l.size(); ++x)
      if (l.order().height(x) == lev) row += " n" + std::to_string(x) + ";";
    if (!row.empty()) out << "  { rank=same;" << row << " }\n";
  }
  for (auto [a, b] : l.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_id(const Lattice& l) {
  char buf[32];
  snprintf(buf, sizeof buf, "L%d-%016llx", l.size(), (unsigned long long)l.hash());
  return buf;
}

json load_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw MalformedInput("cannot open " + path);
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace latrep
