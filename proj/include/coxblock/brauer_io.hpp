/*
  brauer_io.hpp - series fixture files, DOT and JSON emission for Brauer
  trees, and the JSON round trip.
*/

#ifndef COXBLOCK_BRAUER_IO_HPP
#define COXBLOCK_BRAUER_IO_HPP

#include <json.hpp>

#include "coxblock/brauer.hpp"
#include "coxblock/cartan.hpp"
#include "coxblock/data.hpp"

namespace coxblock {

struct SeriesFixture {
  CartanType type;
  Int h = 0, delta = 1, r = 1;
  Int ref_q_power = 0, ref_ell = 0, ref_multiplicity = 1;
  bool q_is_square_root = false;  // very twisted reference parameters
  std::vector<HCSeriesDatum> series;
  std::vector<std::string> planar_exc;  // neighbours of exc, counterclockwise
};

inline std::string series_filename(const CartanType& t) {
  std::string s = t.str();
  for (auto& c : s) c = static_cast<char>(tolower(static_cast<unsigned char>(c)));
  return "series_" + s + ".txt";
}

inline SeriesFixture load_series_fixture(const CartanType& t, const std::string& dir_override = "") {
  std::string path = data_dir(dir_override) + "/" + series_filename(t);
  DataFile file = load_data_file(path);
  SeriesFixture fx;
  fx.type = t;
  auto need = [&](bool cond, int line, const std::string& msg) {
    if (!cond) throw DataError(path, line, msg);
  };
  for (size_t k = 0; k < file.lines.size(); ++k) {
    int line = file.line_numbers[k];
    const std::string& text = file.lines[k];
    auto sp = text.find(' ');
    std::string key = text.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : detail::strip(text.substr(sp + 1));
    if (key == "type") {
      need(parse_type(rest) == t, line, "fixture type mismatch");
    } else if (key == "h") {
      fx.h = std::stoll(rest);
    } else if (key == "delta") {
      fx.delta = std::stoll(rest);
    } else if (key == "r") {
      fx.r = std::stoll(rest);
    } else if (key == "ref") {
      for (const auto& tok : detail::split(rest, ' ')) {
        auto eq = tok.find('=');
        need(eq != std::string::npos, line, "bad ref token '" + tok + "'");
        std::string name = tok.substr(0, eq);
        Int value = std::stoll(tok.substr(eq + 1));
        if (name == "q") fx.ref_q_power = value;
        else if (name == "q2") { fx.ref_q_power = value; fx.q_is_square_root = true; }
        else if (name == "ell") fx.ref_ell = value;
        else if (name == "m_exc") fx.ref_multiplicity = value;
        else throw DataError(path, line, "unknown ref field '" + name + "'");
      }
    } else if (key == "series") {
      auto bar = text.find('|');
      need(bar != std::string::npos, line, "series line needs '|'");
      HCSeriesDatum s;
      for (const auto& tok : detail::split(detail::strip(text.substr(sp + 1, bar - sp - 1)), ' ')) {
        if (detail::strip(tok).empty()) continue;
        auto eq = tok.find('=');
        need(eq != std::string::npos, line, "bad series token '" + tok + "'");
        std::string name = tok.substr(0, eq);
        Int value = std::stoll(tok.substr(eq + 1));
        if (name == "order") s.zeta.order = value;
        else if (name == "exp") s.zeta.exp = value;
        else if (name == "m") s.m = value;
        else if (name == "M") s.M = value;
        else throw DataError(path, line, "unknown series field '" + name + "'");
      }
      Int idx = s.m;
      for (const auto& nm : detail::split(detail::strip(text.substr(bar + 1)), ';'))
        s.characters.push_back({detail::strip(nm), idx++});
      try {
        s.check();
      } catch (const std::exception& e) {
        throw DataError(path, line, e.what());
      }
      fx.series.push_back(std::move(s));
    } else if (key == "planar_exc") {
      for (const auto& nm : detail::split(rest, ';')) fx.planar_exc.push_back(detail::strip(nm));
    } else {
      throw DataError(path, line, "unknown key '" + key + "'");
    }
  }
  need(!fx.series.empty(), 0, "no series in fixture");
  need(!fx.planar_exc.empty(), 0, "no planar order in fixture");
  return fx;
}

// Planar orders for the whole tree from the fixture: the exceptional node
// uses the transcribed cyclic order (keyed by the neighbour at the other
// end of each edge); all other nodes have degree <= 2, where the cyclic
// order is unique.
inline std::map<std::string, std::vector<std::string>> fixture_planar_orders(
    const BrauerTree& tree, const SeriesFixture& fx) {
  std::map<std::string, std::vector<std::string>> orders;
  std::map<std::string, std::string> exc_edge_by_neighbor;
  for (const auto& e : tree.edges) {
    if (e.u == BrauerTree::exceptional_name) exc_edge_by_neighbor[e.v] = e.id;
    if (e.v == BrauerTree::exceptional_name) exc_edge_by_neighbor[e.u] = e.id;
  }
  std::vector<std::string> exc_order;
  for (const auto& nb : fx.planar_exc) {
    auto it = exc_edge_by_neighbor.find(nb);
    if (it == exc_edge_by_neighbor.end())
      throw std::invalid_argument("planar_exc names a non-neighbour: " + nb);
    exc_order.push_back(it->second);
  }
  orders[BrauerTree::exceptional_name] = exc_order;
  for (const auto& n : tree.nodes)
    if (n != BrauerTree::exceptional_name) orders[n] = tree.incident(n);
  return orders;
}

// ---- DOT ----------------------------------------------------------------

inline std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Undirected DOT graph; the planar data is kept as an explicit per-node
// edge ordering attribute so downstream consumers can honour it.
inline std::string serialize_tree_dot(const BrauerTree& tree) {
  tree.check();
  std::string out = "graph brauer_tree {\n";
  out += "  node [shape=circle fontsize=11];\n";
  for (const auto& n : tree.nodes) {
    std::vector<std::string> attrs;
    if (n == BrauerTree::exceptional_name) {
      attrs.push_back("shape=doublecircle");
      attrs.push_back("multiplicity=" + std::to_string(tree.multiplicity));
    }
    auto it = tree.planar.find(n);
    if (it != tree.planar.end() && it->second.size() > 2) {
      std::string order;
      for (const auto& id : it->second) order += (order.empty() ? "" : ",") + id;
      attrs.push_back("cyclic_order=\"" + order + "\"");
    }
    out += "  \"" + escape_dot(n) + "\"";
    if (!attrs.empty()) {
      out += " [";
      for (size_t i = 0; i < attrs.size(); ++i) out += (i ? " " : "") + attrs[i];
      out += "]";
    }
    out += ";\n";
  }
  for (const auto& e : tree.edges)
    out += "  \"" + escape_dot(e.u) + "\" -- \"" + escape_dot(e.v) + "\" [id=" + e.id + "];\n";
  out += "}\n";
  return out;
}

// ---- JSON ----------------------------------------------------------------

inline nlohmann::json tree_to_json(const BrauerTree& tree) {
  tree.check();
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : tree.nodes) {
    nlohmann::json node;
    node["name"] = n;
    node["exceptional"] = n == BrauerTree::exceptional_name;
    if (n == BrauerTree::exceptional_name) node["multiplicity"] = tree.multiplicity;
    j["nodes"].push_back(node);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : tree.edges)
    j["edges"].push_back({{"id", e.id}, {"ends", {e.u, e.v}}});
  j["planar"] = nlohmann::json::object();
  for (const auto& [n, order] : tree.planar) j["planar"][n] = order;
  return j;
}

inline std::string serialize_tree_json(const BrauerTree& tree) {
  return tree_to_json(tree).dump(2) + "\n";
}

inline BrauerTree parse_tree_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BrauerTree t;
  for (const auto& node : j.at("nodes")) {
    t.nodes.push_back(node.at("name").get<std::string>());
    if (node.value("exceptional", false))
      t.multiplicity = node.value("multiplicity", Int(1));
  }
  for (const auto& e : j.at("edges"))
    t.edges.push_back({e.at("id").get<std::string>(), e.at("ends")[0].get<std::string>(),
                       e.at("ends")[1].get<std::string>()});
  if (j.contains("planar"))
    for (auto it = j["planar"].begin(); it != j["planar"].end(); ++it)
      t.planar[it.key()] = it.value().get<std::vector<std::string>>();
  t.check();
  return t;
}

}  // namespace coxblock

#endif
