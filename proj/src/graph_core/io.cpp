// Copyright 2026 The planturan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planturan/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "planturan/error.hpp"
#include "planturan/planarity.hpp"

namespace planturan {
namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string xml_unescape(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    static const std::pair<const char*, char> table[] = {
        {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}};
    bool hit = false;
    for (auto [ent, ch] : table) {
      if (s.compare(i, std::char_traits<char>::length(ent), ent) == 0) {
        out += ch;
        i += std::char_traits<char>::length(ent) - 1;
        hit = true;
        break;
      }
    }
    if (!hit) throw Error(ErrorCode::kParseError, "unknown XML entity");
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// (position of v around u, position of u around v) for u < v
std::pair<int, int> rot_positions(const PlanarEmbedding& g, int u, int v) {
  int d = g.dart(u, v);
  int t = g.twin(d);
  return {d - g.dart(u, g.rotation(u)[0]), t - g.dart(v, g.rotation(v)[0])};
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDocument parse_graph_json(const std::string& text) {
  GraphDocument doc;
  try {
    doc.raw = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  const Json& j = doc.raw;
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "top level must be an object");
  try {
    if (j.contains("rotation")) {
      std::vector<std::string> names;
      std::vector<std::vector<std::string>> rot;
      for (const auto& [k, v] : j.at("rotation").items()) {
        names.push_back(k);
        rot.push_back(v.get<std::vector<std::string>>());
      }
      if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(names.size())) {
        throw Error(ErrorCode::kParseError, "\"n\" disagrees with the rotation size");
      }
      doc.embedding = PlanarEmbedding::from_rotation(names, rot);
      doc.graph = doc.embedding.graph();
      doc.embedded = true;
    } else if (j.contains("edges")) {
      std::vector<std::pair<std::string, std::string>> es;
      for (const auto& e : j.at("edges")) {
        auto p = e.get<std::vector<std::string>>();
        if (p.size() != 2) throw Error(ErrorCode::kParseError, "edge must have two endpoints");
        es.emplace_back(p[0], p[1]);
      }
      Graph g;
      if (j.contains("vertices")) {
        for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
      }
      for (const auto& [a, b] : es) {
        if (!g.has_vertex(a)) g.add_vertex(a);
        if (!g.has_vertex(b)) g.add_vertex(b);
        g.add_edge(a, b);
      }
      doc.graph = std::move(g);
    } else {
      throw Error(ErrorCode::kParseError, "graph needs a \"rotation\" or \"edges\" key");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return doc;
}

GraphDocument read_graph_file(const std::string& path) { return parse_graph_json(read_text_file(path)); }

PlanarEmbedding embedding_of(const GraphDocument& doc) {
  return doc.embedded ? doc.embedding : planarity_embed(doc.graph);
}

Json embedding_to_json(const PlanarEmbedding& g) {
  Json j;
  j["n"] = g.num_vertices();
  Json rot = Json::object();
  for (int v = 0; v < g.num_vertices(); ++v) {
    Json arr = Json::array();
    for (int u : g.rotation(v)) arr.push_back(g.name(u));
    rot[g.name(v)] = std::move(arr);
  }
  j["rotation"] = std::move(rot);
  return j;
}

Json graph_to_json(const Graph& g) {
  Json j;
  Json es = Json::array();
  for (auto [u, v] : g.edges()) es.push_back({g.name(u), g.name(v)});
  j["edges"] = std::move(es);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const PlanarEmbedding& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v) out << "  " << dot_quote(g.name(v)) << ";\n";
  for (auto [u, v] : g.edge_list()) {
    auto [i, j] = rot_positions(g, u, v);
    out << "  " << dot_quote(g.name(u)) << " -- " << dot_quote(g.name(v)) << " [rot_index=\"" << i << ","
        << j << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_graphml(const PlanarEmbedding& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"rot_index\" for=\"edge\" attr.name=\"rot_index\" attr.type=\"string\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (int v = 0; v < g.num_vertices(); ++v) out << "    <node id=\"" << xml_escape(g.name(v)) << "\"/>\n";
  for (auto [u, v] : g.edge_list()) {
    auto [i, j] = rot_positions(g, u, v);
    out << "    <edge source=\"" << xml_escape(g.name(u)) << "\" target=\"" << xml_escape(g.name(v))
        << "\"><data key=\"rot_index\">" << i << "," << j << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

PlanarEmbedding from_graphml(const std::string& text) {
  static const std::regex node_re(R"re(<node\s+id="([^"]*)"\s*/?>)re");
  static const std::regex edge_re(
      R"re(<edge\s+source="([^"]*)"\s+target="([^"]*)"\s*>\s*<data\s+key="rot_index">\s*(\d+)\s*,\s*(\d+)\s*</data>)re");
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), node_re); it != std::sregex_iterator(); ++it) {
    std::string id = xml_unescape((*it)[1]);
    if (!index.emplace(id, static_cast<int>(names.size())).second) {
      throw Error(ErrorCode::kParseError, "node '" + id + "' repeated");
    }
    names.push_back(id);
  }
  struct Slot {
    int u, v, i, j;
  };
  std::vector<Slot> slots;
  std::vector<int> deg(names.size(), 0);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge_re); it != std::sregex_iterator(); ++it) {
    auto find = [&](const std::string& s) {
      auto f = index.find(xml_unescape(s));
      if (f == index.end()) throw Error(ErrorCode::kParseError, "edge endpoint '" + s + "' is not a node");
      return f->second;
    };
    Slot s{find((*it)[1]), find((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])};
    ++deg[s.u];
    ++deg[s.v];
    slots.push_back(s);
  }
  std::vector<std::vector<int>> rot(names.size());
  for (size_t v = 0; v < names.size(); ++v) rot[v].assign(deg[v], -1);
  auto place = [&](int at, int pos, int who) {
    if (pos >= deg[at] || rot[at][pos] != -1) throw Error(ErrorCode::kParseError, "inconsistent rot_index");
    rot[at][pos] = who;
  };
  for (const auto& s : slots) {
    place(s.u, s.i, s.v);
    place(s.v, s.j, s.u);
  }
  return PlanarEmbedding::from_rotation(names, std::move(rot));
}

std::string export_graph(const PlanarEmbedding& g, const std::string& format) {
  if (format == "json") return dump_json(embedding_to_json(g));
  if (format == "dot") return to_dot(g);
  if (format == "graphml") return to_graphml(g);
  throw Error(ErrorCode::kUnknownFormat, "'" + format + "' (expected json, dot or graphml)");
}

}  // namespace planturan
