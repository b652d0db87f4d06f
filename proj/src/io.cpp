#include "sepcirc/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace sepcirc {

using nlohmann::json;

namespace {

json parse_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    // Turn the byte offset into line:column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": invalid JSON: " << err.what();
    throw IoError(msg.str());
  }
}

// Runs `body`, prefixing structural errors with the source and JSON pointer.
template <typename F>
auto with_context(std::string_view source, const std::string& pointer, F&& body) {
  try {
    return body();
  } catch (const IoError&) {
    throw;
  } catch (const json::exception& err) {
    throw IoError(std::string(source) + ": " + pointer + ": " + err.what());
  } catch (const Error& err) {
    throw IoError(std::string(source) + ": " + pointer + ": " + err.what());
  }
}

const json& field(const json& obj, const char* key, std::string_view source, const std::string& where) {
  if (!obj.is_object()) throw IoError(std::string(source) + ": " + where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw IoError(std::string(source) + ": " + where + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

GraphFile parse_graph(std::string_view text, std::string_view source) {
  const json doc = parse_text(text, source);
  GraphFile out;
  const auto vertices = with_context(source, "/vertices",
                                     [&] { return field(doc, "vertices", source, "").get<std::vector<VertexId>>(); });
  std::vector<Edge> edges;
  const json& raw_edges = field(doc, "edges", source, "");
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    with_context(source, where, [&] {
      const auto pair = raw_edges.at(i).get<std::vector<VertexId>>();
      if (pair.size() != 2) throw IoError(std::string(source) + ": " + where + ": an edge needs two endpoints");
      edges.push_back(make_edge(pair[0], pair[1]));
      return 0;
    });
  }
  const bool multigraph = doc.value("multigraph", false);
  out.support = with_context(source, "/", [&] { return Support(vertices, edges, multigraph); });
  if (doc.contains("layout") && !doc["layout"].is_null()) {
    const json& lay = doc["layout"];
    GeometricLayout layout;
    with_context(source, "/layout", [&] {
      layout.d = field(lay, "d", source, "/layout").get<int>();
      layout.c_e = lay.value("c_e", 1.0);
      for (const auto& [key, value] : field(lay, "coords", source, "/layout").items()) {
        std::size_t used = 0;
        const int id = std::stoi(key, &used);
        if (used != key.size()) throw IoError(std::string(source) + ": /layout/coords: bad vertex id \"" + key + "\"");
        layout.coords[id] = value.get<std::vector<double>>();
      }
      return 0;
    });
    out.layout = std::move(layout);
  }
  return out;
}

BooleanCircuit parse_circuit(std::string_view text, std::string_view source) {
  const json doc = parse_text(text, source);
  BooleanCircuit c;
  with_context(source, "/", [&] {
    c.n = field(doc, "n", source, "").get<int>();
    c.m = field(doc, "m", source, "").get<int>();
    return 0;
  });
  const json& nodes = field(doc, "nodes", source, "");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "/nodes/" + std::to_string(i);
    with_context(source, where, [&] {
      const json& raw = nodes.at(i);
      Node node;
      node.id = field(raw, "id", source, where).get<int>();
      const auto kind = field(raw, "kind", source, where).get<std::string>();
      if (kind == "input") {
        node.kind = NodeKind::input;
      } else if (kind == "gate") {
        node.kind = NodeKind::gate;
      } else if (kind == "transit") {
        node.kind = NodeKind::transit;
      } else {
        throw IoError(std::string(source) + ": " + where + ": unknown node kind \"" + kind + "\"");
      }
      if (raw.contains("fn") && !raw["fn"].is_null()) node.fn = gate_fn_from_string(raw["fn"].get<std::string>());
      if (raw.contains("out")) {
        const json& out = raw["out"];
        if (out.is_number_integer()) {
          node.outputs.push_back(out.get<int>());
        } else if (out.is_array()) {
          node.outputs = out.get<std::vector<int>>();
        } else if (!out.is_null()) {
          throw IoError(std::string(source) + ": " + where + ": \"out\" must be an integer, array or null");
        }
      }
      c.nodes.push_back(std::move(node));
      return 0;
    });
  }
  const json& wires = field(doc, "wires", source, "");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    const std::string where = "/wires/" + std::to_string(i);
    with_context(source, where, [&] {
      const json& raw = wires.at(i);
      c.wires.push_back({field(raw, "from", source, where).get<int>(), field(raw, "to", source, where).get<int>(),
                         raw.value("arg", 1)});
      return 0;
    });
  }
  return c;
}

EmbeddingFile parse_embedding(std::string_view text, std::string_view source) {
  const json doc = parse_text(text, source);
  EmbeddingFile out;
  with_context(source, "/map", [&] {
    for (const auto& [key, value] : field(doc, "map", source, "").items()) {
      std::size_t used = 0;
      const int id = std::stoi(key, &used);
      if (used != key.size()) throw IoError(std::string(source) + ": /map: bad node id \"" + key + "\"");
      out.embedding.map[id] = value.get<VertexId>();
    }
    return 0;
  });
  if (doc.contains("k") && !doc["k"].is_null()) out.k = with_context(source, "/k", [&] { return doc["k"].get<int>(); });
  return out;
}

namespace {

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

std::string graph_to_json(const Support& g, const GeometricLayout* layout) {
  json doc;
  doc["vertices"] = std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
  doc["edges"] = edges_json(g.edges());
  if (g.is_multigraph()) doc["multigraph"] = true;
  if (layout) {
    json coords = json::object();
    for (VertexId v : g.vertices()) coords[std::to_string(v)] = layout->at(v);
    doc["layout"] = {{"d", layout->d}, {"c_e", layout->c_e}, {"coords", coords}};
  }
  return doc.dump(1) + "\n";
}

std::string circuit_to_json(const BooleanCircuit& c) {
  json nodes = json::array();
  for (const Node& node : c.nodes) {
    json raw = {{"id", node.id}, {"kind", std::string(to_string(node.kind))}};
    if (node.fn) raw["fn"] = std::string(to_string(*node.fn));
    if (node.outputs.empty()) {
      raw["out"] = nullptr;
    } else if (node.outputs.size() == 1) {
      raw["out"] = node.outputs.front();
    } else {
      raw["out"] = node.outputs;
    }
    nodes.push_back(std::move(raw));
  }
  json wires = json::array();
  for (const Wire& w : c.wires) wires.push_back({{"from", w.from}, {"to", w.to}, {"arg", w.arg}});
  return json{{"n", c.n}, {"m", c.m}, {"nodes", nodes}, {"wires", wires}}.dump(1) + "\n";
}

std::string embedding_to_json(const Embedding& e, std::optional<int> k) {
  json map = json::object();
  for (const auto& [id, v] : e.map) map[std::to_string(id)] = v;
  json doc{{"map", map}};
  if (k) doc["k"] = *k;
  return doc.dump(1) + "\n";
}

std::string separation_to_json(const EdgeSeparation& s) {
  return json{{"A", s.a}, {"B", s.b}, {"cut", edges_json(s.cut)}}.dump(1) + "\n";
}

std::string division_to_json(const RDivision& div) {
  return json{{"r", div.r},           {"pieces", div.pieces}, {"cut", edges_json(div.cut_edges)},
              {"p_bar", div.p_bar},   {"s_bar", div.s_bar}}
             .dump(1) +
         "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path + ": read error");
  return buf.str();
}

void write_text_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError(path + ": write error");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError(path + ": cannot replace file: " + ec.message());
  }
}

GraphFile read_graph(const std::string& path) { return parse_graph(read_text_file(path), path); }
BooleanCircuit read_circuit(const std::string& path) { return parse_circuit(read_text_file(path), path); }
EmbeddingFile read_embedding(const std::string& path) { return parse_embedding(read_text_file(path), path); }

}  // namespace sepcirc
