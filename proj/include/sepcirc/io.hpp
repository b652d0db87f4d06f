#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sepcirc/circuit.hpp"
#include "sepcirc/graph.hpp"
#include "sepcirc/multilayer.hpp"
#include "sepcirc/rdivision.hpp"
#include "sepcirc/separators.hpp"

namespace sepcirc {

/// Unreadable, unwritable or malformed file. The message starts with
/// "source:line:column:" for syntax errors and "source: /json/pointer:" for
/// structural ones.
class IoError : public Error {
 public:
  using Error::Error;
};

struct GraphFile {
  Support support;
  std::optional<GeometricLayout> layout;
};

struct EmbeddingFile {
  Embedding embedding;
  std::optional<int> k;
};

// `source` only labels error messages (usually the file name).
GraphFile parse_graph(std::string_view text, std::string_view source = "<graph>");
BooleanCircuit parse_circuit(std::string_view text, std::string_view source = "<circuit>");
EmbeddingFile parse_embedding(std::string_view text, std::string_view source = "<embedding>");

std::string graph_to_json(const Support& g, const GeometricLayout* layout = nullptr);
std::string circuit_to_json(const BooleanCircuit& c);
std::string embedding_to_json(const Embedding& e, std::optional<int> k = std::nullopt);
std::string separation_to_json(const EdgeSeparation& s);
std::string division_to_json(const RDivision& div);

std::string read_text_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it over
/// `path`, so readers never observe a partial file.
void write_text_atomic(const std::string& path, std::string_view content);

GraphFile read_graph(const std::string& path);
BooleanCircuit read_circuit(const std::string& path);
EmbeddingFile read_embedding(const std::string& path);

}  // namespace sepcirc
