#pragma once

#include <string>

#include <json.hpp>

#include "blowup/almost_embeddable.hpp"
#include "blowup/assembly.hpp"
#include "blowup/partition.hpp"

namespace blowup::io {

/// std::map-backed, so object keys always come out sorted.
using Json = nlohmann::json;

/// Compact single-line rendering followed by a newline.
std::string canonical(const Json& j);
/// Throws ParseError on malformed text.
Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Writes through a temporary file and a rename.
void write_file(const std::string& path, const std::string& content);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const Json& j);

Json to_json(const RootedTree& t);
RootedTree tree_from_json(const Json& j);

Json to_json(const HPartitionCertificate& c);
/// `n` is the vertex count of the graph the certificate refers to.
HPartitionCertificate certificate_from_json(const Json& j, std::size_t n);

Json to_json(const PlanarEmbedding& e);
PlanarEmbedding embedding_from_json(const Json& j);

Json to_json(const AlmostEmbedding& ae);
AlmostEmbedding almost_embedding_from_json(const Json& j);

Json to_json(const TorsoResult& r);
TorsoResult torso_result_from_json(const Json& j, std::size_t n);

Json to_json(const StructuredInput& si);
StructuredInput structured_input_from_json(const Json& j);

Json to_json(const AlmostEmbeddableStats& s);
Json to_json(const AssemblyStats& s);

/// Kind of document: "graph", "embedding", "almost-embedding", "structured"
/// or "certificate"; throws ParseError when no kind fits.
std::string detect_kind(const Json& j);

}  // namespace blowup::io
