#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "oddminor/expansion_model.hpp"

namespace oddminor {

/// A parsed certificate file: the model plus the hash of the host graph it
/// was issued for.
struct Certificate {
    int version = 1;
    std::string graph_hash;
    OddExpansionModel model;
};

/// Canonical certificate text. Field order is fixed and all lists are sorted,
/// so equal models always produce identical bytes:
///
///     version: 1
///     graph_hash: <hex>
///     clique_order: <r>
///     flags: [...]                (only when non-empty)
///     trees:
///       - vertices: [..]
///         edges: [[u, v], ..]
///     coloring: [[v, c], ..]
///     connectors: [[i, j, u, v], ..]   (only when present)
std::string serialize_model(const OddExpansionModel& m, std::string_view graph_hash);

/// Parses certificate text. Structural problems raise ParseError carrying the
/// byte offset and a field path such as "trees[2].edges[0]". The model is not
/// checked against any graph.
Certificate parse_certificate(std::string_view text);

Certificate read_certificate_file(const std::filesystem::path& path);
void write_certificate_file(const std::filesystem::path& path, const OddExpansionModel& m,
                            std::string_view graph_hash);

}  // namespace oddminor
