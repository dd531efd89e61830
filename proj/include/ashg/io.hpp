#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ashg/game.hpp"
#include "ashg/hardness.hpp"
#include "ashg/partition.hpp"
#include "ashg/welfare_value.hpp"

namespace ashg::io {

using Json = nlohmann::ordered_json;

// Instance files ("ashg-v1"):
//   {"format":"ashg-v1","n":..,"mode":"int"|"real",["unit":..,]"symmetric":..,
//    "weights":[..],"meta":{..}}
// Symmetric weights are the strict upper triangle in row-major order;
// asymmetric weights the off-diagonal matrix in row-major order. "unit" is
// written only for integer games whose unit is not 1. Keys are emitted in
// this fixed order, so equal games serialize to equal bytes.
//
// Partition files ("part-v1"): {"format":"part-v1","assignment":[..]} with a
// canonical assignment.

Json meta_to_json(const InstanceMeta& meta);
InstanceMeta meta_from_json(const Json& j);

Json game_to_json(const ValuationMatrix& game);
ValuationMatrix game_from_json(const Json& j);

Json partition_to_json(const Partition& pi);
Partition partition_from_json(const Json& j);
/// The assignment array as written, without validation beyond integrality.
std::vector<long long> raw_assignment_from_json(const Json& j);

/// Integers for integral exact values, doubles otherwise.
Json welfare_to_json(const Welfare& w);

/// Compact dump followed by a newline.
std::string dump(const Json& j);
Json parse(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// DIMACS edge format: "c" comment lines, one "p edge <n> <m>" line and
/// "e <u> <v>" lines with 1-indexed vertices.
SimpleGraph read_dimacs(std::istream& in);
std::string write_dimacs(const SimpleGraph& g);

}  // namespace ashg::io
