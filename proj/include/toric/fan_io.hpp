#pragma once

// JSON fan files: {"name", "lattice_rank", "rays": [[...]], "cones": [[ray indices]]}.

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct FanDocument {
  std::string name;
  std::size_t lattice_rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

/// Throws ParseError naming the offending field, cone or index.
FanDocument parse_fan_document(const std::string& text);
FanDocument load_fan_document(const std::string& path);

/// Builds and validates the fan. Throws ValidationError naming the violated
/// axiom and the cones involved.
Fan fan_from_document(const FanDocument& doc);
Fan load_fan(const std::string& path);

/// Rays are fan.rays(); cones are the maximal cones as sorted ray indices.
FanDocument to_document(const Fan& f, const std::string& name);
std::string serialize(const FanDocument& doc);

}  // namespace toric
