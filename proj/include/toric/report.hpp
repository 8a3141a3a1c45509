#pragma once

// Deterministic reports: tables, checks with provenance labels, and notes,
// rendered as tab-separated text or as JSON.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

namespace provenance {
/// Value stated in one of the reference examples.
inline constexpr const char* kReference = "reference-example";
/// Value produced by a second, independent computation.
inline constexpr const char* kOracle = "independent-oracle";
/// Value forced by a definition or by the shape of a complex.
inline constexpr const char* kDefinition = "definition";
/// A statement about spectra or K-groups that is documented, not computed.
inline constexpr const char* kDocumented = "documented-identity (not computed)";
}  // namespace provenance

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string provenance;
};

struct Annotation {
  std::string label;
  std::string text;
};

struct Report {
  std::string command;
  std::string input_digest;
  /// Radius of the weight box, printed so that truncation is never implicit.
  std::optional<long> window;
  std::size_t window_rank = 0;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<Table> tables;
  std::vector<Check> checks;
  std::vector<Annotation> annotations;

  bool passed() const;
  void check(std::string name, bool passed, std::string expected, std::string actual, std::string provenance);
  std::string render_tsv() const;
  std::string render_structured() const;
};

std::uint64_t fnv1a(const std::string& text);
std::string digest(const std::string& text);

std::string join(const std::vector<std::size_t>& values, const char* sep = ",");

}  // namespace toric
