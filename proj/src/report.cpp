#include "toric/report.hpp"

#include <json.hpp>
#include <sstream>

namespace toric {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void Report::check(std::string name, bool ok, std::string expected, std::string actual, std::string prov) {
  checks.push_back(Check{std::move(name), ok, std::move(expected), std::move(actual), std::move(prov)});
}

namespace {

std::string box_text(long radius, std::size_t rank) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < rank; ++i) count *= static_cast<std::size_t>(2 * radius + 1);
  return "radius " + std::to_string(radius) + " in Z^" + std::to_string(rank) + " (" + std::to_string(count) +
         " weights)";
}

}  // namespace

std::string Report::render_tsv() const {
  std::ostringstream out;
  out << "# command\t" << command << "\n";
  if (!input_digest.empty()) out << "# input\t" << input_digest << "\n";
  if (window) out << "# box\t" << box_text(*window, window_rank) << "\n";
  for (const auto& [k, v] : summary) out << "# " << k << "\t" << v << "\n";
  for (const auto& t : tables) {
    out << "\n## table\t" << t.name << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
  }
  if (!checks.empty()) {
    out << "\n## checks\nstatus\tname\texpected\tactual\tprovenance\n";
    for (const auto& c : checks)
      out << (c.passed ? "PASS" : "FAIL") << "\t" << c.name << "\t" << c.expected << "\t" << c.actual << "\t"
          << c.provenance << "\n";
  }
  if (!annotations.empty()) {
    out << "\n## notes\n";
    for (const auto& a : annotations) out << a.label << "\t" << a.text << "\n";
  }
  out << "\n# verdict\t" << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string Report::render_structured() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  if (window) j["box"] = {{"radius", *window}, {"rank", window_rank}, {"text", box_text(*window, window_rank)}};
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : summary) s[k] = v;
  j["summary"] = s;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"status", c.passed ? "pass" : "fail"},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"provenance", c.provenance}});
  j["notes"] = nlohmann::ordered_json::array();
  for (const auto& a : annotations) j["notes"].push_back({{"label", a.label}, {"text", a.text}});
  j["verdict"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(const std::string& text) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(text);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15];
  return "fnv1a64:" + out;
}

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

}  // namespace toric
