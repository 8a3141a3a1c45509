#include "toric/fan_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toric/error.hpp"

namespace toric {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::ParseError, "fan file: " + msg); }

Integer to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  parse_error(where + " is not an integer");
}

}  // namespace

FanDocument parse_fan_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) parse_error("top level must be an object");
  FanDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_error("name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_unsigned() || j["lattice_rank"].get<long>() < 1)
    parse_error("lattice_rank must be a positive integer");
  doc.lattice_rank = j["lattice_rank"].get<std::size_t>();
  if (!j.contains("rays") || !j["rays"].is_array()) parse_error("rays must be an array");
  if (!j.contains("cones") || !j["cones"].is_array()) parse_error("cones must be an array");

  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    const auto& r = j["rays"][i];
    const std::string where = "ray " + std::to_string(i);
    if (!r.is_array() || r.size() != doc.lattice_rank)
      parse_error(where + " must have " + std::to_string(doc.lattice_rank) + " entries");
    std::vector<Integer> entries;
    for (std::size_t k = 0; k < r.size(); ++k) entries.push_back(to_integer(r[k], where + " entry " + std::to_string(k)));
    LatticeVector v(std::move(entries));
    if (v.is_zero()) parse_error(where + " is zero");
    doc.rays.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < j["cones"].size(); ++c) {
    const auto& cone = j["cones"][c];
    const std::string where = "cone " + std::to_string(c);
    if (!cone.is_array() || cone.empty()) parse_error(where + " must be a nonempty array of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& x : cone) {
      if (!x.is_number_integer()) parse_error(where + " has a non-integer index");
      const long long k = x.get<long long>();
      if (k < 0 || static_cast<std::size_t>(k) >= doc.rays.size())
        parse_error(where + " refers to ray " + std::to_string(k) + " but there are " +
                    std::to_string(doc.rays.size()) + " rays");
      idx.push_back(static_cast<std::size_t>(k));
    }
    doc.cones.push_back(std::move(idx));
  }
  return doc;
}

FanDocument load_fan_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read fan file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan_document(ss.str());
}

Fan fan_from_document(const FanDocument& doc) {
  std::vector<Cone> cones;
  for (const auto& idx : doc.cones) {
    std::vector<LatticeVector> gens;
    for (auto k : idx) gens.push_back(doc.rays[k]);
    cones.push_back(Cone::from_generators(doc.lattice_rank, gens));
  }
  Fan f = Fan::from_cones(doc.lattice_rank, cones);
  FanCheck check = validate(f);
  if (!check.ok) {
    std::string witnesses;
    for (const auto& c : check.witnesses) witnesses += " " + c.to_string();
    throw Error(ErrorKind::ValidationError, "fan '" + doc.name + "' violates " + check.axiom + ":" + witnesses +
                                                (check.message.empty() ? "" : " (" + check.message + ")"));
  }
  return f;
}

Fan load_fan(const std::string& path) { return fan_from_document(load_fan_document(path)); }

FanDocument to_document(const Fan& f, const std::string& name) {
  FanDocument doc;
  doc.name = name;
  doc.lattice_rank = f.rank();
  doc.rays = f.rays();
  for (const auto& c : f.maximal_cones()) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(std::find(doc.rays.begin(), doc.rays.end(), r) - doc.rays.begin()));
    std::sort(idx.begin(), idx.end());
    doc.cones.push_back(std::move(idx));
  }
  return doc;
}

std::string serialize(const FanDocument& doc) {
  // One ray or cone per line keeps the files readable by hand.
  auto rows = [](const std::vector<json>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ",\n    " : "\n    ") + items[i].dump();
    return out + (items.empty() ? "]" : "\n  ]");
  };
  std::vector<json> rays, cones;
  for (const auto& r : doc.rays) {
    json row = json::array();
    for (std::size_t i = 0; i < r.rank(); ++i) {
      if (r[i].fits_slong_p())
        row.push_back(r[i].get_si());
      else
        row.push_back(r[i].get_str());
    }
    rays.push_back(std::move(row));
  }
  for (const auto& c : doc.cones) cones.push_back(json(c));
  return "{\n  \"name\": " + json(doc.name).dump() + ",\n  \"lattice_rank\": " + std::to_string(doc.lattice_rank) +
         ",\n  \"rays\": " + rows(rays) + ",\n  \"cones\": " + rows(cones) + "\n}\n";
}

}  // namespace toric
