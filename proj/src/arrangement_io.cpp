#include <json.hpp>

#include "arrlab/arrangement.hpp"

namespace arrlab {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  throw Error(ErrorKind::MalformedInput, where + ": expected a rational string");
}

}  // namespace

Arrangement parse_arrangement(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw Error(ErrorKind::MalformedInput, "missing or invalid \"dim\"");
  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array())
    throw Error(ErrorKind::MalformedInput, "missing \"hyperplanes\" array");
  const auto dim = doc["dim"].get<std::size_t>();
  if (dim < 1) throw Error(ErrorKind::MalformedInput, "\"dim\" must be at least 1");

  std::vector<Hyperplane> hs;
  std::size_t i = 0;
  for (const auto& entry : doc["hyperplanes"]) {
    const std::string where = "hyperplane " + std::to_string(++i);
    if (!entry.is_object() || !entry.contains("normal") || !entry["normal"].is_array())
      throw Error(ErrorKind::MalformedInput, where + ": missing \"normal\"");
    Hyperplane h;
    for (const auto& x : entry["normal"]) h.normal.push_back(rat_from_json(x, where));
    if (h.normal.size() != dim)
      throw Error(ErrorKind::MalformedInput, where + ": normal has length " + std::to_string(h.normal.size()));
    h.offset = entry.contains("offset") ? rat_from_json(entry["offset"], where) : Rat(0);
    if (entry.contains("label")) {
      if (!entry["label"].is_string()) throw Error(ErrorKind::MalformedInput, where + ": label must be a string");
      h.label = entry["label"].get<std::string>();
    }
    hs.push_back(std::move(h));
  }
  return Arrangement(dim, std::move(hs));
}

std::string serialize(const Arrangement& a) {
  json hs = json::array();
  for (const auto& h : a.hyperplanes()) {
    json normal = json::array();
    for (const auto& x : h.normal) normal.push_back(x.str());
    hs.push_back({{"normal", normal}, {"offset", h.offset.str()}, {"label", h.label}});
  }
  json doc = {{"dim", a.dim()}, {"hyperplanes", hs}};
  return doc.dump(2) + "\n";
}

}  // namespace arrlab
