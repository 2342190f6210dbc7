#include "arrlab/local_system.hpp"

#include <json.hpp>

namespace arrlab {

using nlohmann::json;

Rat LocalSystem::weight_at_infinity(std::size_t j) const {
  Rat s = 0;
  for (const auto& row : weights) s += row[j];
  return -s;
}

LocalSystem LocalSystem::channel(std::size_t j) const {
  LocalSystem out;
  out.rank = 1;
  for (const auto& row : weights) out.weights.push_back({row[j]});
  return out;
}

LocalSystem parse_local_system(std::string_view text, const Arrangement& a) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc["rank"].is_number_unsigned() ||
      doc["rank"].get<std::size_t>() == 0)
    throw Error(ErrorKind::MalformedInput, "\"rank\" must be a positive integer");
  if (!doc.contains("weights") || !doc["weights"].is_array())
    throw Error(ErrorKind::MalformedInput, "missing \"weights\" array");

  LocalSystem l;
  l.rank = doc["rank"].get<std::size_t>();
  for (const auto& row : doc["weights"]) {
    if (!row.is_array() || row.size() != l.rank)
      throw Error(ErrorKind::MalformedInput, "weight row " + std::to_string(l.weights.size() + 1) +
                                                 " must have " + std::to_string(l.rank) + " entries");
    RatVector r;
    for (const auto& x : row) {
      if (x.is_string())
        r.push_back(Rat::parse(x.get<std::string>()));
      else if (x.is_number_integer())
        r.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      else
        throw Error(ErrorKind::MalformedInput, "weights must be rational strings");
    }
    l.weights.push_back(std::move(r));
  }
  if (l.weights.size() != a.size())
    throw Error(ErrorKind::RowCountMismatch, std::to_string(l.weights.size()) + " weight rows for " +
                                                 std::to_string(a.size()) + " hyperplanes");
  return l;
}

std::string serialize(const LocalSystem& l) {
  json rows = json::array();
  for (const auto& row : l.weights) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return json{{"rank", l.rank}, {"weights", rows}}.dump(2) + "\n";
}

LocalSystem dual(const LocalSystem& l) {
  LocalSystem out = l;
  for (auto& row : out.weights)
    for (auto& x : row) x = -x;
  return out;
}

ResonanceVerdict nonresonance_check(const Arrangement& a, const LocalSystem& l) {
  const auto edges = dense_edges(a);
  const std::size_t inf = a.size();
  ResonanceVerdict v;
  for (const auto& e : edges) {
    if (!e.dense) continue;
    for (std::size_t j = 0; j < l.rank; ++j) {
      Rat s = 0;
      for (auto k : e.flat_indices) s += k == inf ? l.weight_at_infinity(j) : l.weights[k][j];
      if (s.is_integer()) v.violations.push_back({e, j, s});
    }
  }
  v.nonresonant = v.violations.empty();
  return v;
}

ResonantError::ResonantError(ResonanceVerdict verdict)
    : Error(ErrorKind::Resonant, std::to_string(verdict.violations.size()) +
                                     " dense edge/channel pair(s) with monodromy eigenvalue 1"),
      verdict_(std::move(verdict)) {}

}  // namespace arrlab
