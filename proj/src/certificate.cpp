#include "fano216/certificate.hpp"

#include <json.hpp>

namespace fano216 {

void Certificate::add_result(const std::string& name, const Rational& value,
                             const std::string& anchor) {
  results.emplace_back(name, value.str());
  if (!anchor.empty()) anchors.emplace_back(name, anchor);
}

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json jm = nlohmann::ordered_json::object();
  for (const auto& [name, hash] : models) jm[name] = hash;
  j["models"] = jm;
  nlohmann::ordered_json jr = nlohmann::ordered_json::object();
  for (const auto& [name, value] : results) jr[name] = value;
  j["results"] = jr;
  nlohmann::ordered_json ja = nlohmann::ordered_json::object();
  for (const auto& [name, anchor] : anchors) ja[name] = anchor;
  j["anchors"] = ja;
  j["verdicts"] = verdicts;
  j["discrepancies"] = discrepancies;
  return j.dump(2);
}

}  // namespace fano216
