#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fga/groebner.hpp"
#include "fga/groups.hpp"
#include "fga/modules.hpp"
#include "fga/parse.hpp"

namespace fga {

inline nlohmann::json to_json(const GroebnerData &g) {
  nlohmann::json j;
  j["firsts"] = nlohmann::json::array();
  for (const auto &f : g.firsts)
    j["firsts"].push_back(to_string(f));
  j["seconds"] = nlohmann::json::array();
  for (const auto &f : g.seconds)
    j["seconds"].push_back(to_string(f));
  j["C"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.C.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < g.C.cols(); ++k)
      row.push_back(to_string(g.C.at(i, k)));
    j["C"].push_back(row);
  }
  j["lpps"] = nlohmann::json::array();
  for (const auto &w : g.lpp_set)
    j["lpps"].push_back(to_string(w));
  j["rank"] = g.ideal_rank();
  return j;
}

inline nlohmann::json to_json(const Submodule &m) {
  nlohmann::json j;
  j["k"] = m.ambient_k();
  j["gens"] = nlohmann::json::array();
  for (const auto &g : m.gens()) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
      row.push_back(to_string(g[i]));
    j["gens"].push_back(row);
  }
  return j;
}

inline nlohmann::json to_json(const Subgroup &h) {
  nlohmann::json j;
  j["rank"] = h.ambient_rank;
  j["gens"] = nlohmann::json::array();
  for (const auto &w : h.gens)
    j["gens"].push_back(to_string(w));
  return j;
}

inline Submodule submodule_from_json(const nlohmann::json &j, FieldSpec field,
                                     int rank) {
  std::size_t k = j.at("k").get<std::size_t>();
  std::vector<AlgebraVector> gens;
  for (const auto &row : j.at("gens")) {
    std::vector<AlgebraElement> entries;
    for (const auto &s : row)
      entries.push_back(parse_element(s.get<std::string>(), field, rank));
    if (entries.size() != k)
      throw precondition_error("generator length differs from k");
    gens.push_back(AlgebraVector(std::move(entries)));
  }
  if (gens.empty())
    throw precondition_error("submodule needs at least one generator");
  return Submodule(k, std::move(gens));
}

inline Subgroup subgroup_from_json(const nlohmann::json &j, int rank) {
  std::vector<Word> gens;
  for (const auto &s : j.at("gens"))
    gens.push_back(parse_word(s.get<std::string>(), rank));
  return Subgroup(rank, std::move(gens));
}

} // namespace fga
