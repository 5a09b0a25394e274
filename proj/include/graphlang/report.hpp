#pragma once

#include <string>

#include <json.hpp>

#include "graphlang/family.hpp"
#include "graphlang/properties.hpp"

namespace graphlang {

nlohmann::json graph_json(const Graph& g);
nlohmann::json analysis_json(const Analysis& a);
nlohmann::json verdict_json(const Verdict& v, const std::string& property);

std::string analysis_text(const Analysis& a);
std::string verdict_text(const Verdict& v, const std::string& property);

} // namespace graphlang
