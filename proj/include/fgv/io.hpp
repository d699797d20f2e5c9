#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fgv/configuration.hpp"
#include "fgv/ledger.hpp"
#include "fgv/vconfig.hpp"

namespace fgv::io {

/// Standard schema.  Coordinate configurations:
///   { "dim": n, "points": [[bits...], ...], "lines": [[i,j,k], ...] }
/// with points in enumeration order and lines sorted lexicographically.
/// Abstract configurations store "points" as a count plus optional labels.
nlohmann::json to_json(const LineConfiguration& c);
LineConfiguration configuration_from_json(const nlohmann::json& j);

LineConfiguration load_configuration(const std::string& path);
void save_configuration(const LineConfiguration& c, const std::string& path);

nlohmann::json to_json(const IncidenceProfile& p);
nlohmann::json to_json(const ParameterTable& t);
nlohmann::json to_json(const std::vector<NumericEntry>& entries);
nlohmann::json to_json(const ledger::DegreeLedger& l);

/// DOT export of the incidence graph: vertices by point index, one edge
/// per collinear pair, stable ordering.
std::string to_dot(const LineConfiguration& c, const std::string& name = "incidence");

}  // namespace fgv::io
