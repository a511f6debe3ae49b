#pragma once

#include <map>
#include <string>
#include <vector>

#include "ordstop/dist.hpp"

namespace ordstop {

/// On-disk instance: {"version": 1, "variables": [dist...], "metadata": {}}.
///
/// Distribution objects come in four forms:
///   {"type":"finite","atoms":[...],"masses":[...]}
///   {"type":"uniform","lo":x,"hi":y}
///   {"type":"two_point","a":..,"b":..,"p":..}
///   {"type":"three_point","a":..,"m":..,"b":..,"p":..,"q":..}
/// Serialization always emits the canonical "finite"/"uniform" forms.
struct InstanceFile {
  int version = 1;
  std::vector<Dist> variables;
  std::map<std::string, double> metadata;
};

Dist dist_from_json_string(const std::string& text);
std::string dist_to_json_string(const Dist& d);

InstanceFile instance_from_json_string(const std::string& text);
std::string instance_to_json_string(const InstanceFile& file);

InstanceFile load_instance(const std::string& path);
void save_instance(const std::string& path, const InstanceFile& file);

/// Stable hex digest of the canonical serialization of the variables,
/// used to identify instances in reports.
std::string instance_digest(const InstanceFile& file);

}  // namespace ordstop
