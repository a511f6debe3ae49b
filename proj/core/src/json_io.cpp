#include "ordstop/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ordstop {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ArgumentError(std::string("missing numeric field '") + key + "'");
  }
  return obj[key].get<double>();
}

std::vector<double> number_array_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_array()) {
    throw ArgumentError(std::string("missing array field '") + key + "'");
  }
  std::vector<double> out;
  out.reserve(obj[key].size());
  for (const json& v : obj[key]) {
    if (!v.is_number()) {
      throw ArgumentError(std::string("non-numeric entry in '") + key + "'");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

Dist dist_from_json(const json& obj) {
  if (!obj.is_object() || !obj.contains("type") || !obj["type"].is_string()) {
    throw ArgumentError("distribution object needs a string 'type'");
  }
  const std::string type = obj["type"].get<std::string>();
  if (type == "finite") {
    return FiniteDist(number_array_field(obj, "atoms"),
                      number_array_field(obj, "masses"));
  }
  if (type == "uniform") {
    return UniformDist(number_field(obj, "lo"), number_field(obj, "hi"));
  }
  if (type == "two_point") {
    return two_point(number_field(obj, "a"), number_field(obj, "b"),
                     number_field(obj, "p"));
  }
  if (type == "three_point") {
    return three_point(number_field(obj, "a"), number_field(obj, "m"),
                       number_field(obj, "b"), number_field(obj, "p"),
                       number_field(obj, "q"));
  }
  throw ArgumentError("unknown distribution type '" + type + "'");
}

json dist_to_json(const Dist& d) {
  json obj;
  if (const FiniteDist* f = std::get_if<FiniteDist>(&d)) {
    obj["type"] = "finite";
    obj["atoms"] = f->atoms();
    obj["masses"] = f->masses();
  } else {
    const UniformDist& u = std::get<UniformDist>(d);
    obj["type"] = "uniform";
    obj["lo"] = u.lo;
    obj["hi"] = u.hi;
  }
  return obj;
}

json parse_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw ArgumentError("malformed JSON");
  return parsed;
}

InstanceFile instance_from_json(const json& obj) {
  if (!obj.is_object()) throw ArgumentError("instance must be a JSON object");
  InstanceFile file;
  if (!obj.contains("version") || !obj["version"].is_number_integer() ||
      obj["version"].get<int>() != 1) {
    throw ArgumentError("instance version must be 1");
  }
  if (!obj.contains("variables") || !obj["variables"].is_array() ||
      obj["variables"].empty()) {
    throw ArgumentError("instance needs a non-empty 'variables' array");
  }
  for (const json& v : obj["variables"]) {
    file.variables.push_back(dist_from_json(v));
  }
  if (obj.contains("metadata")) {
    if (!obj["metadata"].is_object()) {
      throw ArgumentError("metadata must be an object");
    }
    for (const auto& [key, value] : obj["metadata"].items()) {
      if (!value.is_number()) {
        throw ArgumentError("metadata values must be numeric");
      }
      file.metadata[key] = value.get<double>();
    }
  }
  return file;
}

json instance_to_json(const InstanceFile& file) {
  json obj;
  obj["version"] = 1;
  obj["variables"] = json::array();
  for (const Dist& d : file.variables) {
    obj["variables"].push_back(dist_to_json(d));
  }
  if (!file.metadata.empty()) {
    obj["metadata"] = file.metadata;
  }
  return obj;
}

}  // namespace

Dist dist_from_json_string(const std::string& text) {
  return dist_from_json(parse_text(text));
}

std::string dist_to_json_string(const Dist& d) { return dist_to_json(d).dump(); }

InstanceFile instance_from_json_string(const std::string& text) {
  return instance_from_json(parse_text(text));
}

std::string instance_to_json_string(const InstanceFile& file) {
  return instance_to_json(file).dump();
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json_string(buffer.str());
}

void save_instance(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write instance file: " + path);
  out << instance_to_json(file).dump(2) << "\n";
}

std::string instance_digest(const InstanceFile& file) {
  json vars = json::array();
  for (const Dist& d : file.variables) vars.push_back(dist_to_json(d));
  const std::string canonical = vars.dump();

  // FNV-1a, 64 bit.
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string digest(16, '0');
  for (int i = 15; i >= 0; --i) {
    digest[static_cast<std::size_t>(i)] = hex[hash & 0xF];
    hash >>= 4;
  }
  return digest;
}

}  // namespace ordstop
