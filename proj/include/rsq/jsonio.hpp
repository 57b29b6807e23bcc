// Strict JSON object access: unknown keys are rejected, types are checked,
// every error message carries the path of the offending element.
#pragma once

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rsq/errors.hpp"

namespace rsq {

using json = nlohmann::json;

inline void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
}

inline void expect_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
}

// allowed must contain required.
inline void check_keys(const json& obj, const std::string& where,
                       std::initializer_list<const char*> required,
                       std::initializer_list<const char*> optional) {
  expect_object(obj, where);
  for (auto& [key, val] : obj.items()) {
    (void)val;
    bool known = false;
    for (const char* r : required)
      if (key == r) known = true;
    for (const char* o : optional)
      if (key == o) known = true;
    if (!known) throw InputError(where + ": unknown key '" + key + "'");
  }
  for (const char* r : required)
    if (!obj.contains(r)) throw InputError(where + ": missing key '" + std::string(r) + "'");
}

inline long long get_int(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
  return v.get<long long>();
}

inline std::string get_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw InputError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline bool get_bool(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_boolean()) throw InputError(where + "." + key + ": expected a boolean");
  return v.get<bool>();
}

// FNV-1a 64-bit over raw bytes; stable id for reports, not cryptographic.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hexd = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hexd[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

} // namespace rsq
