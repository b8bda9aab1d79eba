#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "barutkit/noether.hpp"

namespace barutkit {

struct Config {
  double alpha_inverse = 137.03;
  double electron_mass_mev = 0.511;
  double tolerance = 1e-10;
  double box_length = 16.0;
  std::string output_format = "json";  // json | csv

  void validate() const;  // throws std::domain_error
};

// Load order: explicit path if given, else $BARUT_KIT_CONFIG, else defaults.
Config load_config(const std::string& path);

ModeSet parse_modeset(const std::string& json_text);
ModeSet load_modeset(const std::string& path);

// Deterministic JSON output: keys emitted in sorted order, doubles printed
// with 17 significant digits, so identical inputs give byte-identical output.
class JsonValue {
 public:
  using Array = std::vector<JsonValue>;
  using Object = std::map<std::string, JsonValue>;

  JsonValue() : v_(nullptr) {}
  JsonValue(bool b) : v_(b) {}
  JsonValue(int i) : v_(static_cast<int64_t>(i)) {}
  JsonValue(int64_t i) : v_(i) {}
  JsonValue(size_t i) : v_(static_cast<int64_t>(i)) {}
  JsonValue(double d) : v_(d) {}
  JsonValue(const char* s) : v_(std::string(s)) {}
  JsonValue(std::string s) : v_(std::move(s)) {}
  JsonValue(Array a) : v_(std::move(a)) {}
  JsonValue(Object o) : v_(std::move(o)) {}
  JsonValue(cxd z) : v_(Array{JsonValue(z.real()), JsonValue(z.imag())}) {}

  std::string dump() const;

 private:
  std::variant<std::nullptr_t, bool, int64_t, double, std::string, Array, Object> v_;
  void write(std::string& out) const;
};

std::string format_double17(double d);

}  // namespace barutkit
