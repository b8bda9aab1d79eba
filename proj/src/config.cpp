#include "barutkit/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace barutkit {

void Config::validate() const {
  if (alpha_inverse <= 0.0 || electron_mass_mev <= 0.0 || box_length <= 0.0 || tolerance <= 0.0)
    throw std::domain_error("config: all numeric settings must be positive");
  if (tolerance >= 1e-6) throw std::domain_error("config: tolerance must be below 1e-6");
  if (output_format != "json" && output_format != "csv")
    throw std::domain_error("config: output_format must be json or csv");
}

Config load_config(const std::string& path) {
  std::string use = path;
  if (use.empty()) {
    if (const char* env = std::getenv("BARUT_KIT_CONFIG")) use = env;
  }
  Config cfg;
  if (use.empty()) return cfg;

  std::ifstream in(use);
  if (!in) throw std::runtime_error("config: cannot open " + use);
  nlohmann::json j;
  in >> j;
  if (j.contains("alpha_inverse")) cfg.alpha_inverse = j["alpha_inverse"].get<double>();
  if (j.contains("electron_mass_mev")) cfg.electron_mass_mev = j["electron_mass_mev"].get<double>();
  if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
  if (j.contains("box_length")) cfg.box_length = j["box_length"].get<double>();
  if (j.contains("output_format")) cfg.output_format = j["output_format"].get<std::string>();
  cfg.validate();
  return cfg;
}

ModeSet parse_modeset(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  ModeSet ms;
  ms.L = j.at("L").get<double>();
  ms.m = j.at("m").get<double>();
  for (const auto& jm : j.at("modes")) {
    Mode mode;
    const auto& n = jm.at("n");
    mode.n = {n.at(0).get<int>(), n.at(1).get<int>(), n.at(2).get<int>()};
    mode.h = jm.at("h").get<double>();
    const auto& a = jm.at("a");
    const auto& b = jm.at("b");
    mode.a = cxd(a.at(0).get<double>(), a.at(1).get<double>());
    mode.b = cxd(b.at(0).get<double>(), b.at(1).get<double>());
    ms.modes.push_back(mode);
  }
  validate_modeset(ms);
  return ms;
}

ModeSet load_modeset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("modeset: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_modeset(ss.str());
}

std::string format_double17(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

void JsonValue::write(std::string& out) const {
  struct Visitor {
    std::string& out;
    void operator()(std::nullptr_t) const { out += "null"; }
    void operator()(bool b) const { out += b ? "true" : "false"; }
    void operator()(int64_t i) const { out += std::to_string(i); }
    void operator()(double d) const { out += format_double17(d); }
    void operator()(const std::string& s) const {
      out += '"';
      for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
    }
    void operator()(const Array& a) const {
      out += '[';
      for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        a[i].write(out);
      }
      out += ']';
    }
    void operator()(const Object& o) const {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : o) {
        if (!first) out += ',';
        first = false;
        out += '"' + k + "\":";
        v.write(out);
      }
      out += '}';
    }
  };
  std::visit(Visitor{out}, v_);
}

std::string JsonValue::dump() const {
  std::string out;
  write(out);
  return out;
}

}  // namespace barutkit
