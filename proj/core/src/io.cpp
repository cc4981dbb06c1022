#include "xpineq/io.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace xpineq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json values_json(int n, const char* repr, const std::vector<double>& data) {
  ordered_json j;
  j["n"] = n;
  j["repr"] = repr;
  j["data"] = data;
  return j;
}

ordered_json parse(const std::string& text) {
  return ordered_json::parse(text);  // throws nlohmann::json::parse_error on bad input
}

std::vector<double> data_field(const ordered_json& j) {
  if (!j.contains("data") || !j["data"].is_array())
    throw std::invalid_argument("json: missing \"data\" array");
  return j["data"].get<std::vector<double>>();
}

const char* mode_name(EvalMode mode) {
  return mode == EvalMode::exact ? "exact" : "monte_carlo";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const CubeFunction& h) {
  return values_json(h.n(), "point", h.values()).dump(2);
}

std::string to_json(const WalshSpectrum& spectrum) {
  return values_json(spectrum.n(), "walsh", spectrum.coeffs()).dump(2);
}

std::string to_json(const TorusFunction& f) {
  ordered_json j;
  j["r"] = f.r();
  j["n"] = f.n();
  j["data"] = f.values();
  return j.dump(2);
}

CubeFunction cube_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (j.value("repr", "") != "point")
    throw std::invalid_argument("cube_from_json: expected repr == \"point\"");
  return CubeFunction(j.at("n").get<int>(), data_field(j));
}

WalshSpectrum spectrum_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (j.value("repr", "") != "walsh")
    throw std::invalid_argument("spectrum_from_json: expected repr == \"walsh\"");
  return WalshSpectrum(j.at("n").get<int>(), data_field(j));
}

TorusFunction torus_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  return TorusFunction::dense(j.at("r").get<int>(), j.at("n").get<int>(), data_field(j));
}

std::string report_to_json(const InequalityReport& report, int indent) {
  ordered_json j;
  j["name"] = report.name;
  j["params"] = report.params;
  j["lhs"] = report.lhs;
  j["rhs_terms"] = report.rhs_terms;
  j["ratio"] = report.ratio;
  j["root_exponent"] = report.root_exponent;
  j["mode"] = mode_name(report.mode);
  j["stderrs"] = report.stderrs;
  j["aux"] = report.aux;
  j["flags"] = report.flags;
  j["seed"] = report.seed;
  return j.dump(indent);
}

std::string report_csv_header(const InequalityReport& report) {
  std::string line = "name";
  for (const auto& [key, value] : report.params) line += "," + key;
  line += ",lhs";
  for (const auto& [key, value] : report.rhs_terms) line += ",rhs_" + key;
  line += ",ratio,root_exponent,mode,seed";
  for (const auto& [key, value] : report.stderrs) line += ",stderr_" + key;
  for (const auto& [key, value] : report.aux) line += ",aux_" + key;
  for (const auto& [key, value] : report.flags) line += ",flag_" + key;
  return line;
}

std::string report_csv_row(const InequalityReport& report) {
  std::string line = report.name;
  for (const auto& [key, value] : report.params) line += "," + format_double(value);
  line += "," + format_double(report.lhs);
  for (const auto& [key, value] : report.rhs_terms) line += "," + format_double(value);
  line += "," + format_double(report.ratio);
  line += "," + format_double(report.root_exponent);
  line += std::string(",") + mode_name(report.mode);
  line += "," + std::to_string(report.seed);
  for (const auto& [key, value] : report.stderrs) line += "," + format_double(value);
  for (const auto& [key, value] : report.aux) line += "," + format_double(value);
  for (const auto& [key, value] : report.flags) line += value ? ",1" : ",0";
  return line;
}

}  // namespace xpineq
