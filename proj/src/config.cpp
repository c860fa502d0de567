#include "slalom/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "slalom/errors.hpp"

namespace slalom {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view value, int line) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DomainError("config line " + std::to_string(line) + ": bad value for " + std::string(key));
  }
  return out;
}

}  // namespace

void Config::validate() const {
  if (samples_per_turn < 16) throw DomainError("samples_per_turn must be at least 16");
  if (!(lift_tolerance > 0.0)) throw DomainError("lift_tolerance must be positive");
  if (!(svg_scale > 0.0)) throw DomainError("svg_scale must be positive");
}

Config parse_config(std::string_view text, Config base) {
  double c_minus = base.bound_constants.c_minus();
  double c_plus = base.bound_constants.c_plus();
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "c_minus") {
      c_minus = parse_number<double>(key, value, line_no);
    } else if (key == "c_plus") {
      c_plus = parse_number<double>(key, value, line_no);
    } else if (key == "samples_per_turn") {
      base.samples_per_turn = parse_number<int>(key, value, line_no);
    } else if (key == "lift_tolerance") {
      base.lift_tolerance = parse_number<double>(key, value, line_no);
    } else if (key == "svg_scale") {
      base.svg_scale = parse_number<double>(key, value, line_no);
    } else {
      throw DomainError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  base.bound_constants = BoundConstants(c_minus, c_plus);
  base.validate();
  return base;
}

Config load_config(const std::filesystem::path& file, Config base) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot read config file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

}  // namespace slalom
