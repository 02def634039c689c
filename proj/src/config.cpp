#include "rvar/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "rvar/errors.hpp"

namespace rvar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  value = trim(value);
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
    throw ConfigError(std::string(key) + ": '" + std::string(value) + "' is not a valid number");
  }
  return out;
}

std::vector<std::uint32_t> parse_list(std::string_view key, std::string_view value) {
  std::vector<std::uint32_t> out;
  value = trim(value);
  if (value.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.find(',', start);
    out.push_back(parse_number<std::uint32_t>(key, value.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

using Setter = std::function<void(SweepConfig&, std::string_view, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  const auto int_field = [](int SweepConfig::*field) {
    return Setter([field](SweepConfig& c, std::string_view k, std::string_view v) { c.*field = parse_number<int>(k, v); });
  };
  const auto list_field = [](std::vector<std::uint32_t> SweepConfig::*field) {
    return Setter([field](SweepConfig& c, std::string_view k, std::string_view v) { c.*field = parse_list(k, v); });
  };
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"k_min", int_field(&SweepConfig::k_min)},
      {"k_max", int_field(&SweepConfig::k_max)},
      {"n_min", int_field(&SweepConfig::n_min)},
      {"n_max", int_field(&SweepConfig::n_max)},
      {"primes", list_field(&SweepConfig::primes)},
      {"count_primes", list_field(&SweepConfig::count_primes)},
      {"nonempty_primes", list_field(&SweepConfig::nonempty_primes)},
      {"interpolation_primes", list_field(&SweepConfig::interpolation_primes)},
      {"interpolation_n_max", int_field(&SweepConfig::interpolation_n_max)},
      {"exhaustive_n_max", int_field(&SweepConfig::exhaustive_n_max)},
      {"oracle_n_max", int_field(&SweepConfig::oracle_n_max)},
      {"rational_samples", int_field(&SweepConfig::rational_samples)},
      {"relation_samples", int_field(&SweepConfig::relation_samples)},
      {"seed", [](SweepConfig& c, std::string_view k, std::string_view v) { c.seed = parse_number<std::uint64_t>(k, v); }},
      {"budget",
       [](SweepConfig& c, std::string_view k, std::string_view v) { c.budget = parse_number<std::uint64_t>(k, v); }},
      {"report", [](SweepConfig& c, std::string_view, std::string_view v) { c.report_path = std::string(trim(v)); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [key, setter] : setters()) out.push_back(key);
    return out;
  }();
  return keys;
}

void apply_setting(SweepConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  const auto& table = setters();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == key; });
  if (it == table.end()) throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  it->second(config, key, value);
}

void apply_config_text(SweepConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_environment(SweepConfig& config, const std::map<std::string, std::string>& env) {
  for (const auto& key : config_keys()) {
    std::string name = "RVAR_" + key;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (const auto it = env.find(name); it != env.end()) {
      try {
        apply_setting(config, key, it->second);
      } catch (const ConfigError& e) {
        throw ConfigError(name + ": " + e.what());
      }
    }
  }
}

}  // namespace rvar
