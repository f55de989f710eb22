#include "settings.hpp"

#include <fstream>
#include <sstream>

#include "carmichael/bigint.hpp"
#include "carmichael/error.hpp"

namespace carmichael::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

CLI::Option* Settings::add(CLI::App* app, const std::string& flag, const std::string& key, std::string default_value,
                           const std::string& help) {
  auto& e = entries_[key];
  e.value = std::move(default_value);
  e.option = app->add_option(flag, e.flag_value, help + " [" + (e.value.empty() ? "unset" : e.value) + "]");
  return e.option;
}

void Settings::declare(const std::string& key, std::string default_value) { entries_[key].value = std::move(default_value); }

std::map<std::string, std::string> parse_config_text(const std::string& text, const std::string& origin) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw PreconditionError(origin + ":" + std::to_string(no) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void Settings::merge(const std::optional<std::filesystem::path>& config_file) {
  if (config_file) {
    std::ifstream in(*config_file);
    if (!in) throw PreconditionError("cannot read config file " + config_file->string());
    std::stringstream buf;
    buf << in.rdbuf();
    for (auto& [k, v] : parse_config_text(buf.str(), config_file->string())) {
      auto it = entries_.find(k);
      if (it == entries_.end()) throw PreconditionError(config_file->string() + ": unknown key '" + k + "'");
      it->second.value = v;
    }
  }
  for (auto& [k, e] : entries_) {
    if (e.option && e.option->count() > 0) e.value = e.flag_value;
  }
}

bool Settings::has(const std::string& key) const {
  auto it = entries_.find(key);
  return it != entries_.end() && !it->second.value.empty();
}

const std::string& Settings::str(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw std::logic_error("undeclared setting " + key);
  return it->second.value;
}

u64 Settings::u(const std::string& key) const {
  try {
    return parse_u64(str(key));
  } catch (const Error&) {
    throw PreconditionError(key + ": expected a nonnegative integer, got '" + str(key) + "'");
  }
}

i64 Settings::i(const std::string& key) const {
  const std::string& s = str(key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError(key + ": expected an integer, got '" + s + "'");
  }
}

bool Settings::flag(const std::string& key) const {
  const std::string& s = str(key);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off" || s.empty()) return false;
  throw PreconditionError(key + ": expected a boolean, got '" + s + "'");
}

nlohmann::json Settings::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, e] : entries_) j[k] = e.value;
  return j;
}

}  // namespace carmichael::cli
