#pragma once

// Flat key=value settings: declared defaults, then a config file, then
// explicitly given flags.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "carmichael/numtheory.hpp"

namespace carmichael::cli {

class Settings {
 public:
  /// Declares `key` with a default and binds `--flag` on `app` to it.
  CLI::Option* add(CLI::App* app, const std::string& flag, const std::string& key, std::string default_value,
                   const std::string& help);

  /// Declares a key reachable only through the config file.
  void declare(const std::string& key, std::string default_value);

  /// Applies a config file and then every flag that was given explicitly.
  /// Throws PreconditionError for unknown keys or malformed lines.
  void merge(const std::optional<std::filesystem::path>& config_file);

  bool has(const std::string& key) const;
  const std::string& str(const std::string& key) const;
  u64 u(const std::string& key) const;
  i64 i(const std::string& key) const;
  bool flag(const std::string& key) const;

  nlohmann::json to_json() const;

 private:
  struct Entry {
    std::string value;
    std::string flag_value;
    CLI::Option* option = nullptr;
  };
  std::map<std::string, Entry> entries_;
};

/// Parses "key=value" lines; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> parse_config_text(const std::string& text, const std::string& origin);

}  // namespace carmichael::cli
