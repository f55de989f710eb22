#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace carmichael::cli {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& data);

struct OutputDigest {
  std::string destination;  // a path or "stdout"
  std::size_t bytes = 0;
  std::string sha256;
};

/// One record per run: command line, merged settings, seeds, timing, digests.
class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> argv);

  void set_config(nlohmann::json config) { config_ = std::move(config); }
  void add_seed(const std::string& name, std::uint64_t seed) { seeds_[name] = seed; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  void add_output(OutputDigest d) { outputs_.push_back(std::move(d)); }
  const std::vector<std::string>& notes() const { return notes_; }

  nlohmann::json finish(int exit_code);

 private:
  std::string command_;
  std::vector<std::string> argv_;
  nlohmann::json config_ = nlohmann::json::object();
  nlohmann::json seeds_ = nlohmann::json::object();
  std::vector<std::string> notes_;
  std::vector<OutputDigest> outputs_;
  std::chrono::system_clock::time_point start_;
};

std::string iso8601(std::chrono::system_clock::time_point t);

}  // namespace carmichael::cli
