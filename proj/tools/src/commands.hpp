#pragma once

#include <string>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "settings.hpp"

namespace carmichael::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

struct Context {
  Settings* settings = nullptr;
  RunManifest* manifest = nullptr;
  unsigned threads = 1;
  std::string output;  // machine output, flushed by main

  void note(std::string text) { manifest->add_note(std::move(text)); }
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  int (*run)(Context&) = nullptr;
  Settings settings;
};

/// Adds the subcommand and binds its flags to cmd.settings.
void register_test(CLI::App& root, Command& cmd);
void register_enumerate(CLI::App& root, Command& cmd);
void register_classify(CLI::App& root, Command& cmd);
void register_construct(CLI::App& root, Command& cmd);
void register_progression(CLI::App& root, Command& cmd);
void register_nu(CLI::App& root, Command& cmd);
void register_erdos(CLI::App& root, Command& cmd);

}  // namespace carmichael::cli
