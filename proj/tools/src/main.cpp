#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "carmichael/error.hpp"
#include "commands.hpp"

using namespace carmichael;
using namespace carmichael::cli;

int main(int argc, char** argv) {
  CLI::App app{"Carmichael numbers: enumeration, classification and construction"};
  app.require_subcommand(1);
  std::string config_path, out_path, manifest_path;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--config", config_path, "flat key=value file; flags override it");
  app.add_option("--out", out_path, "write machine output here (atomically) instead of stdout");
  app.add_option("--manifest", manifest_path, "run manifest path ('-' for stderr; default <out>.manifest.json or stderr)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.fallthrough();

  Context ctx;
  std::vector<Command> commands(7);  // stable addresses: options bind into each Settings
  register_test(app, commands[0]);
  register_enumerate(app, commands[1]);
  register_classify(app, commands[2]);
  register_construct(app, commands[3]);
  register_progression(app, commands[4]);
  register_nu(app, commands[5]);
  register_erdos(app, commands[6]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kUsage;
  }

  Command* cmd = nullptr;
  for (auto& c : commands) {
    if (c.app->parsed()) cmd = &c;
  }
  RunManifest manifest(cmd->name, std::vector<std::string>(argv, argv + argc));
  ctx.manifest = &manifest;
  ctx.threads = threads;
  ctx.settings = &cmd->settings;

  int rc = kSuccess;
  try {
    ctx.settings->merge(config_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(config_path));
    nlohmann::json merged = ctx.settings->to_json();
    merged["threads"] = threads;
    manifest.set_config(merged);
    rc = cmd->run(ctx);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n" << cmd->app->help();
    return kUsage;
  } catch (const ResourceLimitError& e) {
    manifest.add_note(std::string("resource limit: ") + e.what());
    rc = kResourceLimit;
  } catch (const CorruptFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }

  const std::string digest = sha256_hex(ctx.output);
  if (out_path.empty()) {
    std::cout << ctx.output << std::flush;
    manifest.add_output({"stdout", ctx.output.size(), digest});
  } else {
    write_atomic(out_path, ctx.output);
    manifest.add_output({out_path, ctx.output.size(), digest});
  }
  if (manifest_path.empty()) manifest_path = out_path.empty() ? "-" : out_path + ".manifest.json";
  const nlohmann::json record = manifest.finish(rc);
  if (manifest_path == "-") {
    // Notes travel inside the manifest when it owns stderr.
    std::cerr << record.dump() << "\n";
  } else {
    for (const auto& n : manifest.notes()) std::cerr << n << "\n";
    write_atomic(manifest_path, record.dump(2) + "\n");
  }
  return rc;
}
