#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "endoring/json_io.hpp"

namespace endoring::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,              // success, verification pass or skipped
  kVerificationFailed = 1,
  kUsageError = 2,      // bad command line, malformed input, violated precondition
  kInternalError = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One manifest entry: the constructed module, bound context and expected verdicts.
struct CorpusFixture {
  std::string name;
  FPModule module;
  BoundContext context;
  Json expect;
};

/// Builds every fixture of a manifest without evaluating its checks.
/// Throws SchemaError for malformed manifests and std::runtime_error for missing files.
std::vector<CorpusFixture> load_corpus(const std::string& manifest_path);

struct CorpusResult {
  Json summary;
  int exit_code = kOk;
};

/// Runs every fixture of a manifest and compares against its expected verdicts.
/// Throws SchemaError for malformed manifests and std::runtime_error for missing files.
CorpusResult run_corpus(const std::string& manifest_path, std::uint64_t seed);

}  // namespace endoring::cli
