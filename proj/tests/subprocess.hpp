#pragma once

// Runs the CLI binary named by the HOPFIND_CLI environment variable
// (set by the ctest harness) and captures exit code plus combined output.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

struct CliResult {
  int exit_code = -1;
  std::string output;

  bool contains(const std::string& needle) const { return output.find(needle) != std::string::npos; }
};

inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* cli = std::getenv("HOPFIND_CLI");
  if (!cli) throw std::runtime_error("HOPFIND_CLI environment variable is not set");
  std::string cmd = env_prefix + std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = std::move(out);
  return r;
}
