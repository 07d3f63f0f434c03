// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_TESTS_SUBPROCESS_HPP
#define SUMFLOW_TESTS_SUBPROCESS_HPP

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace sumflow::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;  // captured stdout
};

/// Runs a shell command, capturing stdout; stderr is dropped (it carries
/// only timing noise).
inline RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

}  // namespace sumflow::testing

#endif  // SUMFLOW_TESTS_SUBPROCESS_HPP
