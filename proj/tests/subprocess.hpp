#ifndef GE_TESTS_SUBPROCESS_HPP
#define GE_TESTS_SUBPROCESS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

inline RunResult run_command(const std::string &command) {
  RunResult result;
  FILE *pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("failed to spawn: " + command);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

} // namespace testutil

#endif
