#ifndef BOIJ_TESTS_RUN_HPP
#define BOIJ_TESTS_RUN_HPP

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace boij::test {

struct RunResult {
  int status = -1;
  std::string out;
};

/// Runs a shell command and captures its stdout.
inline RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace boij::test

#endif  // BOIJ_TESTS_RUN_HPP
