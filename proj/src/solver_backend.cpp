#include "cfe/solver_backend.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cfe/mps_writer.hpp"

namespace cfe {

namespace {

std::string substitute(const std::string& tmpl, const std::string& key,
                       const std::string& value) {
  std::string out = tmpl;
  size_t pos = 0;
  while ((pos = out.find(key, pos)) != std::string::npos) {
    out.replace(pos, key.size(), value);
    pos += value.size();
  }
  return out;
}

// Runs `sh -c cmd` with a deadline. Returns the exit status, or throws on
// timeout/spawn failure.
int run_with_timeout(const std::string& cmd, double timeout_seconds) {
  const pid_t pid = fork();
  if (pid < 0) throw SolverError("backend: fork failed");
  if (pid == 0) {
    execl("/bin/sh", "sh", "-c", cmd.c_str(), (char*)nullptr);
    _exit(127);
  }
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_seconds);
  while (true) {
    int status = 0;
    const pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      if (WIFEXITED(status)) return WEXITSTATUS(status);
      throw SolverError("backend: solver terminated by signal");
    }
    if (r < 0 && errno != EINTR) throw SolverError("backend: waitpid failed");
    if (std::chrono::steady_clock::now() > deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      throw SolverError("backend: solver timed out after " +
                        std::to_string(timeout_seconds) + "s");
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
}

std::filesystem::path temp_path(const char* suffix) {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path();
  return dir / ("cfe_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + suffix);
}

}  // namespace

void BackendConfig::validate() const {
  if (command_template.find("{mps}") == std::string::npos ||
      command_template.find("{sol}") == std::string::npos)
    throw ValidationError(
        "backend: command template must contain {mps} and {sol}");
  if (timeout_seconds <= 0.0)
    throw ValidationError("backend: timeout must be > 0");
}

Solution parse_solution_text(const LinearModel& model,
                             const std::string& text) {
  std::istringstream in(text);
  std::string token;
  if (!(in >> token)) throw SolverError("backend: empty solution file");
  if (token == "infeasible")
    return Solution{Solution::Status::Infeasible, {}, 0.0};
  if (token == "unbounded")
    return Solution{Solution::Status::Unbounded, {}, 0.0};
  if (token != "objective")
    throw SolverError("backend: expected `objective <value>` or "
                      "`infeasible`, got `" + token + "`");
  Solution sol;
  sol.status = Solution::Status::Optimal;
  if (!(in >> sol.objective))
    throw SolverError("backend: unparseable objective value");

  sol.values.assign(model.num_variables(), 0.0);
  std::vector<bool> seen(model.num_variables(), false);
  std::string name;
  double value;
  while (in >> name) {
    if (!(in >> value))
      throw SolverError("backend: missing value for variable `" + name + "`");
    const int idx = model.index_of(name);
    if (idx < 0) {
      std::cerr << "[cfe] warning: solver reported unknown variable `" << name
                << "`\n";
      continue;
    }
    sol.values[idx] = value;
    seen[idx] = true;
  }
  for (int j = 0; j < model.num_variables(); ++j)
    if (!seen[j])
      std::cerr << "[cfe] warning: no value for variable `"
                << model.variable(j).name << "`; defaulting to 0\n";
  return sol;
}

Solution solve_external(const LinearModel& model,
                        const BackendConfig& backend) {
  backend.validate();
  const auto mps_path = temp_path(".mps");
  const auto sol_path = temp_path(".sol");
  {
    std::ofstream out(mps_path);
    if (!out) throw SolverError("backend: cannot write " + mps_path.string());
    out << emit_mps(model);
  }
  std::string cmd = substitute(backend.command_template, "{mps}",
                               mps_path.string());
  cmd = substitute(cmd, "{sol}", sol_path.string());

  struct Cleanup {
    std::filesystem::path a, b;
    ~Cleanup() {
      std::error_code ec;
      std::filesystem::remove(a, ec);
      std::filesystem::remove(b, ec);
    }
  } cleanup{mps_path, sol_path};

  const int rc = run_with_timeout(cmd, backend.timeout_seconds);
  if (rc != 0)
    throw SolverError("backend: command exited with status " +
                      std::to_string(rc));
  std::ifstream in(sol_path);
  if (!in)
    throw SolverError("backend: solver produced no solution file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_solution_text(model, buf.str());
}

std::optional<BackendConfig> backend_from_env() {
  const char* cmd = std::getenv("CFE_SOLVER_CMD");
  if (!cmd || !*cmd) return std::nullopt;
  BackendConfig cfg;
  cfg.command_template = cmd;
  cfg.validate();
  return cfg;
}

Solution SolverDispatch::solve(const LinearModel& model) const {
  if (backend) return solve_external(model, *backend);
  return solve_enumeration(model, enumeration);
}

}  // namespace cfe
