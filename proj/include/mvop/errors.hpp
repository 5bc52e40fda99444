#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mvop {

// Invalid inputs or contract violations (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: non-PD matrices, failed bracketing, overflow (exit code 3).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Estimation diverged or failed to converge (exit code 4).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what, std::vector<double> trace = {})
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

// Non-fatal diagnostics go to stderr; kept free of any global state beyond the stream.
void log_warning(const std::string& message);

}  // namespace mvop
