// Copyright 2026 The Trustmax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRUSTMAX_ERRORS_H_
#define TRUSTMAX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trustmax {

// Malformed or inconsistent input data. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

// Problem too large for a dense path (memory or enumeration cap).
class SizeError : public DataError {
 public:
  using DataError::DataError;
};

// Bad call: wrong pairing of options, repeated pin, budget out of range.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numerical failures. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(int iters, double residual)
      : NumericalError("no convergence after " + std::to_string(iters) +
                       " iterations, last residual " +
                       std::to_string(residual)),
        iters_(iters),
        residual_(residual) {}
  int iters() const { return iters_; }
  double residual() const { return residual_; }

 private:
  int iters_;
  double residual_;
};

class DegeneratePivotError : public NumericalError {
 public:
  DegeneratePivotError(int node, double pivot)
      : NumericalError("degenerate pivot q_ii=" + std::to_string(pivot) +
                       " at node " + std::to_string(node)),
        node_(node) {}
  int node() const { return node_; }

 private:
  int node_;
};

}  // namespace trustmax

#endif  // TRUSTMAX_ERRORS_H_
