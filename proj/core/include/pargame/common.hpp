// Copyright 2026 The pargame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARGAME_COMMON_HPP_
#define PARGAME_COMMON_HPP_

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace pargame {

// Malformed textual input (arena files, set literals, QDIMACS).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// Well-formed input that violates a semantic requirement (unknown vertex
// name, missing target, invalid parameter value, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size cap was exceeded (e.g. the knowledge lattice grew past
// its element limit).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cooperative deadline expired mid-computation.
class TimeoutError : public std::runtime_error {
 public:
  explicit TimeoutError(const std::string& msg) : std::runtime_error(msg) {}
};

// Cooperative wall-clock budget. Long-running loops call check() at natural
// checkpoints; a default-constructed Deadline never expires.
class Deadline {
 public:
  Deadline() = default;

  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }

  bool unlimited() const { return !at_.has_value(); }

  bool expired() const {
    return at_.has_value() && std::chrono::steady_clock::now() >= *at_;
  }

  void check(const char* what) const {
    if (expired()) throw TimeoutError(std::string("timeout during ") + what);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace pargame

#endif  // PARGAME_COMMON_HPP_
