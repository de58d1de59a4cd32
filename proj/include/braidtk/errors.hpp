#pragma once

#include <stdexcept>
#include <string>

namespace braidtk {

// Input text could not be parsed. `line` is 1-based when reading a file, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A configured node/size cap was exceeded before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class StrandMismatch : public std::invalid_argument {
 public:
  explicit StrandMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// A DividingSetOrbitModel whose multiplicities are not constant on monodromy orbits.
class InvalidModel : public std::invalid_argument {
 public:
  explicit InvalidModel(const std::string& msg) : std::invalid_argument(msg) {}
};

// A move in a MovePath whose precondition fails during replay.
class MalformedMove : public std::runtime_error {
 public:
  explicit MalformedMove(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace braidtk
