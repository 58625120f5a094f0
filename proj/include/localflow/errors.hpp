#pragma once

#include <stdexcept>
#include <string>

namespace localflow {

// Malformed user input: files, flags, specs. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation's precondition on the graph or flow does not hold (invalid
// graph, invalid flow, unknown node or edge).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace localflow
