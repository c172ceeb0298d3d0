#pragma once

#include <stdexcept>
#include <string>

namespace pigeonpost {

// Raised for malformed documents and for values that violate a domain
// invariant (self-demand, endpoint out of range, ...). The CLI maps it to
// exit code 3.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pigeonpost
