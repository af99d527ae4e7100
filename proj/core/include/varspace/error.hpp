#pragma once

#include <stdexcept>
#include <string>

namespace varspace {

// Raised when an operation is called outside its documented domain
// (bad grid size, exponent below the required bound, threshold not met...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace varspace
