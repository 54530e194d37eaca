#pragma once

#include <stdexcept>
#include <string>

namespace klk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct SingularExpansionError : Error { using Error::Error; };
struct DivisionError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct ArityError : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };
struct InvalidSffError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct ModuleUnavailableError : Error { using Error::Error; };

// Malformed textual input. `where` is a byte offset or a line number,
// depending on the format.
struct ParseError : Error {
  ParseError(const std::string& what, long where)
      : Error(what + " (at " + std::to_string(where) + ")"), location(where) {}
  long location;
};

}  // namespace klk
