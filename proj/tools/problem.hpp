#pragma once

#include <gitfan/groupdata.hpp>

#include <map>
#include <string>

namespace gitfan::io {

/// Malformed problem file or command-line value.
class SchemaError : public Error {
 public:
  using Error::Error;
};

struct Problem {
  GroupSpec group;
  ModuleSpec module;
  /// Named characters in X^*(G) coordinates.
  std::map<std::string, LatVec> characters;
};

/// Parses a problem file. Integers may be JSON numbers or decimal strings.
/// Throws SchemaError.
Problem parse_problem(const std::string& text);

}  // namespace gitfan::io
