#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallnorm {

enum class ErrorKind {
  MalformedInput,
  DartMultiplicity,
  BadDegree,
  BadEuler,
  TorsionDetected,
  OpenWalk,
  NotABasis,
  NotEulerian,
  NotBipartite,
  ResourceLimit,
  DegenerateBall,
  BoxExceeded,
  UnstableTruncation,
  NotRealizable,
  WrongGenus,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by every library operation; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wallnorm
