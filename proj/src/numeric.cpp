#include "wallnorm/numeric.hpp"

#include <limits>
#include <sstream>

#include "wallnorm/error.hpp"

namespace wallnorm {

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

std::int64_t dot(const Coords& a, const Coords& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string format_tuple(const Coords& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::string format_spaced(const Coords& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c[i];
  }
  return os.str();
}

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::DartMultiplicity: return "DartMultiplicity";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::BadEuler: return "BadEuler";
    case ErrorKind::TorsionDetected: return "TorsionDetected";
    case ErrorKind::OpenWalk: return "OpenWalk";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::DegenerateBall: return "DegenerateBall";
    case ErrorKind::BoxExceeded: return "BoxExceeded";
    case ErrorKind::UnstableTruncation: return "UnstableTruncation";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::WrongGenus: return "WrongGenus";
  }
  return "Unknown";
}

}  // namespace wallnorm
