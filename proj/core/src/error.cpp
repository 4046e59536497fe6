#include "magdiff/error.hpp"

namespace magdiff {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::AccuracyFailure: return "accuracy-failure";
    case ErrorKind::NoRoot: return "no-root";
    case ErrorKind::AmbiguousRoot: return "ambiguous-root";
    case ErrorKind::DomainTooSmall: return "domain-too-small";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::FrontNotFound: return "front-not-found";
  }
  return "unknown";
}

}  // namespace magdiff
