// Error type shared by every magdiff module.

#ifndef MAGDIFF_ERROR_HPP
#define MAGDIFF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magdiff {

enum class ErrorKind {
  InvalidArgument,
  AccuracyFailure,
  NoRoot,
  AmbiguousRoot,
  DomainTooSmall,
  NumericalFailure,
  FrontNotFound,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when the bracket scan finds more than one sign change.
class AmbiguousRootError : public Error {
 public:
  AmbiguousRootError(const std::string& what,
                     std::vector<std::pair<double, double>> brackets)
      : Error(ErrorKind::AmbiguousRoot, what), brackets_(std::move(brackets)) {}

  const std::vector<std::pair<double, double>>& brackets() const noexcept {
    return brackets_;
  }

 private:
  std::vector<std::pair<double, double>> brackets_;
};

/// Raised when the predicted front gets too close to the truncated boundary.
class DomainTooSmallError : public Error {
 public:
  DomainTooSmallError(const std::string& what, double required_x_max)
      : Error(ErrorKind::DomainTooSmall, what), required_x_max_(required_x_max) {}

  double required_x_max() const noexcept { return required_x_max_; }

 private:
  double required_x_max_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace magdiff

#endif  // MAGDIFF_ERROR_HPP
