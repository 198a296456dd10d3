#ifndef CROWSIM_ERRORS_HPP
#define CROWSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crowsim {

// Coarse classification used by the C API / CLI to pick an exit status:
// config -> 1, engine -> 2, io -> 3.
enum class ErrorKind { config, engine, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Argument outside the supported numeric range of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

// System description does not fit the requested operation.
struct SpecError : Error {
  explicit SpecError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

// An observable that must be real (or non-negative) came out otherwise;
// signals an inconsistent basis or state, not a recoverable condition.
struct NonRealError : Error {
  explicit NonRealError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

struct PairError : Error {
  explicit PairError(const std::string& msg) : Error(ErrorKind::engine, msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(ErrorKind::config, msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorKind::config, msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorKind::io, msg) {}
};

}  // namespace crowsim

#endif
