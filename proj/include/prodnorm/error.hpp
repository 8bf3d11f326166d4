#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodnorm {

/// Machine-readable failure categories. The CLI prints these verbatim.
enum class ErrorKind {
  domain,          ///< argument outside the function's domain
  parameter,       ///< invalid or unsupported parameter combination
  regime,          ///< asymptotic formula used outside its regime
  nonconvergence,  ///< series or quadrature failed to meet tolerance
  singular,        ///< evaluation at a singular point of the density
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain-error";
    case ErrorKind::parameter: return "parameter-error";
    case ErrorKind::regime: return "regime-error";
    case ErrorKind::nonconvergence: return "nonconvergence";
    case ErrorKind::singular: return "singular-point";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace prodnorm
