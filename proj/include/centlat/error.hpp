#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace centlat {

enum class ErrorKind {
  kNotClosed,
  kNotAssociative,
  kNoIdentity,
  kNoInverse,
  kInvalidInput,
  kOrderCapExceeded,
  kNodeCapExceeded,
  kUnsupportedParameter,
  kInvalidAction,
  kNotHomomorphism,
  kNotNormal,
  kDomainMismatch,
  kNotSurjective,
  kKernelNotCentral,
  kNotCrh,
  kImageNotANode,
  kParseError,
  kUnknownGenerator,
  kIo,
  kUsage,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace centlat
