#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqlab {

enum class Errc {
  ZeroVector,
  NotPowerOfTwo,
  QubitOutOfRange,
  DuplicateQubit,
  TooLarge,
  OpaqueNotMaterializable,
  IndexOutOfRange,
  BandOutOfRange,
  ConstantOutOfRange,
  InvalidSize,
  SizeMismatch,
  LayoutMismatch,
  InvalidConfig,
  ParseError,
  IOError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::QubitOutOfRange: return "QubitOutOfRange";
    case Errc::DuplicateQubit: return "DuplicateQubit";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OpaqueNotMaterializable: return "OpaqueNotMaterializable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BandOutOfRange: return "BandOutOfRange";
    case Errc::ConstantOutOfRange: return "ConstantOutOfRange";
    case Errc::InvalidSize: return "InvalidSize";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::LayoutMismatch: return "LayoutMismatch";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::ParseError: return "ParseError";
    case Errc::IOError: return "IOError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace seqlab
