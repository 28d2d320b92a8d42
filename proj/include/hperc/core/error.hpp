#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hperc {

enum class ErrorCode {
  NonMonotoneFiltration,
  DanglingBoundary,
  BoundaryDimension,
  MalformedId,
  EssentialCountMismatch,
  SizeTooSmall,
  UnsupportedDimension,
  CliqueCountMismatch,
  RadiusTooLarge,
  SpectrumNotPSD,
  NoBracketsFound,
  ZeroCountMismatch,
  DegreeMismatch,
  NoValidTrials,
  InvalidArgument,
  Config,
  Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` says which contract broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hperc
