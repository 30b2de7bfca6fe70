#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpn {

enum class Errc {
  InvalidParams,
  InvalidP,
  NotAPermutation,
  ColorOutOfRange,
  LengthMismatch,
  ParamsMismatch,
  IndexOutOfRange,
  CapExceeded,
  InvalidPartition,
  InvalidTableau,
  OverlappingLabels,
  DuplicateLabel,
  ShapeMismatch,
  NotAdmissible,
  NotAscending,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace grpn
