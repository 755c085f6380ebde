#pragma once

#include <stdexcept>
#include <string>

namespace polylab {

enum class Errc {
  DomainError,
  NoRoot,
  DegenerateInput,
  DegenerateFrame,
  NotAUnit,
  NotCollinear,
  InvalidProgression,
  NotFound,
  Degenerate,
  BasePoint,
  Indeterminate,
  SingularPoint,
  OperatorFailure,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DomainError: return "DomainError";
    case Errc::NoRoot: return "NoRoot";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::DegenerateFrame: return "DegenerateFrame";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::InvalidProgression: return "InvalidProgression";
    case Errc::NotFound: return "NotFound";
    case Errc::Degenerate: return "Degenerate";
    case Errc::BasePoint: return "BasePoint";
    case Errc::Indeterminate: return "Indeterminate";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::OperatorFailure: return "OperatorFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace polylab
