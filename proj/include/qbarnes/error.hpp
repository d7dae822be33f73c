#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbarnes {

enum class ErrorKind {
  InvalidParameter,
  ZeroConstantTerm,
  OrderBudgetExceeded,
  NonUnitInverse,
  LevelTooSmall,
  WorkBoundExceeded,
  EvenModulus,
  SmallDenominator,
  NoConvergence,
  RadiusExceeded,
  OutsideConvergenceRegion,
  QuadratureBudgetExceeded,
  PoleOfGamma,
  NonRationalPower,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::OrderBudgetExceeded: return "OrderBudgetExceeded";
    case ErrorKind::NonUnitInverse: return "NonUnitInverse";
    case ErrorKind::LevelTooSmall: return "LevelTooSmall";
    case ErrorKind::WorkBoundExceeded: return "WorkBoundExceeded";
    case ErrorKind::EvenModulus: return "EvenModulus";
    case ErrorKind::SmallDenominator: return "SmallDenominator";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::RadiusExceeded: return "RadiusExceeded";
    case ErrorKind::OutsideConvergenceRegion: return "OutsideConvergenceRegion";
    case ErrorKind::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorKind::PoleOfGamma: return "PoleOfGamma";
    case ErrorKind::NonRationalPower: return "NonRationalPower";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI reports it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace qbarnes
