#pragma once

#include <stdexcept>
#include <string>

namespace lietor {

enum class Errc {
  DivisionByZero,
  ConductorMismatch,
  UnsupportedType,
  NonDominantWeight,
  NotADiagramSymmetry,
  NotRootOfUnity,
  NonCommuting,
  OrderMismatch,
  GroupOrderViolation,
  NotAHomomorphism,
  CartanNotPreserved,
  DegreeNotInGamma,
  WindowOverflow,
  NullRoot,
  NotInField,
  ZeroLambda,
  GradedIrreducibilityFailure,
  WeightNotInOrbit,
  IncompatibleGradings,
  ParseError,
  ConfigError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::NonDominantWeight: return "NonDominantWeight";
    case Errc::NotADiagramSymmetry: return "NotADiagramSymmetry";
    case Errc::NotRootOfUnity: return "NotRootOfUnity";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::GroupOrderViolation: return "GroupOrderViolation";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::CartanNotPreserved: return "CartanNotPreserved";
    case Errc::DegreeNotInGamma: return "DegreeNotInGamma";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::NullRoot: return "NullRoot";
    case Errc::NotInField: return "NotInField";
    case Errc::ZeroLambda: return "ZeroLambda";
    case Errc::GradedIrreducibilityFailure: return "GradedIrreducibilityFailure";
    case Errc::WeightNotInOrbit: return "WeightNotInOrbit";
    case Errc::IncompatibleGradings: return "IncompatibleGradings";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace lietor
