#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemoid {

enum class ErrorKind {
  // category construction / operations
  MissingComposite,
  BadComposite,
  NotAssociative,
  BadIdentity,
  NotComposable,
  CapExceeded,
  // poset construction / operations
  CycleDetected,
  NotTransitive,
  NotAntisymmetric,
  NotComparable,
  AmbiguousJoin,
  NoMinimum,
  SizeCap,
  // labelings and constructions
  BadLabeling,
  ElementTypeMismatch,
  BasePointNotInPoset,
  PreconditionFailed,
  CompositionEscape,
  HasEndomorphisms,
  // algebra
  NotSchemoid,
  NotBijective,
  // input files
  BadInput,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::BadComposite: return "BadComposite";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::AmbiguousJoin: return "AmbiguousJoin";
    case ErrorKind::NoMinimum: return "NoMinimum";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::BadLabeling: return "BadLabeling";
    case ErrorKind::ElementTypeMismatch: return "ElementTypeMismatch";
    case ErrorKind::BasePointNotInPoset: return "BasePointNotInPoset";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::CompositionEscape: return "CompositionEscape";
    case ErrorKind::HasEndomorphisms: return "HasEndomorphisms";
    case ErrorKind::NotSchemoid: return "NotSchemoid";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Library-wide exception. `witness` carries the indices (morphisms,
/// elements, labels) that exhibit the violation, in an order documented
/// at each throw site.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::uint32_t> witness = {})
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace schemoid
