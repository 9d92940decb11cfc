#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace molds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by field-only operations (rank, kernel, solve) when handed integer data.
class DomainNotField : public Error {
 public:
  DomainNotField() : Error("DomainNotField: operation requires Q or F_p, got Z") {}
};

// Any failed invariant of an algebra, bimodule or splitting presentation.
class ValidationError : public Error {
 public:
  enum class Reason {
    BadShape,
    NotIndependent,
    NotClosed,
    NoUnit,
    NotSaturated,
    NotRepresentable,
    NotInvertible,
    NotStable,
    NotSplit,
  };

  ValidationError(Reason reason, const std::string& detail)
      : Error(std::string(name(reason)) + ": " + detail), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

  static std::string_view name(Reason r) noexcept {
    switch (r) {
      case Reason::BadShape: return "BadShape";
      case Reason::NotIndependent: return "NotIndependent";
      case Reason::NotClosed: return "NotClosed";
      case Reason::NoUnit: return "NoUnit";
      case Reason::NotSaturated: return "NotSaturated";
      case Reason::NotRepresentable: return "NotRepresentable";
      case Reason::NotInvertible: return "NotInvertible";
      case Reason::NotStable: return "NotStable";
      case Reason::NotSplit: return "NotSplit";
    }
    return "Unknown";
  }

 private:
  Reason reason_;
};

// Unknown catalog names or malformed family parameters.
class CatalogError : public Error {
 public:
  using Error::Error;
};

class SizeBudgetExceeded : public Error {
 public:
  SizeBudgetExceeded(std::size_t requested, std::size_t budget)
      : Error("SizeBudgetExceeded: cochain module of rank " + std::to_string(requested) +
              " exceeds budget " + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

// DegreeOutOfRange (cohomology past the truncation) and DegreeOverflow (cup product).
class DegreeError : public Error {
 public:
  using Error::Error;
};

}  // namespace molds
