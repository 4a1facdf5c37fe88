#pragma once

#include <stdexcept>
#include <string>

namespace grh {

// Base class for all engine errors. `kind()` is stable text used by the CLI
// to pick exit codes and by tests to match error categories.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error("DivisionByZero", msg) {}
};

struct PoleAtOne : Error {
  explicit PoleAtOne(const std::string& msg) : Error("PoleAtOne", msg) {}
};

struct SyntaxError : Error {
  SyntaxError(size_t position, const std::string& msg)
      : Error("SyntaxError", "at position " + std::to_string(position) + ": " + msg),
        position(position) {}
  size_t position;
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& msg) : Error("UnknownGenerator", msg) {}
};

struct AlphabetMismatch : Error {
  explicit AlphabetMismatch(const std::string& msg) : Error("AlphabetMismatch", msg) {}
};

struct StepLimitExceeded : Error {
  explicit StepLimitExceeded(const std::string& msg) : Error("StepLimitExceeded", msg) {}
};

struct MissingImage : Error {
  explicit MissingImage(const std::string& msg) : Error("MissingImage", msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NonInvertibleDerivation : Error {
  explicit NonInvertibleDerivation(const std::string& msg)
      : Error("NonInvertibleDerivation", msg) {}
};

struct ExtractionFailure : Error {
  explicit ExtractionFailure(const std::string& msg) : Error("ExtractionFailure", msg) {}
};

struct InvalidRewriteSystem : Error {
  explicit InvalidRewriteSystem(const std::string& msg)
      : Error("InvalidRewriteSystem", msg) {}
};

}  // namespace grh
