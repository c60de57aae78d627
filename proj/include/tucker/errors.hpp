#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tucker {

/// The input complex, flag or labeling is malformed.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::vector<std::string> details = {})
      : std::runtime_error(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

/// The instance is well formed but violates the hypotheses of the requested mode.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what, std::vector<std::string> details = {})
      : std::runtime_error(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

/// The walk or a carrier lookup hit a configuration that a valid flag rules out.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tucker
