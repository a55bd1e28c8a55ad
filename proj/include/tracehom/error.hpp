#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracehom {

/// Raised for malformed or inconsistent input (alphabets, action tables,
/// problem files). Carries every problem found, not only the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : std::runtime_error(join(problems)), problems_(std::move(problems)) {}
  explicit ValidationError(const std::string& problem)
      : ValidationError(std::vector<std::string>{problem}) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

/// Matrix shapes that cannot be composed.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two consecutive boundary maps whose composite is nonzero.
class NotAComplex : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tracehom
