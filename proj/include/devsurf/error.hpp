#ifndef DEVSURF_ERROR_HPP
#define DEVSURF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace devsurf {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (expression, spec document, CSV).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit ParseError(const std::string& msg) : Error(msg), offset_(0) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Evaluation outside the function domain (sqrt of negative, unbound variable, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Geometric degeneracy: vanishing differential, sin(zeta) or sin(theta)
// inside the singular tolerance, degenerate first fundamental form.
class SingularError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Tolerance below which |sin zeta| and |sin theta| are treated as singular.
inline constexpr double kSingularTol = 1e-9;

}  // namespace devsurf

#endif
