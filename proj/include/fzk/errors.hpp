#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fzk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text or problem file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A symbol without a binding was met during evaluation.
class UnboundSymbolError : public Error {
 public:
  explicit UnboundSymbolError(const std::string& name)
      : Error("unbound symbol '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Argument outside the mathematical domain of an operation
/// (gamma pole, exponent leaving the admissible lattice, division by zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Problem definition is inconsistent or incomplete.
class ProblemError : public Error {
 public:
  using Error::Error;
};

/// An intermediate expression exceeded the configured node budget.
class SizeGuardError : public Error {
 public:
  SizeGuardError(std::size_t nodes, std::size_t limit)
      : Error("expression size guard tripped: " + std::to_string(nodes) +
              " nodes > limit " + std::to_string(limit)),
        nodes_(nodes) {}

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t nodes_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fzk
