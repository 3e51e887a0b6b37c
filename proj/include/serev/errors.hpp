#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace serev {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexical or syntax error in program/formula text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Inputs built over different alphabets (or widths) were combined.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition, e.g. closing a set that is
// not well-defined, or synthesizing an NLP from a set that is not
// here-intersection closed.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A user-supplied assignment, preorder or selection function breaks one of its
// defining conditions. `condition()` is the label of the failing condition,
// e.g. "(2)" or "(d)".
class AssignmentViolation : public Error {
 public:
  AssignmentViolation(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

}  // namespace serev
