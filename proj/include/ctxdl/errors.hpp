#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctxdl {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTerm : public Error {
 public:
  using Error::Error;
};

class InvalidExpression : public Error {
 public:
  using Error::Error;
};

class InvalidInterpretation : public Error {
 public:
  using Error::Error;
};

// A term (or a ctxtop[...] symbol) has no denotation in the interpretation.
class UnmappedTerm : public Error {
 public:
  explicit UnmappedTerm(std::string symbol)
      : Error("unmapped symbol: " + symbol), symbol_(std::move(symbol)) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

// Model search exceeded its node budget before reaching a verdict.
class BoundTooLarge : public Error {
 public:
  BoundTooLarge(std::uint64_t budget, std::size_t size)
      : Error("search budget of " + std::to_string(budget) +
              " partial assignments exceeded at domain size " + std::to_string(size)),
        budget_(budget),
        size_(size) {}
  std::uint64_t budget() const noexcept { return budget_; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::uint64_t budget_;
  std::size_t size_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotAnABox : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class Disconnected : public ValidationError {
 public:
  Disconnected(std::string message, std::vector<std::string> terms)
      : ValidationError(std::move(message)), terms_(std::move(terms)) {}
  const std::vector<std::string>& terms() const noexcept { return terms_; }

 private:
  std::vector<std::string> terms_;
};

class AlreadyRelativized : public Error {
 public:
  using Error::Error;
};

class ContextualTermInSignature : public Error {
 public:
  using Error::Error;
};

class DuplicateContextId : public Error {
 public:
  using Error::Error;
};

class PremiseNotEntailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ctxdl
