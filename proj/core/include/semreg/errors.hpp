#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semreg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Div node's right child evaluated to exactly zero for some pattern.
class DivisionByZero : public Error {
 public:
  DivisionByZero(std::size_t node, std::size_t pattern);
  std::size_t node() const { return node_; }
  std::size_t pattern() const { return pattern_; }

 private:
  std::size_t node_;
  std::size_t pattern_;
};

/// Evaluation overflowed to Inf or produced NaN.
class NonFiniteResult : public Error {
 public:
  NonFiniteResult(std::size_t node, std::size_t pattern);
  std::size_t node() const { return node_; }
  std::size_t pattern() const { return pattern_; }

 private:
  std::size_t node_;
  std::size_t pattern_;
};

class InvalidNodeId : public Error {
 public:
  explicit InvalidNodeId(std::size_t node);
};

/// Malformed expression text. position() is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed delimited data file. row()/column() are 1-based.
class DataParseError : public Error {
 public:
  DataParseError(const std::string& what, std::size_t row, std::size_t column);
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class InvalidDataset : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public InvalidDataset {
 public:
  EmptyDataset() : InvalidDataset("dataset has no patterns") {}
};

class KTooLarge : public Error {
 public:
  KTooLarge(std::size_t k, std::size_t n);
};

class InvalidHyperparameters : public Error {
 public:
  using Error::Error;
};

}  // namespace semreg
