#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Structure constants fail c[i][j] == c[j][i].
class NotCommutative : public Error {
 public:
  NotCommutative(int i, int j, const std::string& what)
      : Error(what), i_(i), j_(j) {}
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  int i_, j_;
};

/// (b_i b_j) b_k != b_i (b_j b_k).
class NotAssociative : public Error {
 public:
  NotAssociative(int i, int j, int k, const std::string& what)
      : Error(what), i_(i), j_(j), k_(k) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

class BadUnit : public Error {
 public:
  BadUnit(int i, const std::string& what) : Error(what), i_(i) {}
  int basis_index() const { return i_; }

 private:
  int i_;
};

class NonMonic : public Error {
 public:
  using Error::Error;
};

/// The trace-form radical criterion needs char 0 or char p > dim.
class SmallCharacteristic : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live over the same algebra do not.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidModule : public Error {
 public:
  using Error::Error;
};

/// A requested homological degree lies beyond the certified truncation bound.
class TruncationExhausted : public Error {
 public:
  TruncationExhausted(int requested, int bound, const std::string& what)
      : Error(what), requested_(requested), bound_(bound) {}
  int requested() const { return requested_; }
  int bound() const { return bound_; }

 private:
  int requested_, bound_;
};

/// Malformed bordism program text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, int line, int column, std::vector<std::string> expected, const std::string& what)
      : Error(what), position_(position), line_(line), column_(column), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  int line_, column_;
  std::vector<std::string> expected_;
};

/// Boundary circle counts do not match at a composition.
class ArityError : public Error {
 public:
  ArityError(std::string node, int expected, int found, const std::string& what)
      : Error(what), node_(std::move(node)), expected_(expected), found_(found) {}
  const std::string& node() const { return node_; }
  int expected() const { return expected_; }
  int found() const { return found_; }

 private:
  std::string node_;
  int expected_, found_;
};

}  // namespace frobkit
