#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

/// Dense row-major matrix over a single exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, const std::vector<std::vector<long>>& rows);
  /// Throws FieldMismatch if entries disagree, DimensionMismatch if ragged.
  static Matrix from_scalars(const std::vector<std::vector<Scalar>>& rows);
  /// Column vector from raw values.
  static Matrix column_vector(FieldSpec f, const std::vector<mpq_class>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar at(std::size_t i, std::size_t j) const { return Scalar(field_, (*this)(i, j)); }
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void set(std::size_t i, std::size_t j, long v) { (*this)(i, j) = field_.from_integer(v); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const mpq_class& f) const;
  /// this += f * o
  void add_scaled(const mpq_class& f, const Matrix& o);
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix column_range(std::size_t begin, std::size_t end) const;
  Matrix row_range(std::size_t begin, std::size_t end) const;
  std::vector<mpq_class> column_values(std::size_t j) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const mpq_class& f);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  std::string str() const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);

 private:
  void check_same(const Matrix& o, const char* op) const;

  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> data_;
};

}  // namespace frobkit
