#include "frobkit/matrix.hpp"

#include <sstream>

namespace frobkit {

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_integer(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_scalars(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) return Matrix();
  FieldSpec f = rows.front().front().field();
  Matrix m(f, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!(rows[i][j].field() == f))
        throw FieldMismatch("matrix entries over " + f.name() + " and " + rows[i][j].field().name());
      m(i, j) = rows[i][j].raw();
    }
  }
  return m;
}

Matrix Matrix::column_vector(FieldSpec f, const std::vector<mpq_class>& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (!(s.field() == field_)) throw FieldMismatch("entry over " + s.field().name() + " in matrix over " + field_.name());
  (*this)(i, j) = s.raw();
}

void Matrix::check_same(const Matrix& o, const char* op) const {
  if (!(field_ == o.field_)) throw FieldMismatch(std::string(op) + ": matrices over " + field_.name() + " and " + o.field_.name());
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(o, "multiply");
  if (cols_ != o.rows_) throw DimensionMismatch("multiply: inner dimensions differ");
  Matrix r(field_, rows_, o.cols_);
  mpq_class t;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      const mpq_class* brow = &o.data_[k * o.cols_];
      mpq_class* rrow = &r.data_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (sgn(brow[j]) == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), brow[j].get_mpq_t());
        mpq_add(rrow[j].get_mpq_t(), rrow[j].get_mpq_t(), t.get_mpq_t());
      }
    }
  }
  if (!field_.is_rational())
    for (auto& v : r.data_) field_.reduce(v);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: shapes differ");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) field_.add_to(r.data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o, "subtract");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("subtract: shapes differ");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(r.data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::scaled(const mpq_class& f) const {
  Matrix r(*this);
  for (auto& v : r.data_)
    if (sgn(v) != 0) v = field_.mul(v, f);
  return r;
}

void Matrix::add_scaled(const mpq_class& f, const Matrix& o) {
  check_same(o, "add_scaled");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add_scaled: shapes differ");
  if (sgn(f) == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) field_.add_mul(data_[i], f, o.data_[i]);
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::column(std::size_t j) const {
  Matrix r(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
  return r;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

Matrix Matrix::column_range(std::size_t begin, std::size_t end) const {
  Matrix r(field_, rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) r(i, j - begin) = (*this)(i, j);
  return r;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  Matrix r(field_, end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i - begin, j) = (*this)(i, j);
  return r;
}

std::vector<mpq_class> Matrix::column_values(std::size_t j) const {
  std::vector<mpq_class> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const mpq_class& f) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("add_block out of range");
  if (sgn(f) == 0) return;
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (sgn(b(i, j)) != 0) field_.add_mul((*this)(r0 + i, c0 + j), f, b(i, j));
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  a.check_same(b, "hstack");
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: row counts differ");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  a.check_same(b, "vstack");
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column counts differ");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  a.check_same(b, "kron");
  Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const mpq_class& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) {
          if (sgn(b(k, l)) == 0) continue;
          r(i * b.rows_ + k, j * b.cols_ + l) = a.field_.mul(x, b(k, l));
        }
    }
  return r;
}

}  // namespace frobkit
