#include "frobkit/linalg.hpp"

#include <cstdint>
#include <utility>

namespace frobkit {
namespace {

std::size_t cost(const mpq_class& v) {
  return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
}

RrefResult rref_rational(const Matrix& m, std::size_t limit) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  mpq_class t;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_cost = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      std::size_t k = cost(a(i, c));
      if (best == rows || k < best_cost) {
        best = i;
        best_cost = k;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(best, j));
    mpq_class inv = 1 / a(r, c);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(a(r, j)) == 0) continue;
      a(r, j) *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      mpq_class f = a(i, c);
      for (std::size_t j : nz) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), a(r, j).get_mpq_t());
        mpq_sub(a(i, j).get_mpq_t(), a(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t rr = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = rr / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = rr - q * nr;
    rr = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

RrefResult rref_modular(const Matrix& m, std::size_t limit) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num().get_ui();
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * cols + j]; };
  RrefResult res;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(r, j), at(piv, j));
    std::uint64_t inv = inv_mod(at(r, c), p);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (at(r, j) == 0) continue;
      at(r, j) = static_cast<std::uint64_t>((static_cast<unsigned __int128>(at(r, j)) * inv) % p);
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      std::uint64_t f = at(i, c);
      for (std::size_t j : nz) {
        std::uint64_t sub = static_cast<std::uint64_t>((static_cast<unsigned __int128>(f) * at(r, j)) % p);
        std::uint64_t& x = at(i, j);
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = Matrix(m.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) res.reduced(i, j) = mpq_class(static_cast<unsigned long>(a[i * cols + j]));
  return res;
}

}  // namespace

RrefResult rref_limited(const Matrix& m, std::size_t pivot_limit) {
  if (pivot_limit > m.cols()) pivot_limit = m.cols();
  if (m.field().is_rational()) return rref_rational(m, pivot_limit);
  return rref_modular(m, pivot_limit);
}

RrefResult rref(const Matrix& m) { return rref_limited(m, m.cols()); }

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  // Reduce along the shorter side.
  if (m.rows() < m.cols()) return rref(m.transpose()).rank;
  return rref(m).rank;
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(m.field(), n);
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix k(m.field(), n, n - r.rank);
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      const mpq_class& v = r.reduced(i, f);
      if (sgn(v) != 0) k(r.pivots[i], col) = m.field().neg(v);
    }
    ++col;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  if (!(b.field() == m.field())) throw FieldMismatch("solve: right-hand side over a different field");
  const std::size_t n = m.cols();
  Matrix x(m.field(), n, b.cols());
  if (m.rows() == 0) return x;
  RrefResult r = rref_limited(Matrix::hstack(m, b), n);
  for (std::size_t i = r.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(r.reduced(i, n + j)) != 0) return std::nullopt;
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  RrefResult r = rref_limited(Matrix::hstack(m, Matrix::identity(m.field(), n)), n);
  if (r.rank != n) return std::nullopt;
  return r.reduced.column_range(n, 2 * n);
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.empty()) return {};
  return rref(m).pivots;
}

Matrix column_basis(const Matrix& m) {
  if (m.empty()) return Matrix(m.field(), m.rows(), 0);
  return m.select_columns(independent_columns(m));
}

std::vector<std::size_t> complement_columns(const Matrix& base, const Matrix& extra) {
  if (extra.cols() == 0) return {};
  if (base.cols() == 0) return independent_columns(extra);
  RrefResult r = rref(Matrix::hstack(base, extra));
  std::vector<std::size_t> out;
  for (auto p : r.pivots)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

}  // namespace frobkit
