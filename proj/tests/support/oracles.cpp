#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<mpq_class>(c, mpq_class(0))); }

std::size_t rank_q(Mat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat out = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

namespace {

bool is_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

std::vector<long> hochschild_dual_numbers(int cutoff) {
  // S basis: 1, y, x, xy (x is the left factor). Columns are images.
  const Mat lx = {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  const Mat ly = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}};
  Mat minus = zeros(4, 4), plus = zeros(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      minus[i][j] = lx[i][j] - ly[i][j];
      plus[i][j] = lx[i][j] + ly[i][j];
    }
  // Exactness of the periodic resolution: d∘d = 0 and rank d_n + rank d_{n+1} = 4.
  if (!is_zero(mul(minus, plus)) || !is_zero(mul(plus, minus))) throw std::logic_error("periodic resolution: d∘d != 0");
  if (rank_q(minus) + rank_q(plus) != 4) throw std::logic_error("periodic resolution is not exact");
  // The augmentation S -> A has kernel the image of x - y: rank 4 - 2 = 2 = dim A.
  if (4 - rank_q(minus) != 2) throw std::logic_error("augmentation mismatch");

  // Tensoring with A over S: x and y both act as e on A (basis 1, e).
  const Mat e = {{0, 0}, {1, 0}};
  const Mat d_odd = zeros(2, 2);  // e - e
  Mat d_even = zeros(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d_even[i][j] = e[i][j] + e[i][j];

  std::vector<long> out;
  for (int n = 0; n <= cutoff; ++n) {
    // d_n : C_n -> C_{n-1}; d_n is odd-type for odd n, even-type for even n >= 2.
    const long rank_in = n == 0 ? 0 : static_cast<long>(rank_q(n % 2 == 1 ? d_odd : d_even));
    const long rank_out = static_cast<long>(rank_q((n + 1) % 2 == 1 ? d_odd : d_even));
    out.push_back(2 - rank_in - rank_out);
  }
  return out;
}

std::vector<long> hochschild_univariate(const std::vector<mpq_class>& f, int cutoff) {
  const std::size_t d = f.size() - 1;
  if (d < 1 || f.back() != 1) throw std::invalid_argument("monic polynomial of degree >= 1 expected");
  // Companion matrix of x on 1, x, ..., x^{d-1}.
  Mat x = zeros(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) x[i + 1][i] = 1;
  for (std::size_t i = 0; i < d; ++i) x[i][d - 1] = -f[i];
  // f'(x) by Horner on matrices.
  Mat fp = zeros(d, d);
  for (std::size_t k = d; k >= 1; --k) {
    fp = mul(fp, x);
    for (std::size_t i = 0; i < d; ++i) fp[i][i] += f[k] * mpq_class(static_cast<long>(k));
  }
  const long r = static_cast<long>(rank_q(fp));
  std::vector<long> out;
  for (int n = 0; n <= cutoff; ++n) {
    const long rank_in = (n == 0 || n % 2 == 1) ? 0 : r;
    const long rank_out = (n + 1) % 2 == 1 ? 0 : r;
    out.push_back(static_cast<long>(d) - rank_in - rank_out);
  }
  return out;
}

namespace {

// c[i][j] as dense vectors, read from the algebra's multiplication of basis vectors.
std::vector<std::vector<std::vector<mpq_class>>> structure_constants(const frobkit::Algebra& a) {
  const int n = a.dim();
  std::vector<std::vector<std::vector<mpq_class>>> c(n, std::vector<std::vector<mpq_class>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = a.multiply(a.basis_vector(i), a.basis_vector(j));
  return c;
}

}  // namespace

long hom_dim_bruteforce(const std::vector<Mat>& ma, const std::vector<Mat>& na) {
  const std::size_t dm = ma.empty() ? 0 : ma[0].size();
  const std::size_t dn = na.empty() ? 0 : na[0].size();
  const std::size_t unknowns = dn * dm;  // F(r, c) at r * dm + c
  Mat eq;
  for (std::size_t s = 0; s < ma.size(); ++s)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        // (F M_s - N_s F)(r, c) = 0
        std::vector<mpq_class> row(unknowns, mpq_class(0));
        for (std::size_t k = 0; k < dm; ++k) row[r * dm + k] += ma[s][k][c];
        for (std::size_t k = 0; k < dn; ++k) row[k * dm + c] -= na[s][r][k];
        eq.push_back(std::move(row));
      }
  return static_cast<long>(unknowns) - static_cast<long>(rank_q(eq));
}

long hom_diag_to_free(const frobkit::Algebra& a) {
  const int n = a.dim();
  auto c = structure_constants(a);
  // Left multiplication by b_i on A.
  std::vector<Mat> la(n, zeros(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) la[i][k][j] = c[i][j][k];
  // S basis b_i ⊗ b_j at index i * n + j. On A it acts by b_i b_j; on S by the product.
  std::vector<Mat> on_a, on_s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m = zeros(n, n);
      for (int k = 0; k < n; ++k)
        if (c[i][j][k] != 0)
          for (int r = 0; r < n; ++r)
            for (int q = 0; q < n; ++q) m[r][q] += c[i][j][k] * la[k][r][q];
      on_a.push_back(m);
      Mat s = zeros(n * n, n * n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) s[p * n + q][k * n + l] += c[i][k][p] * c[j][l][q];
      on_s.push_back(s);
    }
  return hom_dim_bruteforce(on_a, on_s);
}

}  // namespace oracle
