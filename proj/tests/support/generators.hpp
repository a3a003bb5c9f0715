#pragma once

// Hand-rolled random generators for the property tests. Seeds are fixed per test.

#include <random>
#include <string>
#include <vector>

#include "frobkit/kernel.hpp"
#include "frobkit/linalg.hpp"

namespace gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline frobkit::Matrix random_matrix(const frobkit::FieldSpec& f, std::size_t r, std::size_t c, Rng& rng,
                                     int range = 3, int zero_percent = 40) {
  frobkit::Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (uniform(rng, 0, 99) >= zero_percent) m(i, j) = f.from_integer(uniform(rng, -range, range));
  return m;
}

/// Random matrix of prescribed rank (at most min(r, c)), as a product of two random factors.
inline frobkit::Matrix random_rank_matrix(const frobkit::FieldSpec& f, std::size_t r, std::size_t c, std::size_t k,
                                          Rng& rng) {
  return random_matrix(f, r, k, rng, 4, 10) * random_matrix(f, k, c, rng, 4, 10);
}

inline frobkit::Algebra dual_numbers(const frobkit::FieldSpec& f = frobkit::FieldSpec::rationals()) {
  return frobkit::univariate_quotient(frobkit::Polynomial(f, {0, 0, 1}));
}

inline frobkit::Algebra monomial(int d, const frobkit::FieldSpec& f = frobkit::FieldSpec::rationals()) {
  std::vector<mpq_class> c(d + 1, mpq_class(0));
  c[d] = 1;
  return frobkit::univariate_quotient(frobkit::Polynomial(f, c));
}

/// ℚ, ℚ[x]/(x²−2), ℚ[ε], ℚ[x]/(x³), ℚ×ℚ.
inline std::vector<std::pair<std::string, frobkit::Algebra>> standard_algebras() {
  const auto q = frobkit::FieldSpec::rationals();
  return {{"Q", frobkit::Algebra(q)},
          {"Q[x]/(x^2-2)", frobkit::univariate_quotient(frobkit::Polynomial(q, {-2, 0, 1}))},
          {"Q[e]", dual_numbers()},
          {"Q[x]/(x^3)", monomial(3)},
          {"QxQ", frobkit::split_product(q, 2)}};
}

/// Algebras of dimension <= 3 used for random kernels.
inline frobkit::Algebra small_algebra(Rng& rng) {
  const auto q = frobkit::FieldSpec::rationals();
  switch (uniform(rng, 0, 4)) {
    case 0: return frobkit::Algebra(q);
    case 1: return dual_numbers();
    case 2: return frobkit::split_product(q, 2);
    case 3: return monomial(3);
    default: return frobkit::univariate_quotient(frobkit::Polynomial(q, {-1, 0, 1}));
  }
}

inline frobkit::Vec random_element(const frobkit::Algebra& a, Rng& rng, int range = 2) {
  frobkit::Vec v(a.dim());
  for (auto& x : v) x = a.field().from_integer(uniform(rng, -range, range));
  return v;
}

/// R^k / (R·w_1 + ... + R·w_m) for random w_i; retried until 1 <= dim <= max_dim.
inline frobkit::Module random_quotient_module(const frobkit::Algebra& r, Rng& rng, int max_dim, int max_rank = 2) {
  using namespace frobkit;
  const FieldSpec& fs = r.field();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int k = uniform(rng, 1, max_rank);
    Module free = free_module(r, k);
    const int n = free.dim();
    const int m = uniform(rng, 0, 2 * k);
    Matrix rel(fs, n, 0);
    for (int w = 0; w < m; ++w) {
      Matrix col(fs, n, 1);
      for (int i = 0; i < n; ++i)
        if (uniform(rng, 0, 2) == 0) col(i, 0) = fs.from_integer(uniform(rng, -2, 2));
      for (int b = 0; b < r.dim(); ++b) rel = Matrix::hstack(rel, free.action_basis(b) * col);
    }
    if (rel.cols() == 0) rel = Matrix(fs, n, 0);
    Quotient qt = quotient_module(r, n, free.generator_actions(), rel);
    if (qt.module.dim() >= 1 && qt.module.dim() <= max_dim) return qt.module;
  }
  return regular_module(r);
}

/// Kernel A -> B whose body is a random module of dim <= max_dim in degree 0 or 1.
inline frobkit::Kernel random_kernel(const frobkit::Algebra& a, const frobkit::Algebra& b, Rng& rng,
                                     int max_dim = 4) {
  using namespace frobkit;
  Algebra ab = tensor_flat(a, b);
  Module m = random_quotient_module(ab, rng, max_dim);
  const int degree = uniform(rng, 0, 3) == 0 ? 1 : 0;
  return make_kernel(a, b, ChainComplex::concentrated(m, degree), "K");
}

}  // namespace gen
