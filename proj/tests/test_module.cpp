#include <doctest/doctest.h>

#include "frobkit/kernel.hpp"
#include "frobkit/linalg.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

oracle::Mat to_mat(const Matrix& m) {
  oracle::Mat out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

std::vector<oracle::Mat> actions(const Module& m) {
  std::vector<oracle::Mat> out;
  for (const Matrix& a : m.basis_actions()) out.push_back(to_mat(a));
  return out;
}

std::vector<long> seq(const GradedDims& d, int through) {
  std::vector<long> out;
  for (int n = 0; n <= through; ++n) out.push_back(d.at(n));
  return out;
}

// d∘d = 0, ε∘d_1 = 0, and exactness by ranks in every degree below the cutoff.
void check_resolution(const FreeResolution& r) {
  const int dimr = r.algebra.dim();
  std::vector<Matrix> lin(r.ranks.size());
  for (std::size_t i = 1; i < r.ranks.size(); ++i) lin[i] = r.differentials[i].to_linear();
  auto rk = [&](std::size_t i) -> std::size_t { return i < lin.size() && !lin[i].empty() ? rank(lin[i]) : 0; };
  REQUIRE(rank(r.augmentation) == static_cast<std::size_t>(r.module.dim()));
  if (r.ranks.size() > 1 && !lin[1].empty()) CHECK((r.augmentation * lin[1]).is_zero());
  CHECK(static_cast<std::size_t>(r.ranks[0] * dimr) == static_cast<std::size_t>(r.module.dim()) + rk(1));
  for (std::size_t i = 1; i + 1 < r.ranks.size(); ++i) {
    if (!lin[i].empty() && !lin[i + 1].empty()) CHECK((lin[i] * lin[i + 1]).is_zero());
    CHECK(static_cast<std::size_t>(r.ranks[i] * dimr) == rk(i) + rk(i + 1));
  }
}

}  // namespace

TEST_SUITE("module-theory") {
  TEST_CASE("module validation") {
    Algebra d = gen::dual_numbers();
    CHECK_NOTHROW(Module(d, 2, {Matrix::from_rows(Q, {{0, 0}, {1, 0}})}));
    CHECK_NOTHROW(Module(d, 1, {Matrix(Q, 1, 1)}));
    // e must square to zero.
    CHECK_THROWS_AS(Module(d, 1, {Matrix::identity(Q, 1)}), InvalidModule);
    Algebra s = tensor_flat(d, d);
    // Generators of a commutative algebra must act by commuting matrices.
    Matrix a = Matrix::from_rows(Q, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
    Matrix b = Matrix::from_rows(Q, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(Module(s, 3, {a, b}), InvalidModule);
  }

  TEST_CASE("Hom from a free module is the target") {
    gen::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      Algebra a = gen::small_algebra(rng);
      Module m = gen::random_quotient_module(a, rng, 5);
      CHECK(hom_dim(free_module(a, 1), m) == m.dim());
      CHECK(hom_dim(free_module(a, 2), m) == 2 * m.dim());
    }
  }

  TEST_CASE("Hom_S(diagonal, S) against the brute-force oracle") {
    const std::vector<std::pair<Algebra, long>> cases = {
        {Algebra(Q), 1}, {split_product(Q, 2), 2}, {gen::dual_numbers(), 2}};
    for (const auto& [a, expected] : cases) {
      const long brute = oracle::hom_diag_to_free(a);
      CHECK(brute == expected);
      Module diag = diagonal_module(a);
      Module s = regular_module(tensor_flat(a, a));
      CHECK(static_cast<long>(hom_space(diag, s).size()) == brute);
      CHECK(hom_dim(diag, s) == brute);
    }
    for (int n = 1; n <= 4; ++n) {
      Algebra a = split_product(Q, n);
      CHECK(hom_dim(diagonal_module(a), regular_module(tensor_flat(a, a))) == n);
      CHECK(oracle::hom_diag_to_free(a) == n);
    }
  }

  TEST_CASE("property: hom dimensions agree with a direct linear solve") {
    gen::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      Algebra a = gen::uniform(rng, 0, 1) ? gen::small_algebra(rng) : tensor_flat(gen::small_algebra(rng), gen::small_algebra(rng));
      Module m = gen::random_quotient_module(a, rng, 6), n = gen::random_quotient_module(a, rng, 6);
      CHECK(hom_dim(m, n) == oracle::hom_dim_bruteforce(actions(m), actions(n)));
      for (const ModuleMap& f : hom_space(m, n)) CHECK(f.matrix().rows() == static_cast<std::size_t>(n.dim()));
    }
  }

  TEST_CASE("minimal resolutions of the diagonal") {
    // Q[e]: the periodic resolution, rank 1 in every degree.
    FreeResolution r = free_resolution(diagonal_module(gen::dual_numbers()), 4);
    CHECK(r.ranks == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(r.minimal);
    check_resolution(r);
    // Q: the diagonal is free.
    CHECK(free_resolution(diagonal_module(Algebra(Q)), 4).ranks == std::vector<int>{1, 0, 0, 0, 0});
    // Q×Q: the diagonal is projective, not free; its minimal free resolution
    // keeps rank 1 while Tor vanishes.
    Algebra qq = split_product(Q, 2);
    FreeResolution rq = free_resolution(diagonal_module(qq), 4);
    CHECK(rq.ranks == std::vector<int>{1, 1, 1, 1, 1});
    check_resolution(rq);
    CHECK(tor(diagonal_module(qq), diagonal_module(qq), 4).dims.nonzero() == std::map<int, long>{{0, 2}});
  }

  TEST_CASE("residue field over Q[x,y]/(x^2,y^2) has Betti numbers n+1") {
    Algebra s = tensor_flat(gen::dual_numbers(), gen::dual_numbers());
    Module k(s, 1, {Matrix(Q, 1, 1), Matrix(Q, 1, 1)});
    FreeResolution r = free_resolution(k, 4);
    CHECK(r.ranks == std::vector<int>{1, 2, 3, 4, 5});
    check_resolution(r);
  }

  TEST_CASE("Hochschild homology of Q[e] matches the periodic oracle") {
    const std::vector<long> frozen = {2, 1, 1, 1, 1};
    CHECK(oracle::hochschild_dual_numbers(4) == frozen);
    Module d = diagonal_module(gen::dual_numbers());
    CHECK(seq(tor(d, d, 4).dims, 4) == frozen);
  }

  TEST_CASE("Hochschild homology of Q[x]/(f) matches the derivative oracle") {
    const std::vector<std::vector<mpq_class>> polys = {
        {0, 0, 0, 1}, {-1, 0, 1}, {-2, 0, 1}, {0, 0, 1}, {0, 1, -2, 1}, {0, 0, 0, 0, 1}};
    for (const auto& f : polys) {
      Algebra a = univariate_quotient(Polynomial(Q, f));
      Module d = diagonal_module(a);
      CHECK(seq(tor(d, d, 4).dims, 4) == oracle::hochschild_univariate(f, 4));
    }
    CHECK(oracle::hochschild_univariate({0, 0, 0, 1}, 4) == std::vector<long>{3, 2, 2, 2, 2});
    CHECK(oracle::hochschild_univariate({-1, 0, 1}, 4) == std::vector<long>{2, 0, 0, 0, 0});
  }

  TEST_CASE("property: Tor is symmetric on random module pairs") {
    gen::Rng rng(2024);
    for (int t = 0; t < 20; ++t) {
      Algebra a = t % 2 ? gen::small_algebra(rng) : tensor_flat(gen::dual_numbers(), gen::small_algebra(rng));
      Module m = gen::random_quotient_module(a, rng, 4), n = gen::random_quotient_module(a, rng, 4);
      auto mn = tor(m, n, 3).dims, nm = tor(n, m, 3).dims;
      CHECK(seq(mn, 3) == seq(nm, 3));
      // Tor_0 is the plain tensor product.
      CHECK(mn.at(0) == tensor_over_middle(m, n, Algebra(Q), a, Algebra(Q)).dim());
    }
  }

  TEST_CASE("property: resolutions of random modules are exact") {
    gen::Rng rng(77);
    for (int t = 0; t < 20; ++t) {
      Algebra a = t % 3 ? gen::small_algebra(rng) : tensor_flat(gen::small_algebra(rng), gen::small_algebra(rng));
      Module m = gen::random_quotient_module(a, rng, 5);
      FreeResolution r = free_resolution(m, 3);
      check_resolution(r);
    }
  }

  TEST_CASE("restriction and extension of scalars") {
    Algebra d = gen::dual_numbers();
    TensorResult t = tensor_algebras(d, d);
    Module ext = extend(t.inclusion_left, regular_module(d));
    CHECK(ext.dim() == 4);
    CHECK(module_iso(ext, regular_module(t.algebra)).verdict == IsoVerdict::Yes);
    Module res = restrict(t.inclusion_left, regular_module(t.algebra));
    CHECK(res.dim() == 4);
    CHECK(module_iso(res, free_module(d, 2)).verdict == IsoVerdict::Yes);
  }

  TEST_CASE("module isomorphism") {
    Algebra d = gen::dual_numbers();
    Module k(d, 1, {Matrix(Q, 1, 1)});
    Module k2(d, 2, {Matrix(Q, 2, 2)});
    CHECK(module_iso(regular_module(d), k2).verdict == IsoVerdict::No);
    CHECK(module_iso(k, regular_module(d)).verdict == IsoVerdict::No);
    IsoResult yes = module_iso(regular_module(d), regular_module(d));
    REQUIRE(yes.verdict == IsoVerdict::Yes);
    REQUIRE(yes.witness);
    CHECK(inverse(*yes.witness).has_value());
  }

  TEST_CASE("property: a random change of basis is recognized as an isomorphism") {
    gen::Rng rng(404);
    for (int t = 0; t < 20; ++t) {
      Algebra a = tensor_flat(gen::small_algebra(rng), gen::small_algebra(rng));
      Module m = gen::random_quotient_module(a, rng, 5);
      Matrix p;
      do {
        p = gen::random_matrix(Q, m.dim(), m.dim(), rng, 3, 20);
      } while (!inverse(p));
      Matrix pi = *inverse(p);
      std::vector<Matrix> g;
      for (const Matrix& x : m.generator_actions()) g.push_back(p * x * pi);
      Module n(a, m.dim(), g);
      IsoResult r = module_iso(m, n);
      CHECK(r.verdict == IsoVerdict::Yes);
      if (r.witness) CHECK_NOTHROW(ModuleMap(m, n, *r.witness));
    }
  }
}
