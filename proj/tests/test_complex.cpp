#include <doctest/doctest.h>

#include "frobkit/complex.hpp"
#include "frobkit/kernel.hpp"
#include "frobkit/linalg.hpp"
#include "generators.hpp"

using namespace frobkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<long> seq(const GradedDims& d, int through) {
  std::vector<long> out;
  for (int n = 0; n <= through; ++n) out.push_back(d.at(n));
  return out;
}

// M --f--> N in degrees 1, 0 with f a random module map.
ChainComplex random_two_term(const Algebra& a, gen::Rng& rng) {
  Module m = gen::random_quotient_module(a, rng, 4), n = gen::random_quotient_module(a, rng, 4);
  auto homs = hom_space(m, n);
  Matrix f(a.field(), n.dim(), m.dim());
  for (const auto& h : homs) f.add_scaled(a.field().from_integer(gen::uniform(rng, -2, 2)), h.matrix());
  return ChainComplex(a, 0, {n, m}, {Matrix(), f});
}

}  // namespace

TEST_SUITE("complexes") {
  TEST_CASE("construction checks d∘d and module maps") {
    Algebra d = gen::dual_numbers();
    Module r = regular_module(d);
    Matrix e = d.left_mult(d.generator(0));
    CHECK_NOTHROW(ChainComplex(d, 0, {r, r, r}, {Matrix(), e, e}));
    CHECK_THROWS_AS(ChainComplex(d, 0, {r, r, r}, {Matrix(), Matrix::identity(Q, 2), Matrix::identity(Q, 2)}), Error);
    // A k-linear map that does not commute with e.
    Matrix bad = Matrix::from_rows(Q, {{0, 1}, {0, 0}});
    CHECK_THROWS_AS(ChainComplex(d, 0, {r, r}, {Matrix(), bad}), InvalidModule);
    CHECK_THROWS_AS(ChainComplex(d, 0, {r, r}, {Matrix()}), DimensionMismatch);
  }

  TEST_CASE("homology of multiplication by e") {
    Algebra d = gen::dual_numbers();
    Module r = regular_module(d);
    Matrix e = d.left_mult(d.generator(0));
    ChainComplex c(d, 0, {r, r}, {Matrix(), e});
    CHECK(homology_dims(c).nonzero() == std::map<int, long>{{0, 1}, {1, 1}});
    auto hs = homology(c);
    REQUIRE(hs.size() == 2);
    Module k(d, 1, {Matrix(Q, 1, 1)});
    CHECK(module_iso(hs[0].second, k).verdict == IsoVerdict::Yes);
    CHECK(module_iso(hs[1].second, k).verdict == IsoVerdict::Yes);
  }

  TEST_CASE("free replacement of the diagonal") {
    Algebra d = gen::dual_numbers();
    Module diag = diagonal_module(d);
    Replacement rep = free_replacement(ChainComplex::concentrated(diag), 4);
    CHECK(rep.complex.valid_through == 4);
    CHECK_NOTHROW(rep.complex.check());
    ChainComplex cc = rep.complex.to_chain_complex();
    CHECK(homology_dims(cc).nonzero() == std::map<int, long>{{0, 2}});
    auto hs = homology(cc);
    CHECK(module_iso(hs[0].second, diag).verdict == IsoVerdict::Yes);
    for (std::size_t i = 0; i < rep.complex.ranks.size(); ++i) CHECK(rep.complex.ranks[i] == 1);
  }

  TEST_CASE("from_resolution gives Tor after base change") {
    Module diag = diagonal_module(gen::dual_numbers());
    FreeComplex p = from_resolution(free_resolution(diag, 5));
    CHECK(p.valid_through == 4);
    std::vector<int> dims;
    for (int r : p.ranks) dims.push_back(r * diag.dim());
    GradedDims h = homology_dims(p.low, dims, p.base_change(diag), p.valid_through);
    CHECK(seq(h, 4) == std::vector<long>{2, 1, 1, 1, 1});
  }

  TEST_CASE("tensor over S of the diagonal resolution with itself") {
    Algebra a = gen::dual_numbers();
    Module diag = diagonal_module(a);
    FreeComplex p = from_resolution(free_resolution(diag, 5));
    FreeComplex t = tensor_same(p, p);
    CHECK_NOTHROW(t.check());
    std::vector<int> dims;
    for (int r : t.ranks) dims.push_back(r * diag.dim());
    GradedDims h = homology_dims(t.low, dims, t.base_change(diag), t.valid_through);
    CHECK(seq(h, 4) == std::vector<long>{2, 2, 3, 4, 5});
  }

  TEST_CASE("derived tensor over the middle of two identity kernels is the identity") {
    Algebra a = gen::dual_numbers();
    FreeComplex p = from_resolution(free_resolution(diagonal_module(a), 4));
    FreeComplex x = derived_tensor_middle(p, p, a, a, a);
    CHECK_NOTHROW(x.check());
    // rank r·s·dim B in bidegree (i, j): total degree n has n+1 summands.
    CHECK(x.ranks[0] == 2);
    CHECK(x.ranks[1] == 4);
    ChainComplex cc = x.to_chain_complex();
    CHECK(homology_dims(cc).nonzero() == std::map<int, long>{{0, 2}});
    CHECK(module_iso(homology(cc)[0].second, diagonal_module(a)).verdict == IsoVerdict::Yes);
  }

  TEST_CASE("tensor over the field multiplies dimensions (Künneth)") {
    Algebra d = gen::dual_numbers();
    Module r = regular_module(d);
    Matrix e = d.left_mult(d.generator(0));
    ChainComplex c(d, 0, {r, r}, {Matrix(), e});  // H = {0:1, 1:1}
    ChainComplex t = tensor_over_field(c, c);
    CHECK(t.algebra() == tensor_flat(d, d));
    CHECK(homology_dims(t).nonzero() == std::map<int, long>{{0, 1}, {1, 2}, {2, 1}});
  }

  TEST_CASE("property: free replacements are quasi-isomorphic through the cutoff") {
    gen::Rng rng(8);
    for (int t = 0; t < 12; ++t) {
      Algebra a = t % 2 ? gen::small_algebra(rng) : tensor_flat(gen::small_algebra(rng), gen::small_algebra(rng));
      ChainComplex c = random_two_term(a, rng);
      const int cutoff = 3;
      Replacement rep = free_replacement(c, cutoff);
      CHECK_NOTHROW(rep.complex.check());
      GradedDims hc = homology_dims(c), hp = homology_dims(rep.complex.to_chain_complex());
      for (int n = 0; n <= cutoff; ++n) CHECK(hc.at(n) == hp.at(n));
      // The comparison is a chain map.
      for (int n = 1; n <= std::min(rep.complex.high(), c.high()); ++n) {
        Matrix lhs = c.differential(n) * rep.comparison[n];
        Matrix rhs = rep.comparison[n - 1] * rep.complex.diffs[n].to_linear();
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("property: total complexes satisfy d∘d = 0") {
    gen::Rng rng(9);
    for (int t = 0; t < 12; ++t) {
      Algebra a = gen::small_algebra(rng), b = gen::small_algebra(rng);
      ChainComplex x = random_two_term(a, rng), y = random_two_term(b, rng);
      ChainComplex t2 = tensor_over_field(x, y);  // the constructor asserts d∘d = 0
      GradedDims hx = homology_dims(x), hy = homology_dims(y), h = homology_dims(t2);
      for (int n = 0; n <= 2; ++n) {
        long expect = 0;
        for (int i = 0; i <= n; ++i) expect += hx.at(i) * hy.at(n - i);
        CHECK(h.at(n) == expect);
      }
    }
  }
}
