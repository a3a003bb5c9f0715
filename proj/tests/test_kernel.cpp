#include <doctest/doctest.h>

#include "frobkit/kernel.hpp"
#include "frobkit/linalg.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<long> seq(const GradedDims& d, int through) {
  std::vector<long> out;
  for (int n = 0; n <= through; ++n) out.push_back(d.at(n));
  return out;
}

// Homology of two kernels agrees degreewise and every nonzero degree is witnessed or undecided.
void check_equivalent(const Kernel& lhs, const Kernel& rhs, int cutoff) {
  AxiomCheck c = compare_kernels("eq", lhs, rhs, cutoff);
  INFO(c.detail);
  CHECK(c.status != AxiomStatus::Fail);
  CHECK(seq(c.lhs, cutoff) == seq(c.rhs, cutoff));
}

}  // namespace

TEST_SUITE("kernel-cat") {
  TEST_CASE("generator kernels") {
    CHECK(identity_kernel(Algebra(Q)).body.terms()[0].dim() == 1);
    Algebra d = gen::dual_numbers();
    Kernel id = identity_kernel(d);
    CHECK(id.body.terms()[0].dim() == 2);
    CHECK(id.body.algebra().dim() == 4);
    Kernel mu = mult_kernel(d);
    const Module& m = mu.body.terms()[0];
    REQUIRE(m.algebra().num_generators() == 3);
    CHECK(m.generator_action(0) == d.left_mult(d.generator(0)));
    CHECK(m.generator_action(1) == m.generator_action(0));
    CHECK(m.generator_action(2) == m.generator_action(0));
    CHECK(mu.source == tensor_flat(d, d));
    CHECK(comult_kernel(d).target == tensor_flat(d, d));
    CHECK(unit_kernel(d).source.is_base_field());
    CHECK(counit_kernel(d).target.is_base_field());

    Algebra qq = split_product(Q, 2);
    Kernel muq = mult_kernel(qq);
    const Module& t = muq.body.terms()[0];
    Algebra s3 = t.algebra();
    // e1 ⊗ e2 ⊗ 1 acts by zero.
    Vec mixed = s3.multiply(s3.multiply(s3.generator(0), s3.generator(3)), s3.unit());
    CHECK(t.action(mixed).is_zero());
  }

  TEST_CASE("composition examples") {
    Algebra d = gen::dual_numbers();
    Kernel id = identity_kernel(d);
    check_equivalent(compose(mult_kernel(d), id, 3), mult_kernel(d), 3);
    Algebra k(Q);
    CHECK(seq(kernel_dims(compose(mult_kernel(k), comult_kernel(k), 3), 3), 3) == std::vector<long>{1, 0, 0, 0});
    // Left to right: A ⊗ k --(id | cup)--> A ⊗ A --pants--> A is the identity.
    check_equivalent(compose(external(id, unit_kernel(d)), mult_kernel(d), 3), id, 3);
    CHECK_THROWS_AS(compose(mult_kernel(d), mult_kernel(d), 3), AlgebraMismatch);
  }

  TEST_CASE("truncation is enforced") {
    Algebra d = gen::dual_numbers();
    Kernel torus = compose(compose(compose(unit_kernel(d), comult_kernel(d), 2), mult_kernel(d), 2), counit_kernel(d), 2);
    CHECK(torus.valid_through() == 2);
    CHECK(seq(kernel_dims(torus, 2), 2) == std::vector<long>{2, 1, 1});
    CHECK_THROWS_AS(kernel_dims(torus, 3), TruncationExhausted);
    CHECK_THROWS_AS(evaluate_closed_surface(d, -1, 2), Error);
  }

  TEST_CASE("external products") {
    Algebra k(Q);
    Kernel uu = external(unit_kernel(k), unit_kernel(k));
    CHECK(uu.body.terms()[0].dim() == 1);
    Algebra d = gen::dual_numbers();
    Kernel e = external(identity_kernel(d), identity_kernel(d));
    Kernel i = identity_kernel(tensor_flat(d, d));
    CHECK(e.body.algebra() == i.body.algebra());
    CHECK(compare_kernels("monoidal", e, i, 2).status == AxiomStatus::Pass);
    CHECK_THROWS_AS(external(identity_kernel(d), identity_kernel(gen::dual_numbers(FieldSpec::prime(3)))), FieldMismatch);
  }

  TEST_CASE("property: external multiplies dimensions per bidegree") {
    gen::Rng rng(55);
    for (int t = 0; t < 10; ++t) {
      Algebra a = gen::small_algebra(rng), b = gen::small_algebra(rng), c = gen::small_algebra(rng);
      Kernel k1 = gen::random_kernel(a, b, rng), k2 = gen::random_kernel(c, a, rng);
      Kernel e = external(k1, k2);
      CHECK(e.source == tensor_flat(a, c));
      CHECK(e.target == tensor_flat(b, a));
      GradedDims h1 = kernel_dims(k1, 3), h2 = kernel_dims(k2, 3), h = kernel_dims(e, 3);
      for (int n = 0; n <= 3; ++n) {
        long expect = 0;
        for (int i = 0; i <= n; ++i) expect += h1.at(i) * h2.at(n - i);
        CHECK(h.at(n) == expect);
      }
    }
  }

  TEST_CASE("swap") {
    Algebra k(Q);
    CHECK(swap_kernel(k, k).body.terms()[0].dim() == 1);
    Algebra d = gen::dual_numbers(), c = gen::monomial(3);
    Kernel sw = swap_kernel(d, c);
    CHECK(sw.source == tensor_flat(d, c));
    CHECK(sw.target == tensor_flat(c, d));
    check_equivalent(compose(sw, swap_kernel(c, d), 3), identity_kernel(tensor_flat(d, c)), 3);
    Kernel mu = mult_kernel(d);
    CHECK(seq(kernel_dims(compose(swap_kernel(d, d), mu, 3), 3), 3) == seq(kernel_dims(mu, 3), 3));
  }

  TEST_CASE("Frobenius axioms hold for the standard algebras at cutoff 3") {
    for (const auto& [name, a] : gen::standard_algebras()) {
      INFO(name);
      FrobeniusReport r = verify_frobenius(a, 3);
      REQUIRE(r.axioms.size() == 10);
      CHECK(r.all_pass());
      for (const auto& c : r.axioms) {
        INFO(c.name);
        CHECK(c.status == AxiomStatus::Pass);
        CHECK(c.lhs == c.rhs);
        CHECK_FALSE(c.witnessed_degrees.empty());
      }
    }
  }

  TEST_CASE("a corrupted multiplication fails in degree 0") {
    Algebra d = gen::dual_numbers();
    FrobeniusData fd = frobenius_data(d);
    fd.mult = corrupted_mult_kernel(d);
    FrobeniusReport r = verify_frobenius(fd, 3);
    CHECK(r.any_fail());
    bool unit_failed = false;
    for (const auto& c : r.axioms)
      if (c.name == "left unit") {
        unit_failed = c.status == AxiomStatus::Fail;
        CHECK(c.fail_degree == 0);
      }
    CHECK(unit_failed);
  }

  TEST_CASE("closed surfaces") {
    for (const auto& [name, a] : gen::standard_algebras()) {
      INFO(name);
      CHECK(evaluate_closed_surface(a, 0, 4).nonzero() == std::map<int, long>{{0, a.dim()}});
    }
    Algebra d = gen::dual_numbers();
    std::vector<long> oracle_hh = oracle::hochschild_dual_numbers(4);
    CHECK(seq(evaluate_closed_surface(d, 1, 4), 4) == oracle_hh);
    CHECK(oracle_hh == std::vector<long>{2, 1, 1, 1, 1});
    for (int n = 1; n <= 3; ++n)
      for (int g = 0; g <= 3; ++g)
        CHECK(evaluate_closed_surface(split_product(Q, n), g, 4).nonzero() == std::map<int, long>{{0, n}});
    // Genus 2 over Q[e]: Künneth square of the genus-1 answer over S.
    CHECK(seq(evaluate_closed_surface(d, 2, 4), 4) == std::vector<long>{2, 2, 3, 4, 5});
  }

  TEST_CASE("Ext examples") {
    Algebra d = gen::dual_numbers();
    gen::Rng rng(1);
    Module m = gen::random_quotient_module(d, rng, 4);
    CHECK(seq(ext_dims(regular_module(d), m, 3), 3) == std::vector<long>{m.dim(), 0, 0, 0});
    Algebra k(Q);
    CHECK(ext_dims(diagonal_module(k), regular_module(tensor_flat(k, k)), 3).nonzero() == std::map<int, long>{{0, 1}});
    CHECK(ext_dims(diagonal_module(d), regular_module(tensor_flat(d, d)), 3).at(0) == 2);
  }

  TEST_CASE("property: Ext^0 is Hom") {
    gen::Rng rng(66);
    for (int t = 0; t < 15; ++t) {
      Algebra a = t % 2 ? gen::small_algebra(rng) : tensor_flat(gen::small_algebra(rng), gen::small_algebra(rng));
      Module m = gen::random_quotient_module(a, rng, 4), n = gen::random_quotient_module(a, rng, 4);
      CHECK(ext_dims(m, n, 2).at(0) == static_cast<long>(hom_space(m, n).size()));
    }
  }

  TEST_CASE("obstruction verdicts") {
    ObstructionReport q = no_go_check(Algebra(Q));
    CHECK(q.verdict == Verdict::FieldPoint);
    CHECK(q.hom_diag_to_free_dims.at(0) == 1);
    ObstructionReport qq = no_go_check(split_product(Q, 2));
    CHECK(qq.verdict == Verdict::DirectSumOfPoints);
    CHECK(qq.blocks_found == 2);
    CHECK(qq.hom_diag_to_free_dims.at(0) == 2);
    ObstructionReport d = no_go_check(gen::dual_numbers());
    CHECK(d.verdict == Verdict::NonReducedOutOfScope);
    CHECK_FALSE(d.reduced);
    CHECK(d.hom_diag_to_free_dims.at(0) == 2);
    CHECK(no_go_check(univariate_quotient(Polynomial(Q, {-2, 0, 1}))).verdict == Verdict::FieldPoint);
    CHECK(verdict_name(Verdict::ObstructionVanishes) == "ObstructionVanishes");
    CHECK_THROWS_AS(no_go_check(gen::dual_numbers(FieldSpec::prime(2))), SmallCharacteristic);
  }

  TEST_CASE("property: identity kernels are units for composition on 20 random kernels") {
    gen::Rng rng(1701);
    int resolved = 0;
    for (int t = 0; t < 20; ++t) {
      Algebra a = gen::small_algebra(rng), b = gen::small_algebra(rng);
      Kernel k = gen::random_kernel(a, b, rng);
      const int cutoff = 3;
      for (const Kernel& c : {compose(identity_kernel(a), k, cutoff), compose(k, identity_kernel(b), cutoff)}) {
        AxiomCheck r = compare_kernels("identity", c, k, cutoff);
        INFO(r.detail);
        CHECK(r.status != AxiomStatus::Fail);
        CHECK(seq(r.lhs, cutoff) == seq(r.rhs, cutoff));
        if (r.status == AxiomStatus::Pass) ++resolved;
      }
    }
    CHECK(resolved == 40);
  }

  TEST_CASE("property: composition is associative on random triples") {
    gen::Rng rng(314);
    for (int t = 0; t < 8; ++t) {
      Algebra a = gen::small_algebra(rng), b = gen::small_algebra(rng), c = gen::small_algebra(rng),
              e = gen::small_algebra(rng);
      Kernel k1 = gen::random_kernel(a, b, rng, 3), k2 = gen::random_kernel(b, c, rng, 3),
             k3 = gen::random_kernel(c, e, rng, 3);
      const int cutoff = 2;
      Kernel l = compose(compose(k1, k2, cutoff), k3, cutoff);
      Kernel r = compose(k1, compose(k2, k3, cutoff), cutoff);
      check_equivalent(l, r, cutoff);
    }
  }

  TEST_CASE("property: external of identities is the identity of the product") {
    gen::Rng rng(42);
    for (int t = 0; t < 6; ++t) {
      Algebra a = gen::small_algebra(rng), b = gen::small_algebra(rng);
      AxiomCheck r = compare_kernels("monoidal", external(identity_kernel(a), identity_kernel(b)),
                                     identity_kernel(tensor_flat(a, b)), 2);
      CHECK(r.status == AxiomStatus::Pass);
    }
  }
}
