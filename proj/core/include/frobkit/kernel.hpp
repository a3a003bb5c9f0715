#pragma once

#include <string>
#include <vector>

#include "frobkit/complex.hpp"

namespace frobkit {

/// A bimodule kernel A -> B: a complex over A⊗B.
///
/// Over a point the Fourier-Mukai transform of a kernel is its homology, so
/// closed-surface values are read off as homology dimensions.
struct Kernel {
  Algebra source;
  Algebra target;
  ChainComplex body;  ///< over tensor_flat(source, target)
  std::string label;

  int valid_through() const { return body.valid_through(); }
};

/// Checks that the body lives over source ⊗ target.
Kernel make_kernel(Algebra source, Algebra target, ChainComplex body, std::string label);

/// Homology dimensions in degrees <= through; throws TruncationExhausted when
/// the kernel is not trustworthy that far.
GradedDims kernel_dims(const Kernel& k, int through);

Kernel identity_kernel(const Algebra& a);
Kernel mult_kernel(const Algebra& a);
Kernel comult_kernel(const Algebra& a);
Kernel unit_kernel(const Algebra& a);
Kernel counit_kernel(const Algebra& a);
Kernel swap_kernel(const Algebra& a, const Algebra& b);

/// k1: A -> B then k2: B -> C. Homology is exact through `cutoff`.
Kernel compose(const Kernel& k1, const Kernel& k2, int cutoff);
/// k1: A -> B, k2: C -> D gives A⊗C -> B⊗D. The body over A⊗B⊗C⊗D is
/// regrouped to (A⊗C)⊗(B⊗D) by permuting generator blocks.
Kernel external(const Kernel& k1, const Kernel& k2);

struct FrobeniusData {
  Algebra algebra;
  Kernel mult, comult, unit, counit;
};

FrobeniusData frobenius_data(const Algebra& a);

enum class AxiomStatus { Pass, Fail, Inconclusive };

struct AxiomCheck {
  std::string name;
  AxiomStatus status = AxiomStatus::Inconclusive;
  GradedDims lhs, rhs;
  std::vector<int> witnessed_degrees;  ///< degrees with an explicit isomorphism
  int fail_degree = -1;
  std::string detail;
};

struct FrobeniusReport {
  int cutoff = 0;
  std::vector<AxiomCheck> axioms;
  bool all_pass() const;
  bool any_fail() const;
};

/// Compares two kernels with the same ends degreewise on homology.
AxiomCheck compare_kernels(const std::string& name, const Kernel& lhs, const Kernel& rhs, int cutoff);

FrobeniusReport verify_frobenius(const Algebra& a, int cutoff);
FrobeniusReport verify_frobenius(const FrobeniusData& d, int cutoff);

/// Multiplication kernel for the dual-numbers style negative control: the
/// target factor's generators act by zero.
Kernel corrupted_mult_kernel(const Algebra& a);

/// Homology dimensions of the derived self-tensor of the diagonal over A⊗A
/// with g+1 factors, restricted to k.
GradedDims evaluate_closed_surface(const Algebra& a, int genus, int cutoff);

/// Ext^n_R(m, n) for n = 0..cutoff.
GradedDims ext_dims(const Module& m, const Module& n, int cutoff);

/// The diagonal bimodule A as a module over A⊗A.
Module diagonal_module(const Algebra& a);

enum class Verdict { FieldPoint, DirectSumOfPoints, NonReducedOutOfScope, ObstructionVanishes, Undetermined };

std::string verdict_name(Verdict v);

struct ObstructionReport {
  Algebra algebra;
  bool reduced = false;
  int blocks_found = 0;
  FieldVerdict field = FieldVerdict::Unknown;
  GradedDims hom_diag_to_free_dims;  ///< Ext^n_S(Δ, S), degree 0 = Hom
  Verdict verdict = Verdict::Undetermined;
};

ObstructionReport no_go_check(const Algebra& a, int ext_cutoff = 4);

}  // namespace frobkit
