#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "frobkit/module.hpp"

namespace frobkit {

/// No truncation: homology is exact in every degree.
inline constexpr int kUnbounded = INT_MAX;

/// Bounded chain complex of modules, homological (degree-lowering) indexing.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// terms[i] sits in degree low + i; differentials[i] maps terms[i] to
  /// terms[i-1] (differentials[0] is ignored). Checks module maps and d∘d = 0.
  ChainComplex(Algebra a, int low, std::vector<Module> terms, std::vector<Matrix> differentials,
               int valid_through = kUnbounded);

  static ChainComplex concentrated(const Module& m, int degree = 0);

  const Algebra& algebra() const { return algebra_; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(terms_.size()) - 1; }
  int valid_through() const { return valid_through_; }
  bool empty() const { return terms_.empty(); }
  /// Zero module outside the range.
  Module term(int degree) const;
  /// d: term(degree) -> term(degree - 1).
  Matrix differential(int degree) const;
  const std::vector<Module>& terms() const { return terms_; }

 private:
  Algebra algebra_;
  int low_ = 0;
  std::vector<Module> terms_;
  std::vector<Matrix> diffs_;
  int valid_through_ = kUnbounded;
};

/// Complex of free modules R^{r_n} with R-matrix differentials.
struct FreeComplex {
  Algebra algebra;
  int low = 0;
  std::vector<int> ranks;           ///< rank in degree low + i
  std::vector<RMatrix> diffs;       ///< diffs[i]: degree low+i -> low+i-1 (diffs[0] unused)
  int valid_through = kUnbounded;

  int high() const { return low + static_cast<int>(ranks.size()) - 1; }
  int rank(int degree) const;
  /// Checks d∘d = 0; throws Error otherwise.
  void check() const;
  ChainComplex to_chain_complex() const;
  /// Boundary matrices of X ⊗_R n (k-linear), indexed like diffs.
  std::vector<Matrix> base_change(const Module& n) const;
};

FreeComplex from_resolution(const FreeResolution& r);

/// Homology modules with induced actions, degree by degree.
std::vector<std::pair<int, Module>> homology(const ChainComplex& c);
/// Homology dimensions through min(valid_through, high).
GradedDims homology_dims(const ChainComplex& c);
/// Homology dimensions of a complex of vector spaces given by term dims and boundaries.
GradedDims homology_dims(int low, const std::vector<int>& dims, const std::vector<Matrix>& boundaries, int valid_through);

struct Replacement {
  FreeComplex complex;
  std::vector<Matrix> comparison;  ///< k-linear f_n: P_n -> C_n, indexed like complex.ranks
};

/// Free complex P with a chain map P -> c that is a quasi-isomorphism in
/// degrees <= cutoff. Built by covering the cycles of the mapping cone.
Replacement free_replacement(const ChainComplex& c, int cutoff);
/// A free complex is already its own replacement.
inline FreeComplex free_replacement(const FreeComplex& x) { return x; }

/// X over A⊗B, Y over B⊗C, both free; total complex of X ⊗_B Y as a free
/// A⊗C-complex (rank r·s·dim B in bidegree (i, j)).
FreeComplex derived_tensor_middle(const FreeComplex& x, const FreeComplex& y, const Algebra& a, const Algebra& b,
                                  const Algebra& c);

/// X free over A⊗B, D any complex over B⊗C; total complex of X ⊗_B D over A⊗C.
ChainComplex tensor_free_middle(const FreeComplex& x, const ChainComplex& d, const Algebra& a, const Algebra& b,
                                const Algebra& c);

/// Both over the same algebra R: total complex of X ⊗_R Y, free over R.
FreeComplex tensor_same(const FreeComplex& x, const FreeComplex& y);

/// Bodies tensored over k: X over P, Y over Q gives a complex over P⊗Q.
ChainComplex tensor_over_field(const ChainComplex& x, const ChainComplex& y);

}  // namespace frobkit
