#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/algebra.hpp"
#include "frobkit/matrix.hpp"

namespace frobkit {

/// Degree -> dimension, trustworthy in degrees <= valid_through.
struct GradedDims {
  std::map<int, long> dims;
  int valid_through = 0;

  long at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  /// Nonzero entries only.
  std::map<int, long> nonzero() const;
  /// Same nonzero entries; valid_through is not compared.
  bool operator==(const GradedDims& o) const { return nonzero() == o.nonzero(); }
  std::string str() const;
};

/// A finite-dimensional module, stored as one action matrix per algebra
/// generator. Basis-element actions are products along the element's word.
class Module {
 public:
  Module() = default;
  /// Validates commuting generator actions, the algebra relations and the unit.
  Module(Algebra a, int dim, std::vector<Matrix> generator_actions);

  const Algebra& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const std::vector<Matrix>& generator_actions() const { return gens_; }
  const Matrix& generator_action(int g) const { return gens_[g]; }

  Matrix action_basis(int i) const;
  std::vector<Matrix> basis_actions() const;
  Matrix action(const Vec& a) const;

  /// Module over the sub-algebra made of factors [first, last).
  Module restrict_to_factors(int first, int last) const;

 private:
  struct Unchecked {};
  Module(Algebra a, int dim, std::vector<Matrix> gens, Unchecked);
  friend Module make_module_unchecked(Algebra a, int dim, std::vector<Matrix> gens);

  Algebra algebra_;
  int dim_ = 0;
  std::vector<Matrix> gens_;
};

/// For internal constructions whose invariants hold by construction.
Module make_module_unchecked(Algebra a, int dim, std::vector<Matrix> gens);

/// Sub-algebra of a flat tensor product spanned by factors [first, last).
Algebra factor_range(const Algebra& a, int first, int last);

class ModuleMap {
 public:
  /// Throws if the matrix does not intertwine the actions.
  ModuleMap(Module source, Module target, Matrix matrix);
  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  Module source_, target_;
  Matrix matrix_;
};

/// Quotient of a representation by an invariant subspace.
struct Quotient {
  Module module;
  Matrix projection;  ///< quotient.dim x ambient
  Matrix section;     ///< ambient x quotient.dim, projection * section = I
};

/// Quotient of k^n (with the given generator actions) by the span of the columns
/// of `relations`, which must be invariant.
Quotient quotient_module(const Algebra& a, int n, const std::vector<Matrix>& actions, const Matrix& relations);

/// Subquotient Z/B of the given representation; columns of z span an invariant
/// subspace containing the span of b.
Quotient subquotient_module(const Algebra& a, const std::vector<Matrix>& actions, const Matrix& z, const Matrix& b);

Module free_module(const Algebra& a, int rank);
Module zero_module(const Algebra& a);
/// The regular module with the given algebra as its own module.
inline Module regular_module(const Algebra& a) { return free_module(a, 1); }

/// Restriction of scalars along f: A -> B.
Module restrict(const AlgebraMap& f, const Module& m);
/// m ⊗_A B along f: A -> B.
Module extend(const AlgebraMap& f, const Module& m);

std::vector<ModuleMap> hom_space(const Module& m, const Module& n);
/// Dimension only, without building ModuleMap objects.
int hom_dim(const Module& m, const Module& n);

/// m over A⊗B, n over B⊗C; plain tensor over the middle factor B.
Module tensor_over_middle(const Module& m, const Module& n, const Algebra& a, const Algebra& b, const Algebra& c);

/// Matrix whose entries are elements of an algebra R. Column c is the image of
/// the c-th basis vector of R^cols.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(Algebra r, int rows, int cols);

  const Algebra& algebra() const { return algebra_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Vec& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Vec& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  bool entry_zero(int i, int j) const;

  /// k-linear matrix R^cols -> R^rows in the basis (copy, basis index).
  Matrix to_linear() const;
  /// Block matrix with block (i, j) = action of entry (i, j) on a module.
  Matrix act_on(const Module& m) const;
  /// Map R^cols -> R^rows from a k-linear matrix that is R-linear.
  static RMatrix from_columns(const Algebra& r, int rows, const Matrix& linear_cols);

 private:
  Algebra algebra_;
  int rows_ = 0, cols_ = 0;
  std::vector<Vec> data_;
};

struct FreeResolution {
  Algebra algebra;
  Module module;
  std::vector<int> ranks;                ///< r_0..r_N
  std::vector<RMatrix> differentials;    ///< d_i: F_i -> F_{i-1}, index i = 1..N (entry 0 unused)
  Matrix augmentation;                   ///< k-linear F_0 -> module
  int cutoff = 0;
  bool minimal = true;
};

/// Minimal free resolution through degree N; exactness asserted by ranks.
FreeResolution free_resolution(const Module& m, int cutoff);

/// Module generators of an invariant subspace of `ambient` spanned by the
/// columns of `span`: lifts of a basis of span / rad·span when the radical is
/// computable, else a greedy (non-minimal) choice. Columns of `already` (a
/// submodule inside the span) count as covered.
Matrix module_generators(const Module& ambient, const Matrix& span, bool* minimal = nullptr,
                         const Matrix* already = nullptr);

struct TorResult {
  GradedDims dims;
  std::vector<int> degrees;
};

/// Tor^R_n(m, n) for n = 0..cutoff.
TorResult tor(const Module& m, const Module& n, int cutoff);

enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  std::optional<Matrix> witness;  ///< invertible intertwiner when Yes
  std::string certificate;        ///< reason when No
};

IsoResult module_iso(const Module& m, const Module& n, int retries = 16, unsigned seed = 11);

}  // namespace frobkit
