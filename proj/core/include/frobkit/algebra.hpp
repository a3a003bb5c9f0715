#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/field.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/polynomial.hpp"

namespace frobkit {

/// Coordinate vector of raw field values.
using Vec = std::vector<mpq_class>;

struct SparseTerm {
  int index;
  mpq_class coeff;
};
/// Sparse coordinate vector; indices strictly increasing, no zero coefficients.
using SparseVec = std::vector<SparseTerm>;

/// A finite-dimensional commutative unital algebra given by structure
/// constants, not further decomposed as a tensor product.
struct PrimitiveAlgebra {
  FieldSpec field;
  int dim = 0;
  std::string name;
  std::vector<std::string> labels;
  std::vector<SparseVec> table;  ///< table[i * dim + j] = b_i * b_j
  Vec unit;
  /// Basis indices that generate the algebra; every basis element is the
  /// product of the generators listed in its word (empty word = unit).
  std::vector<int> generators;
  std::vector<std::vector<int>> words;  ///< words[i] lists positions into `generators`

  const SparseVec& mul(int i, int j) const { return table[static_cast<std::size_t>(i) * dim + j]; }
  bool same_structure(const PrimitiveAlgebra& o) const;
};

/// Immutable handle to an algebra. Tensor products are kept as flat lists of
/// primitive factors, so (A⊗B)⊗C and A⊗(B⊗C) are the same algebra with the
/// same (lexicographic) basis order. The base field is the empty product.
///
/// Every algebra carries a generating set: the generators of each factor,
/// embedded as 1⊗…⊗g⊗…⊗1, listed factor by factor. Modules store one action
/// matrix per generator.
class Algebra {
 public:
  /// The base field as a one-dimensional algebra.
  explicit Algebra(FieldSpec f = FieldSpec::rationals());
  explicit Algebra(std::shared_ptr<const PrimitiveAlgebra> p);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  bool is_base_field() const { return factors_.empty(); }
  const std::vector<std::shared_ptr<const PrimitiveAlgebra>>& factors() const { return factors_; }
  std::string name() const;
  std::vector<std::string> labels() const;

  /// Structural equality: same field and the same factor structure constants.
  bool operator==(const Algebra& o) const;

  SparseVec mul(int i, int j) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit() const;
  Vec basis_vector(int i) const;
  Vec zero() const { return Vec(dim_); }
  /// Matrix of left multiplication by a.
  Matrix left_mult(const Vec& a) const;
  Matrix left_mult_basis(int i) const;
  Vec power(const Vec& a, int n) const;
  /// Evaluates a polynomial at an element.
  Vec eval(const Polynomial& p, const Vec& a) const;

  int num_generators() const { return static_cast<int>(gen_factor_.size()); }
  Vec generator(int g) const;
  /// Generator as a single basis index (every generator is a basis element of
  /// its factor, but the full vector is a basis element only when the other
  /// factors have their unit as a basis element).
  std::pair<int, int> generator_origin(int g) const { return {gen_factor_[g], gen_local_[g]}; }
  /// Offset of factor f's generators in the global generator list.
  int generator_offset(int f) const { return gen_offset_[f]; }
  /// Word of a basis element as global generator indices.
  std::vector<int> word(int i) const;
  /// Word of a factor-local basis element, as global generator indices.
  std::vector<int> local_word(int f, int local_i) const;

  /// Index decomposition across factors.
  std::vector<int> split_index(int i) const;
  int join_index(const std::vector<int>& parts) const;

  friend Algebra tensor_flat(const Algebra& a, const Algebra& b);

 private:
  void finalize();

  FieldSpec field_;
  std::vector<std::shared_ptr<const PrimitiveAlgebra>> factors_;
  int dim_ = 1;
  std::vector<int> strides_;
  std::vector<int> gen_factor_, gen_local_, gen_offset_;
};

/// The flat tensor product (no inclusion maps).
Algebra tensor_flat(const Algebra& a, const Algebra& b);
Algebra tensor_power(const Algebra& a, int n);

/// Structure-constant input for make_algebra: c[i][j][k].
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

/// Validates commutativity, associativity and the unit law on all basis
/// triples. Throws NotCommutative / NotAssociative / BadUnit naming the triple.
Algebra make_algebra(FieldSpec field, std::vector<std::string> basis_labels,
                     const StructureConstants& structure, const std::vector<Scalar>& unit,
                     std::string name = "");

/// Same, from sparse product table; used by file parsers.
Algebra make_algebra_sparse(FieldSpec field, std::vector<std::string> basis_labels,
                            std::vector<SparseVec> table, Vec unit, std::string name = "");

/// k[x]/(f) with basis 1, x, ..., x^{d-1}. coefficients low degree first.
Algebra univariate_quotient(FieldSpec field, const std::vector<Scalar>& monic_coeffs,
                            const std::string& var = "x");
Algebra univariate_quotient(const Polynomial& f, const std::string& var = "x");

/// k^n with orthogonal idempotent basis e1..en.
Algebra split_product(FieldSpec field, int n);

class AlgebraMap {
 public:
  /// Validates unit and multiplicativity. Throws Error on failure.
  AlgebraMap(Algebra source, Algebra target, Matrix matrix);
  static AlgebraMap identity(const Algebra& a);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  Vec apply(const Vec& v) const;
  AlgebraMap then(const AlgebraMap& next) const;

 private:
  Algebra source_, target_;
  Matrix matrix_;
};

struct TensorResult {
  Algebra algebra;
  AlgebraMap inclusion_left;
  AlgebraMap inclusion_right;
};

/// a ⊗ b with the two inclusions a → a⊗b, b → a⊗b. Throws FieldMismatch.
TensorResult tensor_algebras(const Algebra& a, const Algebra& b);

/// m-fold tensor power of a → a, b_{i1}⊗…⊗b_{im} ↦ b_{i1}…b_{im}.
AlgebraMap multiplication_map(const Algebra& a, int copies);

/// Subspace spanned by `generators` (columns), closed under multiplication.
class IdealBasis {
 public:
  IdealBasis(Algebra a, Matrix generators);
  const Algebra& algebra() const { return algebra_; }
  /// dim x k matrix whose columns span the ideal (independent).
  const Matrix& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  bool contains(const Vec& v) const;

 private:
  Algebra algebra_;
  Matrix basis_;
};

/// Nilpotent elements, as the radical of the trace form (a,b) ↦ Tr(L_ab).
/// Throws SmallCharacteristic unless char = 0 or char > dim.
IdealBasis nilradical(const Algebra& a);
bool is_reduced(const Algebra& a);

/// Elements generating the nilradical as an ideal (lifts of a basis of rad/rad²).
/// For tensor products this is the union over factors.
std::vector<Vec> radical_ideal_generators(const Algebra& a);

Polynomial minimal_polynomial(const Algebra& a, const Vec& x);

enum class FieldVerdict { True, False, Unknown };

struct FieldCheck {
  FieldVerdict verdict = FieldVerdict::Unknown;
  std::optional<std::pair<Vec, Vec>> zero_divisors;  ///< nonzero a, b with ab = 0
  std::optional<Polynomial> certificate;             ///< irreducible minimal polynomial of degree dim
};

FieldCheck is_field(const Algebra& a, int degree_budget = 6, unsigned seed = 1);

struct Block {
  Algebra algebra;
  Vec idempotent;
  Matrix embedding;  ///< a.dim x block.dim, columns are the block basis inside a
};

/// Splits a along orthogonal idempotents found from factorizations of minimal
/// polynomials. A single block means no splitting was found.
std::vector<Block> decompose(const Algebra& a, int degree_budget = 6, unsigned seed = 7);

}  // namespace frobkit
