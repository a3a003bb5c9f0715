#include "frobkit/algebra.hpp"

#include <random>
#include <sstream>

#include "frobkit/linalg.hpp"

namespace frobkit {
namespace {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.push_back({static_cast<int>(i), v[i]});
  return s;
}

Vec to_dense(const SparseVec& s, int dim) {
  Vec v(dim);
  for (const auto& t : s) v[t.index] = t.coeff;
  return v;
}

// acc += f * s
void axpy(const FieldSpec& fs, Vec& acc, const mpq_class& f, const SparseVec& s) {
  for (const auto& t : s) fs.add_mul(acc[t.index], f, t.coeff);
}

bool is_literal_base_field(const PrimitiveAlgebra& p) {
  return p.dim == 1 && p.unit.size() == 1 && p.unit[0] == 1 && p.table.size() == 1 && p.table[0].size() == 1 &&
         p.table[0][0].index == 0 && p.table[0][0].coeff == 1;
}

std::string triple(const std::vector<std::string>& l, int i, int j, int k = -1) {
  std::string s = "(" + l[i] + ", " + l[j];
  if (k >= 0) s += ", " + l[k];
  return s + ")";
}

void validate_primitive(const PrimitiveAlgebra& p) {
  const FieldSpec& fs = p.field;
  const int n = p.dim;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = p.mul(i, j);
      const auto& b = p.mul(j, i);
      bool same = a.size() == b.size();
      for (std::size_t t = 0; same && t < a.size(); ++t) same = a[t].index == b[t].index && a[t].coeff == b[t].coeff;
      if (!same) throw NotCommutative(i, j, "structure constants not commutative at " + triple(p.labels, i, j));
    }
  for (int j = 0; j < n; ++j) {
    Vec acc(n);
    for (int k = 0; k < n; ++k)
      if (sgn(p.unit[k]) != 0) axpy(fs, acc, p.unit[k], p.mul(k, j));
    for (int t = 0; t < n; ++t)
      if (acc[t] != (t == j ? 1 : 0)) throw BadUnit(j, "unit does not act as identity on basis element " + p.labels[j]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec left(n), right(n);
        for (const auto& t : p.mul(i, j)) axpy(fs, left, t.coeff, p.mul(t.index, k));
        for (const auto& t : p.mul(j, k)) axpy(fs, right, t.coeff, p.mul(i, t.index));
        if (left != right) throw NotAssociative(i, j, k, "multiplication not associative at " + triple(p.labels, i, j, k));
      }
}

// Generators default to every basis element except the unit (when the unit is a basis vector).
void default_generators(PrimitiveAlgebra& p) {
  int unit_index = -1;
  for (int i = 0; i < p.dim; ++i) {
    bool is_e = true;
    for (int t = 0; t < p.dim; ++t)
      if (p.unit[t] != (t == i ? 1 : 0)) is_e = false;
    if (is_e) unit_index = i;
  }
  p.generators.clear();
  p.words.assign(p.dim, {});
  for (int i = 0; i < p.dim; ++i) {
    if (i == unit_index) continue;
    p.words[i] = {static_cast<int>(p.generators.size())};
    p.generators.push_back(i);
  }
}

}  // namespace

bool PrimitiveAlgebra::same_structure(const PrimitiveAlgebra& o) const {
  if (!(field == o.field) || dim != o.dim || unit != o.unit) return false;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != o.table[i].size()) return false;
    for (std::size_t t = 0; t < table[i].size(); ++t)
      if (table[i][t].index != o.table[i][t].index || table[i][t].coeff != o.table[i][t].coeff) return false;
  }
  return true;
}

Algebra::Algebra(FieldSpec f) : field_(f) { finalize(); }

Algebra::Algebra(std::shared_ptr<const PrimitiveAlgebra> p) : field_(p->field) {
  if (!is_literal_base_field(*p)) factors_.push_back(std::move(p));
  finalize();
}

void Algebra::finalize() {
  dim_ = 1;
  for (const auto& f : factors_) dim_ *= f->dim;
  strides_.assign(factors_.size(), 1);
  for (int f = static_cast<int>(factors_.size()) - 2; f >= 0; --f) strides_[f] = strides_[f + 1] * factors_[f + 1]->dim;
  gen_factor_.clear();
  gen_local_.clear();
  gen_offset_.clear();
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    gen_offset_.push_back(static_cast<int>(gen_factor_.size()));
    for (std::size_t l = 0; l < factors_[f]->generators.size(); ++l) {
      gen_factor_.push_back(static_cast<int>(f));
      gen_local_.push_back(static_cast<int>(l));
    }
  }
}

std::string Algebra::name() const {
  if (factors_.empty()) return field_.name();
  std::string s;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) s += " ⊗ ";
    bool paren = factors_.size() > 1 && factors_[f]->name.find(' ') != std::string::npos;
    s += paren ? "(" + factors_[f]->name + ")" : factors_[f]->name;
  }
  return s;
}

std::vector<std::string> Algebra::labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < dim_; ++i) {
    if (factors_.empty()) {
      out.push_back("1");
      continue;
    }
    auto parts = split_index(i);
    std::string s;
    for (std::size_t f = 0; f < parts.size(); ++f) s += (f ? "⊗" : "") + factors_[f]->labels[parts[f]];
    out.push_back(s);
  }
  return out;
}

bool Algebra::operator==(const Algebra& o) const {
  if (!(field_ == o.field_) || factors_.size() != o.factors_.size()) return false;
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (factors_[f] != o.factors_[f] && !factors_[f]->same_structure(*o.factors_[f])) return false;
  return true;
}

std::vector<int> Algebra::split_index(int i) const {
  std::vector<int> parts(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    parts[f] = i / strides_[f];
    i %= strides_[f];
  }
  return parts;
}

int Algebra::join_index(const std::vector<int>& parts) const {
  int i = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) i += parts[f] * strides_[f];
  return i;
}

SparseVec Algebra::mul(int i, int j) const {
  SparseVec cur{{0, mpq_class(1)}};
  if (factors_.empty()) return cur;
  auto pi = split_index(i), pj = split_index(j);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const SparseVec& prod = factors_[f]->mul(pi[f], pj[f]);
    SparseVec next;
    next.reserve(cur.size() * prod.size());
    for (const auto& a : cur)
      for (const auto& b : prod) next.push_back({a.index * factors_[f]->dim + b.index, field_.mul(a.coeff, b.coeff)});
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_class c = field_.mul(a[i], b[j]);
      axpy(field_, r, c, mul(i, j));
    }
  }
  return r;
}

Vec Algebra::unit() const {
  Vec u{mpq_class(1)};
  for (const auto& f : factors_) {
    Vec next(u.size() * f->dim);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (int b = 0; b < f->dim; ++b) next[a * f->dim + b] = field_.mul(u[a], f->unit[b]);
    u = std::move(next);
  }
  return u;
}

Vec Algebra::basis_vector(int i) const {
  Vec v(dim_);
  v[i] = 1;
  return v;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& t : mul(i, j)) field_.add_mul(m(t.index, j), a[i], t.coeff);
  }
  return m;
}

Matrix Algebra::left_mult_basis(int i) const { return left_mult(basis_vector(i)); }

Vec Algebra::power(const Vec& a, int n) const {
  Vec r = unit();
  for (int k = 0; k < n; ++k) r = multiply(r, a);
  return r;
}

Vec Algebra::eval(const Polynomial& p, const Vec& a) const {
  Vec acc(dim_);
  Vec u = unit();
  for (int k = p.degree(); k >= 0; --k) {
    acc = multiply(acc, a);
    for (int i = 0; i < dim_; ++i) field_.add_mul(acc[i], p.coeff(k), u[i]);
  }
  return acc;
}

Vec Algebra::generator(int g) const {
  Vec u{mpq_class(1)};
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& p = *factors_[f];
    Vec local = static_cast<int>(f) == gen_factor_[g] ? to_dense({{p.generators[gen_local_[g]], mpq_class(1)}}, p.dim) : p.unit;
    Vec next(u.size() * p.dim);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (int b = 0; b < p.dim; ++b) next[a * p.dim + b] = field_.mul(u[a], local[b]);
    u = std::move(next);
  }
  return u;
}

std::vector<int> Algebra::local_word(int f, int local_i) const {
  std::vector<int> w;
  for (int l : factors_[f]->words[local_i]) w.push_back(gen_offset_[f] + l);
  return w;
}

std::vector<int> Algebra::word(int i) const {
  std::vector<int> w;
  auto parts = split_index(i);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    auto lw = local_word(static_cast<int>(f), parts[f]);
    w.insert(w.end(), lw.begin(), lw.end());
  }
  return w;
}

Algebra tensor_flat(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("tensor of algebras over " + a.field().name() + " and " + b.field().name());
  Algebra r(a.field());
  r.factors_ = a.factors_;
  r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
  r.finalize();
  return r;
}

Algebra tensor_power(const Algebra& a, int n) {
  Algebra r(a.field());
  for (int i = 0; i < n; ++i) r = tensor_flat(r, a);
  return r;
}

Algebra make_algebra_sparse(FieldSpec field, std::vector<std::string> basis_labels, std::vector<SparseVec> table, Vec unit,
                            std::string name) {
  auto p = std::make_shared<PrimitiveAlgebra>();
  p->field = field;
  p->dim = static_cast<int>(basis_labels.size());
  if (p->dim < 1) throw DimensionMismatch("algebra needs at least one basis element");
  if (table.size() != static_cast<std::size_t>(p->dim * p->dim) || unit.size() != static_cast<std::size_t>(p->dim))
    throw DimensionMismatch("structure table does not match basis size");
  p->labels = std::move(basis_labels);
  p->table = std::move(table);
  for (auto& s : p->table) {
    SparseVec clean;
    for (auto& t : s) {
      if (t.index < 0 || t.index >= p->dim) throw DimensionMismatch("structure constant index out of range");
      mpq_class c = field.from_rational(t.coeff);
      if (sgn(c) != 0) clean.push_back({t.index, c});
    }
    std::sort(clean.begin(), clean.end(), [](const SparseTerm& x, const SparseTerm& y) { return x.index < y.index; });
    s = std::move(clean);
  }
  for (auto& u : unit) u = field.from_rational(u);
  p->unit = std::move(unit);
  p->name = name.empty() ? "A" + std::to_string(p->dim) : std::move(name);
  validate_primitive(*p);
  default_generators(*p);
  return Algebra(std::shared_ptr<const PrimitiveAlgebra>(std::move(p)));
}

Algebra make_algebra(FieldSpec field, std::vector<std::string> basis_labels, const StructureConstants& structure,
                     const std::vector<Scalar>& unit, std::string name) {
  const std::size_t n = basis_labels.size();
  if (structure.size() != n || unit.size() != n) throw DimensionMismatch("structure constants do not match basis size");
  auto check = [&](const Scalar& s) {
    if (!(s.field() == field)) throw FieldMismatch("structure constant over " + s.field().name() + ", expected " + field.name());
    return s.raw();
  };
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (structure[i].size() != n) throw DimensionMismatch("structure constants do not match basis size");
    for (std::size_t j = 0; j < n; ++j) {
      if (structure[i][j].size() != n) throw DimensionMismatch("structure constants do not match basis size");
      Vec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = check(structure[i][j][k]);
      table[i * n + j] = to_sparse(v);
    }
  }
  Vec u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = check(unit[k]);
  return make_algebra_sparse(field, std::move(basis_labels), std::move(table), std::move(u), std::move(name));
}

Algebra univariate_quotient(const Polynomial& f, const std::string& var) {
  if (f.degree() < 1) throw NonMonic("univariate quotient needs degree >= 1");
  if (!f.is_monic()) throw NonMonic("polynomial " + f.str(var) + " is not monic");
  const FieldSpec& fs = f.field();
  const int d = f.degree();
  if (d == 1) return Algebra(fs);
  auto p = std::make_shared<PrimitiveAlgebra>();
  p->field = fs;
  p->dim = d;
  p->name = fs.name() + "[" + var + "]/(" + f.str(var) + ")";
  for (int i = 0; i < d; ++i) p->labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
  // x^k for k < 2d-1, reduced mod f.
  std::vector<Vec> pw(2 * d - 1, Vec(d));
  for (int k = 0; k < d; ++k) pw[k][k] = 1;
  for (int k = d; k < 2 * d - 1; ++k) {
    // x * x^{k-1}
    const Vec& prev = pw[k - 1];
    Vec next(d);
    for (int i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
    const mpq_class& top = prev[d - 1];
    if (sgn(top) != 0)
      for (int i = 0; i < d; ++i) fs.sub_mul(next[i], top, f.coeff(i));
    pw[k] = next;
  }
  p->table.resize(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p->table[i * d + j] = to_sparse(pw[i + j]);
  p->unit = Vec(d);
  p->unit[0] = 1;
  p->generators = {1};
  p->words.assign(d, {});
  for (int k = 1; k < d; ++k) p->words[k] = std::vector<int>(k, 0);
  validate_primitive(*p);
  return Algebra(std::shared_ptr<const PrimitiveAlgebra>(std::move(p)));
}

Algebra univariate_quotient(FieldSpec field, const std::vector<Scalar>& monic_coeffs, const std::string& var) {
  std::vector<mpq_class> c;
  for (const auto& s : monic_coeffs) {
    if (!(s.field() == field)) throw FieldMismatch("polynomial coefficient over a different field");
    c.push_back(s.raw());
  }
  Polynomial f(field, c);
  if (f.degree() + 1 != static_cast<int>(c.size())) throw NonMonic("leading coefficient is zero");
  return univariate_quotient(f, var);
}

Algebra split_product(FieldSpec field, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) table[i * n + i] = {{i, mpq_class(1)}};
  Vec unit(n, mpq_class(1));
  std::string name = field.name();
  for (int i = 1; i < n; ++i) name += "×" + field.name();
  return make_algebra_sparse(field, labels, table, unit, name);
}

// ---------------------------------------------------------------------------

AlgebraMap::AlgebraMap(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.field() == target_.field()) || !(matrix_.field() == source_.field()))
    throw FieldMismatch("algebra map between different fields");
  if (static_cast<int>(matrix_.rows()) != target_.dim() || static_cast<int>(matrix_.cols()) != source_.dim())
    throw DimensionMismatch("algebra map matrix has wrong shape");
  if (apply(source_.unit()) != target_.unit()) throw Error("algebra map does not preserve the unit");
  for (int g = 0; g < source_.num_generators(); ++g) {
    Vec gv = source_.generator(g);
    Vec fg = apply(gv);
    for (int j = 0; j < source_.dim(); ++j) {
      Vec lhs = apply(source_.multiply(gv, source_.basis_vector(j)));
      Vec rhs = target_.multiply(fg, apply(source_.basis_vector(j)));
      if (lhs != rhs) throw Error("algebra map is not multiplicative");
    }
  }
}

AlgebraMap AlgebraMap::identity(const Algebra& a) { return AlgebraMap(a, a, Matrix::identity(a.field(), a.dim())); }

Vec AlgebraMap::apply(const Vec& v) const {
  Vec r(target_.dim());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    for (int i = 0; i < target_.dim(); ++i)
      if (sgn(matrix_(i, j)) != 0) target_.field().add_mul(r[i], matrix_(i, j), v[j]);
  }
  return r;
}

AlgebraMap AlgebraMap::then(const AlgebraMap& next) const {
  if (!(next.source_ == target_)) throw AlgebraMismatch("composing algebra maps with mismatched ends");
  return AlgebraMap(source_, next.target_, next.matrix_ * matrix_);
}

TensorResult tensor_algebras(const Algebra& a, const Algebra& b) {
  Algebra t = tensor_flat(a, b);
  const FieldSpec& fs = a.field();
  Vec ua = a.unit(), ub = b.unit();
  Matrix left(fs, t.dim(), a.dim()), right(fs, t.dim(), b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      left(i * b.dim() + j, i) = ub[j];
      right(i * b.dim() + j, j) = ua[i];
    }
  return {t, AlgebraMap(a, t, left), AlgebraMap(b, t, right)};
}

AlgebraMap multiplication_map(const Algebra& a, int copies) {
  if (copies < 1) throw Error("multiplication_map needs at least one copy");
  Algebra src = tensor_power(a, copies);
  Matrix m(a.field(), a.dim(), src.dim());
  for (int idx = 0; idx < src.dim(); ++idx) {
    std::vector<int> digits(copies);
    int r = idx;
    for (int c = copies - 1; c >= 0; --c) {
      digits[c] = r % a.dim();
      r /= a.dim();
    }
    Vec prod = a.basis_vector(digits[0]);
    for (int c = 1; c < copies; ++c) prod = a.multiply(prod, a.basis_vector(digits[c]));
    for (int i = 0; i < a.dim(); ++i) m(i, idx) = prod[i];
  }
  return AlgebraMap(src, a, m);
}

// ---------------------------------------------------------------------------

IdealBasis::IdealBasis(Algebra a, Matrix generators) : algebra_(std::move(a)) {
  basis_ = generators.cols() ? column_basis(generators) : Matrix(algebra_.field(), algebra_.dim(), 0);
  if (basis_.cols() == 0) return;
  for (int k = 0; k < algebra_.dim(); ++k) {
    Matrix img = algebra_.left_mult_basis(k) * basis_;
    if (rank(Matrix::hstack(basis_, img)) != basis_.cols()) throw Error("subspace is not an ideal");
  }
}

bool IdealBasis::contains(const Vec& v) const {
  Matrix col = Matrix::column_vector(algebra_.field(), v);
  if (basis_.cols() == 0) return col.is_zero();
  return rank(Matrix::hstack(basis_, col)) == basis_.cols();
}

IdealBasis nilradical(const Algebra& a) {
  const FieldSpec& fs = a.field();
  const int n = a.dim();
  if (!fs.is_rational() && fs.characteristic() <= static_cast<std::uint64_t>(n))
    throw SmallCharacteristic("trace-form radical needs characteristic 0 or > " + std::to_string(n) + ", got " +
                              std::to_string(fs.characteristic()));
  Vec tr(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (const auto& t : a.mul(k, i))
        if (t.index == i) fs.add_to(tr[k], t.coeff);
  Matrix form(fs, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      mpq_class v = 0;
      for (const auto& t : a.mul(i, j)) fs.add_mul(v, t.coeff, tr[t.index]);
      form(i, j) = v;
      form(j, i) = v;
    }
  return IdealBasis(a, kernel_basis(form));
}

bool is_reduced(const Algebra& a) { return nilradical(a).dim() == 0; }

std::vector<Vec> radical_ideal_generators(const Algebra& a) {
  std::vector<Vec> out;
  const FieldSpec& fs = a.field();
  for (std::size_t f = 0; f < a.factors().size(); ++f) {
    Algebra local(a.factors()[f]);
    IdealBasis rad = nilradical(local);
    if (rad.dim() == 0) continue;
    const Matrix& R = rad.basis();
    Matrix sq(fs, local.dim(), 0);
    for (std::size_t i = 0; i < R.cols(); ++i)
      for (std::size_t j = i; j < R.cols(); ++j)
        sq = Matrix::hstack(sq, Matrix::column_vector(fs, local.multiply(R.column_values(i), R.column_values(j))));
    std::vector<Vec> lifts;
    for (auto idx : complement_columns(sq, R)) lifts.push_back(R.column_values(idx));
    // Embed as 1⊗…⊗v⊗…⊗1.
    for (const auto& v : lifts) {
      Vec u{mpq_class(1)};
      for (std::size_t g = 0; g < a.factors().size(); ++g) {
        const auto& p = *a.factors()[g];
        const Vec& loc = g == f ? v : p.unit;
        Vec next(u.size() * p.dim);
        for (std::size_t x = 0; x < u.size(); ++x)
          for (int y = 0; y < p.dim; ++y) next[x * p.dim + y] = fs.mul(u[x], loc[y]);
        u = std::move(next);
      }
      out.push_back(std::move(u));
    }
  }
  return out;
}

Polynomial minimal_polynomial(const Algebra& a, const Vec& x) {
  const FieldSpec& fs = a.field();
  Matrix powers(fs, a.dim(), 0);
  Vec cur = a.unit();
  for (int k = 0; k <= a.dim(); ++k) {
    Matrix col = Matrix::column_vector(fs, cur);
    if (powers.cols() > 0) {
      auto sol = solve(powers, col);
      if (sol) {
        std::vector<mpq_class> c(k + 1);
        for (int i = 0; i < k; ++i) c[i] = fs.neg((*sol)(i, 0));
        c[k] = 1;
        return Polynomial(fs, c);
      }
    } else if (col.is_zero()) {
      return Polynomial::constant(fs, 1);
    }
    powers = Matrix::hstack(powers, col);
    cur = a.multiply(cur, x);
  }
  throw Error("minimal polynomial search exceeded the dimension");
}

namespace {

std::vector<Vec> candidate_elements(const Algebra& a, unsigned seed, int randoms) {
  std::vector<Vec> c;
  for (int i = 0; i < a.dim(); ++i) c.push_back(a.basis_vector(i));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-7, 7);
  for (int r = 0; r < randoms; ++r) {
    Vec v(a.dim());
    for (auto& x : v) x = a.field().from_integer(dist(rng));
    c.push_back(std::move(v));
  }
  return c;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

FieldCheck is_field(const Algebra& a, int degree_budget, unsigned seed) {
  FieldCheck out;
  if (a.dim() == 1) {
    out.verdict = FieldVerdict::True;
    out.certificate = Polynomial::linear_root(a.field(), mpq_class(1));
    return out;
  }
  for (const Vec& x : candidate_elements(a, seed, 2 * a.dim() + 8)) {
    if (is_zero_vec(x)) continue;
    Matrix k = kernel_basis(a.left_mult(x));
    if (k.cols() > 0) {
      out.verdict = FieldVerdict::False;
      out.zero_divisors = std::make_pair(x, k.column_values(0));
      return out;
    }
    Polynomial f = minimal_polynomial(a, x);
    if (f.degree() < 2 && f.degree() < a.dim()) continue;
    FactorResult fr = find_factor(f, degree_budget);
    if (fr.status == FactorSearch::FoundFactor) {
      Polynomial g = *fr.factor;
      Polynomial h = Polynomial::divmod(f, g).first;
      out.verdict = FieldVerdict::False;
      out.zero_divisors = std::make_pair(a.eval(g, x), a.eval(h, x));
      return out;
    }
    if (fr.status == FactorSearch::Irreducible && f.degree() == a.dim()) {
      out.verdict = FieldVerdict::True;
      out.certificate = f;
      return out;
    }
  }
  return out;
}

namespace {

std::optional<Vec> find_idempotent(const Algebra& a, int budget, unsigned seed) {
  const FieldSpec& fs = a.field();
  for (const Vec& x : candidate_elements(a, seed, 2 * a.dim() + 8)) {
    Polynomial f = minimal_polynomial(a, x);
    if (f.degree() < 2) continue;
    Polynomial df = f.derivative();
    Polynomial sq = df.is_zero() ? f : Polynomial::divmod(f, Polynomial::gcd(f, df)).first.monic();
    if (sq.degree() < 2) continue;
    FactorResult fr = find_factor(sq, budget);
    if (fr.status != FactorSearch::FoundFactor) continue;
    Polynomial u = *fr.factor;
    Polynomial up = Polynomial::constant(fs, 1);
    for (int i = 0; i < f.degree(); ++i) up = up * u;
    Polynomial g = Polynomial::gcd(f, up);
    Polynomial h = Polynomial::divmod(f, g).first;
    if (g.degree() < 1 || h.degree() < 1) continue;
    auto [one, s, t] = Polynomial::ext_gcd(g, h);
    if (one.degree() != 0) continue;
    // e ≡ 0 mod g, e ≡ 1 mod h
    Vec e = a.eval(s * g, x);
    if (is_zero_vec(e) || e == a.unit()) continue;
    return e;
  }
  return std::nullopt;
}

Block block_of(const Algebra& a, const Vec& e, const std::string& name) {
  const FieldSpec& fs = a.field();
  Matrix basis = column_basis(a.left_mult(e));
  const int d = static_cast<int>(basis.cols());
  std::vector<SparseVec> table(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec p = a.multiply(basis.column_values(i), basis.column_values(j));
      auto coords = solve(basis, Matrix::column_vector(fs, p));
      table[i * d + j] = to_sparse(coords->column_values(0));
    }
  auto unit = solve(basis, Matrix::column_vector(fs, e));
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("f" + std::to_string(i + 1));
  Algebra blk = make_algebra_sparse(fs, labels, table, unit->column_values(0), name);
  return {blk, e, basis};
}

void split_recursive(const Algebra& a, const Matrix& embedding, int budget, unsigned seed, const std::string& name,
                     std::vector<Block>& out) {
  auto e = find_idempotent(a, budget, seed);
  if (!e) {
    Vec idem = (embedding * Matrix::column_vector(a.field(), a.unit())).column_values(0);
    out.push_back({a, idem, embedding});
    return;
  }
  Vec f = a.unit();
  for (int i = 0; i < a.dim(); ++i) f[i] = a.field().sub(f[i], (*e)[i]);
  for (const Vec& idem : {*e, f}) {
    Block b = block_of(a, idem, name + "." + std::to_string(out.size() + 1));
    split_recursive(b.algebra, embedding * b.embedding, budget, seed + 1, name, out);
  }
}

}  // namespace

std::vector<Block> decompose(const Algebra& a, int degree_budget, unsigned seed) {
  std::vector<Block> out;
  split_recursive(a, Matrix::identity(a.field(), a.dim()), degree_budget, seed, "block", out);
  // Verify: idempotents orthogonal and summing to one.
  Vec sum(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int k = 0; k < a.dim(); ++k) a.field().add_to(sum[k], out[i].idempotent[k]);
    if (a.multiply(out[i].idempotent, out[i].idempotent) != out[i].idempotent) throw Error("decompose: block idempotent is not idempotent");
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!is_zero_vec(a.multiply(out[i].idempotent, out[j].idempotent))) throw Error("decompose: idempotents not orthogonal");
  }
  if (sum != a.unit()) throw Error("decompose: idempotents do not sum to one");
  return out;
}

}  // namespace frobkit
