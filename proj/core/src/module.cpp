#include "frobkit/module.hpp"

#include <optional>
#include <random>
#include <sstream>

#include "frobkit/linalg.hpp"

namespace frobkit {

std::map<int, long> GradedDims::nonzero() const {
  std::map<int, long> out;
  for (const auto& [d, v] : dims)
    if (v != 0) out[d] = v;
  return out;
}

std::string GradedDims::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, v] : dims) {
    os << (first ? "" : ", ") << d << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

Matrix product_of(const std::vector<Matrix>& gens, const std::vector<int>& word, const FieldSpec& f, int n) {
  if (word.empty()) return Matrix::identity(f, n);
  Matrix r = gens[word[0]];
  for (std::size_t k = 1; k < word.size(); ++k) r = r * gens[word[k]];
  return r;
}

std::vector<Matrix> local_actions(const Algebra& a, const std::vector<Matrix>& gens, int f, int n) {
  const auto& p = *a.factors()[f];
  std::vector<Matrix> out;
  out.reserve(p.dim);
  for (int j = 0; j < p.dim; ++j) out.push_back(product_of(gens, a.local_word(f, j), a.field(), n));
  return out;
}

}  // namespace

Module::Module(Algebra a, int dim, std::vector<Matrix> gens, Unchecked)
    : algebra_(std::move(a)), dim_(dim), gens_(std::move(gens)) {}

Module make_module_unchecked(Algebra a, int dim, std::vector<Matrix> gens) {
  return Module(std::move(a), dim, std::move(gens), Module::Unchecked{});
}

Module::Module(Algebra a, int dim, std::vector<Matrix> gens) : algebra_(std::move(a)), dim_(dim), gens_(std::move(gens)) {
  const FieldSpec& fs = algebra_.field();
  if (dim_ < 0) throw DimensionMismatch("module dimension is negative");
  if (static_cast<int>(gens_.size()) != algebra_.num_generators())
    throw DimensionMismatch("module needs " + std::to_string(algebra_.num_generators()) + " generator actions");
  for (const auto& g : gens_) {
    if (!(g.field() == fs)) throw FieldMismatch("module action over a different field");
    if (static_cast<int>(g.rows()) != dim_ || static_cast<int>(g.cols()) != dim_)
      throw DimensionMismatch("module action has wrong shape");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i]))
        throw InvalidModule("actions of generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  for (std::size_t f = 0; f < algebra_.factors().size(); ++f) {
    const auto& p = *algebra_.factors()[f];
    auto loc = local_actions(algebra_, gens_, static_cast<int>(f), dim_);
    Matrix unit(fs, dim_, dim_);
    for (int k = 0; k < p.dim; ++k)
      if (sgn(p.unit[k]) != 0) unit.add_scaled(p.unit[k], loc[k]);
    if (!(unit == Matrix::identity(fs, dim_))) throw InvalidModule("unit of factor " + p.name + " does not act as identity");
    for (std::size_t l = 0; l < p.generators.size(); ++l) {
      const Matrix& g = gens_[algebra_.generator_offset(static_cast<int>(f)) + l];
      for (int j = 0; j < p.dim; ++j) {
        Matrix rhs(fs, dim_, dim_);
        for (const auto& t : p.mul(p.generators[l], j)) rhs.add_scaled(t.coeff, loc[t.index]);
        if (!(g * loc[j] == rhs))
          throw InvalidModule("action violates relation " + p.labels[p.generators[l]] + "*" + p.labels[j] + " in " + p.name);
      }
    }
  }
}

std::vector<Matrix> Module::basis_actions() const {
  const FieldSpec& fs = algebra_.field();
  std::vector<std::vector<Matrix>> loc;
  for (std::size_t f = 0; f < algebra_.factors().size(); ++f) loc.push_back(local_actions(algebra_, gens_, static_cast<int>(f), dim_));
  std::vector<Matrix> out;
  out.reserve(algebra_.dim());
  for (int i = 0; i < algebra_.dim(); ++i) {
    auto parts = algebra_.split_index(i);
    Matrix r = Matrix::identity(fs, dim_);
    bool first = true;
    for (std::size_t f = 0; f < parts.size(); ++f) {
      if (algebra_.local_word(static_cast<int>(f), parts[f]).empty()) continue;
      r = first ? loc[f][parts[f]] : r * loc[f][parts[f]];
      first = false;
    }
    out.push_back(std::move(r));
  }
  return out;
}

Matrix Module::action_basis(int i) const { return product_of(gens_, algebra_.word(i), algebra_.field(), dim_); }

Matrix Module::action(const Vec& a) const {
  Matrix r(algebra_.field(), dim_, dim_);
  for (int i = 0; i < algebra_.dim(); ++i)
    if (sgn(a[i]) != 0) r.add_scaled(a[i], action_basis(i));
  return r;
}

Algebra factor_range(const Algebra& a, int first, int last) {
  Algebra r(a.field());
  for (int f = first; f < last; ++f) r = tensor_flat(r, Algebra(a.factors()[f]));
  return r;
}

Module Module::restrict_to_factors(int first, int last) const {
  Algebra sub = factor_range(algebra_, first, last);
  int g0 = first < static_cast<int>(algebra_.factors().size()) ? algebra_.generator_offset(first) : algebra_.num_generators();
  std::vector<Matrix> g(gens_.begin() + g0, gens_.begin() + g0 + sub.num_generators());
  return make_module_unchecked(sub, dim_, std::move(g));
}

// ---------------------------------------------------------------------------

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.algebra() == target_.algebra())) throw AlgebraMismatch("module map between modules over different algebras");
  if (static_cast<int>(matrix_.rows()) != target_.dim() || static_cast<int>(matrix_.cols()) != source_.dim())
    throw DimensionMismatch("module map matrix has wrong shape");
  for (int g = 0; g < source_.algebra().num_generators(); ++g)
    if (!(matrix_ * source_.generator_action(g) == target_.generator_action(g) * matrix_))
      throw InvalidModule("matrix does not intertwine generator " + std::to_string(g));
}

// ---------------------------------------------------------------------------

Quotient quotient_module(const Algebra& a, int n, const std::vector<Matrix>& actions, const Matrix& relations) {
  const FieldSpec& fs = a.field();
  Matrix w = relations.cols() ? column_basis(relations) : Matrix(fs, n, 0);
  Matrix id = Matrix::identity(fs, n);
  Matrix section = id.select_columns(complement_columns(w, id));
  const int q = static_cast<int>(section.cols());
  Matrix projection(fs, q, n);
  if (q > 0) {
    auto inv = inverse(Matrix::hstack(w, section));
    if (!inv) throw Error("quotient_module: singular change of basis");
    projection = inv->row_range(w.cols(), n);
  }
  std::vector<Matrix> qa;
  qa.reserve(actions.size());
  for (const auto& g : actions) {
    if (w.cols() > 0 && q > 0 && !(projection * (g * w)).is_zero()) throw Error("quotient_module: relations are not invariant");
    qa.push_back(projection * (g * section));
  }
  return {Module(a, q, std::move(qa)), projection, section};
}

Quotient subquotient_module(const Algebra& a, const std::vector<Matrix>& actions, const Matrix& z, const Matrix& b) {
  const FieldSpec& fs = a.field();
  const int zc = static_cast<int>(z.cols());
  std::vector<Matrix> za;
  for (const auto& g : actions) {
    if (zc == 0) {
      za.emplace_back(fs, 0, 0);
      continue;
    }
    auto s = solve(z, g * z);
    if (!s) throw Error("subquotient_module: subspace is not invariant");
    za.push_back(*s);
  }
  Matrix bz(fs, zc, 0);
  if (b.cols() > 0 && zc > 0) {
    auto s = solve(z, b);
    if (!s) throw Error("subquotient_module: boundary not contained in cycles");
    bz = *s;
  }
  Quotient q = quotient_module(a, zc, za, bz);
  q.section = zc ? z * q.section : Matrix(fs, z.rows(), q.module.dim());
  return q;
}

Module free_module(const Algebra& a, int rank) {
  std::vector<Matrix> g;
  Matrix id = Matrix::identity(a.field(), rank);
  for (int k = 0; k < a.num_generators(); ++k) g.push_back(Matrix::kron(id, a.left_mult(a.generator(k))));
  return make_module_unchecked(a, rank * a.dim(), std::move(g));
}

Module zero_module(const Algebra& a) { return free_module(a, 0); }

Module restrict(const AlgebraMap& f, const Module& m) {
  if (!(m.algebra() == f.target())) throw AlgebraMismatch("restrict: module is not over the map's target");
  std::vector<Matrix> g;
  for (int k = 0; k < f.source().num_generators(); ++k) g.push_back(m.action(f.apply(f.source().generator(k))));
  return Module(f.source(), m.dim(), std::move(g));
}

Module extend(const AlgebraMap& f, const Module& m) {
  if (!(m.algebra() == f.source())) throw AlgebraMismatch("extend: module is not over the map's source");
  const Algebra& b = f.target();
  const FieldSpec& fs = b.field();
  Matrix im = Matrix::identity(fs, m.dim()), ib = Matrix::identity(fs, b.dim());
  Matrix rel(fs, m.dim() * b.dim(), 0);
  for (int g = 0; g < f.source().num_generators(); ++g) {
    Matrix t = Matrix::kron(m.generator_action(g), ib) - Matrix::kron(im, b.left_mult(f.apply(f.source().generator(g))));
    rel = Matrix::hstack(rel, t);
  }
  std::vector<Matrix> acts;
  for (int g = 0; g < b.num_generators(); ++g) acts.push_back(Matrix::kron(im, b.left_mult(b.generator(g))));
  return quotient_module(b, m.dim() * b.dim(), acts, rel).module;
}

namespace {

// Basis (columns, vec of X row-major) of {X : X ρ_m(g) = ρ_n(g) X for all g}.
Matrix hom_basis(const Module& m, const Module& n) {
  if (!(m.algebra() == n.algebra())) throw AlgebraMismatch("hom_space: modules over different algebras");
  const FieldSpec& fs = m.algebra().field();
  const int md = m.dim(), nd = n.dim(), u = md * nd;
  Matrix basis = Matrix::identity(fs, u);
  for (int g = 0; g < m.algebra().num_generators() && basis.cols() > 0; ++g) {
    const Matrix& a = m.generator_action(g);
    const Matrix& b = n.generator_action(g);
    Matrix eq(fs, u, u);
    for (int i = 0; i < nd; ++i)
      for (int k = 0; k < md; ++k) {
        const int row = i * md + k;
        for (int j = 0; j < md; ++j)
          if (sgn(a(j, k)) != 0) fs.add_to(eq(row, i * md + j), a(j, k));
        for (int l = 0; l < nd; ++l)
          if (sgn(b(i, l)) != 0) fs.sub_mul(eq(row, l * md + k), mpq_class(1), b(i, l));
      }
    Matrix reduced = eq * basis;
    basis = basis * kernel_basis(reduced);
  }
  return basis;
}

Matrix reshape(const Matrix& col, std::size_t j, int rows, int cols) {
  Matrix x(col.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) x(i, k) = col(i * cols + k, j);
  return x;
}

}  // namespace

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
  Matrix b = hom_basis(m, n);
  std::vector<ModuleMap> out;
  for (std::size_t j = 0; j < b.cols(); ++j) out.emplace_back(m, n, reshape(b, j, n.dim(), m.dim()));
  return out;
}

int hom_dim(const Module& m, const Module& n) { return static_cast<int>(hom_basis(m, n).cols()); }

Module tensor_over_middle(const Module& m, const Module& n, const Algebra& a, const Algebra& b, const Algebra& c) {
  if (!(m.algebra() == tensor_flat(a, b))) throw AlgebraMismatch("tensor_over_middle: left module is not over A⊗B");
  if (!(n.algebra() == tensor_flat(b, c))) throw AlgebraMismatch("tensor_over_middle: right module is not over B⊗C");
  const FieldSpec& fs = a.field();
  const int ga = a.num_generators(), gb = b.num_generators(), gc = c.num_generators();
  Matrix im = Matrix::identity(fs, m.dim()), in = Matrix::identity(fs, n.dim());
  Matrix rel(fs, m.dim() * n.dim(), 0);
  for (int h = 0; h < gb; ++h)
    rel = Matrix::hstack(rel, Matrix::kron(m.generator_action(ga + h), in) - Matrix::kron(im, n.generator_action(h)));
  std::vector<Matrix> acts;
  for (int g = 0; g < ga; ++g) acts.push_back(Matrix::kron(m.generator_action(g), in));
  for (int g = 0; g < gc; ++g) acts.push_back(Matrix::kron(im, n.generator_action(gb + g)));
  return quotient_module(tensor_flat(a, c), m.dim() * n.dim(), acts, rel).module;
}

// ---------------------------------------------------------------------------

RMatrix::RMatrix(Algebra r, int rows, int cols)
    : algebra_(std::move(r)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Vec(algebra_.dim())) {}

bool RMatrix::entry_zero(int i, int j) const {
  for (const auto& v : (*this)(i, j))
    if (sgn(v) != 0) return false;
  return true;
}

Matrix RMatrix::to_linear() const {
  const int d = algebra_.dim();
  Matrix out(algebra_.field(), rows_ * d, cols_ * d);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!entry_zero(i, j)) out.set_block(i * d, j * d, algebra_.left_mult((*this)(i, j)));
  return out;
}

Matrix RMatrix::act_on(const Module& m) const {
  const int d = m.dim();
  Matrix out(algebra_.field(), rows_ * d, cols_ * d);
  if (d == 0) return out;
  std::vector<Matrix> ba = m.basis_actions();
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Vec& e = (*this)(i, j);
      for (int k = 0; k < algebra_.dim(); ++k)
        if (sgn(e[k]) != 0) out.add_block(i * d, j * d, ba[k], e[k]);
    }
  return out;
}

RMatrix RMatrix::from_columns(const Algebra& r, int rows, const Matrix& lin) {
  const int d = r.dim();
  RMatrix out(r, rows, static_cast<int>(lin.cols()));
  for (int j = 0; j < out.cols_; ++j)
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < d; ++k) out(i, j)[k] = lin(i * d + k, j);
  return out;
}

// ---------------------------------------------------------------------------

Matrix module_generators(const Module& ambient, const Matrix& span, bool* minimal, const Matrix* already) {
  const Algebra& r = ambient.algebra();
  const FieldSpec& fs = r.field();
  const std::size_t n = span.rows();
  Matrix chosen(fs, n, 0);
  if (minimal) *minimal = true;
  if (span.cols() == 0) return chosen;
  // covered = rad·span + R·chosen; a new generator is drawn from a complement.
  Matrix covered(fs, n, 0);
  try {
    for (const Vec& x : radical_ideal_generators(r)) covered = Matrix::hstack(covered, ambient.action(x) * span);
    if (covered.cols() > 0) covered = column_basis(covered);
  } catch (const SmallCharacteristic&) {
    if (minimal) *minimal = false;
  }
  if (already && already->cols() > 0) covered = column_basis(Matrix::hstack(covered, *already));
  std::vector<Matrix> ba = ambient.basis_actions();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(1, 9);
  while (covered.cols() < span.cols()) {
    Matrix rest = span.select_columns(complement_columns(covered, span));
    Matrix v = rest.column(0);
    if (rest.cols() > 1) {
      // Random combinations generate a maximal cyclic piece when the algebra is not local.
      for (std::size_t j = 1; j < rest.cols(); ++j) v.add_scaled(fs.from_integer(dist(rng)), rest.column(j));
    }
    chosen = Matrix::hstack(chosen, v);
    for (const auto& b : ba) covered = Matrix::hstack(covered, b * v);
    covered = column_basis(covered);
  }
  return chosen;
}

FreeResolution free_resolution(const Module& m, int cutoff) {
  if (cutoff < 0) throw Error("free_resolution: cutoff must be nonnegative");
  const Algebra& r = m.algebra();
  const FieldSpec& fs = r.field();
  const int d = r.dim();
  FreeResolution res{r, m, {}, {}, Matrix(), cutoff, true};

  bool minimal = true;
  Matrix g0 = module_generators(m, Matrix::identity(fs, m.dim()), &minimal);
  res.minimal = minimal;
  const int r0 = static_cast<int>(g0.cols());
  res.ranks.push_back(r0);
  res.differentials.emplace_back();
  res.augmentation = Matrix(fs, m.dim(), r0 * d);
  {
    std::vector<Matrix> ba = m.basis_actions();
    for (int c = 0; c < r0; ++c) {
      Matrix gc = g0.column(c);
      for (int j = 0; j < d; ++j) res.augmentation.set_block(0, c * d + j, ba[j] * gc);
    }
  }

  std::vector<Matrix> linear{res.augmentation};
  for (int i = 1; i <= cutoff; ++i) {
    const int prev = res.ranks.back();
    Matrix k = kernel_basis(linear.back());
    Matrix gens = module_generators(free_module(r, prev), k, &minimal);
    res.minimal = res.minimal && minimal;
    RMatrix di = RMatrix::from_columns(r, prev, gens);
    res.ranks.push_back(di.cols());
    linear.push_back(di.to_linear());
    res.differentials.push_back(std::move(di));
  }

  // Exactness by ranks, and d∘d = 0.
  std::vector<std::size_t> rk;
  for (const auto& l : linear) rk.push_back(rank(l));
  if (static_cast<int>(rk[0]) != m.dim()) throw Error("free_resolution: augmentation is not surjective");
  for (int i = 0; i < cutoff; ++i) {
    if (static_cast<int>(rk[i] + rk[i + 1]) != res.ranks[i] * d) throw Error("free_resolution: not exact at degree " + std::to_string(i));
    if (linear[i].cols() > 0 && linear[i + 1].cols() > 0 && !(linear[i] * linear[i + 1]).is_zero())
      throw Error("free_resolution: d∘d != 0 at degree " + std::to_string(i));
  }
  return res;
}

TorResult tor(const Module& m, const Module& n, int cutoff) {
  if (!(m.algebra() == n.algebra())) throw AlgebraMismatch("tor: modules over different algebras");
  FreeResolution res = free_resolution(m, cutoff + 1);
  std::vector<std::size_t> rk(cutoff + 2, 0);
  for (int i = 1; i <= cutoff + 1; ++i) rk[i] = rank(res.differentials[i].act_on(n));
  TorResult out;
  out.dims.valid_through = cutoff;
  for (int i = 0; i <= cutoff; ++i) {
    long dim = static_cast<long>(res.ranks[i]) * n.dim() - static_cast<long>(rk[i]) - static_cast<long>(rk[i + 1]);
    out.dims.dims[i] = dim;
    out.degrees.push_back(i);
  }
  return out;
}

namespace {

// Rank of the action map R -> End(m).
int action_rank(const Module& m) {
  const FieldSpec& fs = m.algebra().field();
  const int d = m.dim();
  std::vector<Matrix> acts = m.basis_actions();
  Matrix big(fs, static_cast<std::size_t>(d) * d, acts.size());
  for (std::size_t i = 0; i < acts.size(); ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) big(static_cast<std::size_t>(r) * d + c, i) = acts[i](r, c);
  return big.empty() ? 0 : static_cast<int>(rank(big));
}

std::optional<std::string> invariant_mismatch(const Module& m, const Module& n) {
  const int am = action_rank(m), an = action_rank(n);
  if (am != an)
    return "annihilator codimension " + std::to_string(am) + " != " + std::to_string(an);
  for (int g = 0; g < m.algebra().num_generators(); ++g) {
    Matrix pm = m.generator_action(g), pn = n.generator_action(g);
    const Matrix gm = pm, gn = pn;
    for (int k = 1; k <= m.dim(); ++k) {
      const auto rm = rank(pm), rn = rank(pn);
      if (rm != rn)
        return "rank of generator " + std::to_string(g) + "^" + std::to_string(k) + ": " + std::to_string(rm) +
               " != " + std::to_string(rn);
      if (rm == 0) break;
      pm = pm * gm;
      pn = pn * gn;
    }
  }
  return std::nullopt;
}

}  // namespace

IsoResult module_iso(const Module& m, const Module& n, int retries, unsigned seed) {
  if (!(m.algebra() == n.algebra())) throw AlgebraMismatch("module_iso: modules over different algebras");
  IsoResult out;
  if (m.dim() != n.dim()) {
    out.verdict = IsoVerdict::No;
    out.certificate = "dim " + std::to_string(m.dim()) + " != " + std::to_string(n.dim());
    return out;
  }
  const FieldSpec& fs = m.algebra().field();
  if (m.dim() == 0) {
    out.verdict = IsoVerdict::Yes;
    out.witness = Matrix(fs, 0, 0);
    return out;
  }
  if (auto diff = invariant_mismatch(m, n)) {
    out.verdict = IsoVerdict::No;
    out.certificate = *diff;
    return out;
  }
  Matrix hmn = hom_basis(m, n);
  const int a = static_cast<int>(hmn.cols()), b = hom_dim(n, m);
  if (a == 0 || a != b) {
    out.verdict = IsoVerdict::No;
    out.certificate = "dim Hom(m,n) = " + std::to_string(a) + ", dim Hom(n,m) = " + std::to_string(b);
    return out;
  }
  const int em = hom_dim(m, m), en = hom_dim(n, n);
  if (em != en) {
    out.verdict = IsoVerdict::No;
    out.certificate = "dim End(m) = " + std::to_string(em) + ", dim End(n) = " + std::to_string(en);
    return out;
  }
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::uniform_int_distribution<int> dist(-(attempt + 2), attempt + 2);
    Matrix x(fs, n.dim(), m.dim());
    for (int j = 0; j < a; ++j) {
      mpq_class c = fs.from_integer(attempt == 0 && a == 1 ? 1 : dist(rng));
      if (sgn(c) != 0) x.add_scaled(c, reshape(hmn, j, n.dim(), m.dim()));
    }
    if (inverse(x)) {
      out.verdict = IsoVerdict::Yes;
      out.witness = x;
      return out;
    }
  }
  return out;
}

}  // namespace frobkit
