#include "frobkit/complex.hpp"

#include <algorithm>

#include "frobkit/linalg.hpp"

namespace frobkit {
namespace {

int sat_add(int a, int b) {
  if (a == kUnbounded || b == kUnbounded) return kUnbounded;
  return a + b;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

void add_scaled_vec(const FieldSpec& fs, Vec& acc, const mpq_class& f, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) fs.add_mul(acc[i], f, v[i]);
}

// Bidegree bookkeeping for total complexes.
struct Bigrading {
  int low = 0, top = -1;
  // For each total degree: list of (i, j, offset).
  std::vector<std::vector<std::tuple<int, int, int>>> blocks;
  std::vector<int> sizes;

  int offset(int n, int i) const {
    if (n < low || n > top) return -1;
    for (const auto& [bi, bj, off] : blocks[n - low])
      if (bi == i) return off;
    return -1;
  }
};

template <class SizeFn>
Bigrading bigrade(int xl, int xh, int yl, int yh, int top, SizeFn size) {
  Bigrading g;
  g.low = xl + yl;
  g.top = std::min(top, xh + yh);
  for (int n = g.low; n <= g.top; ++n) {
    std::vector<std::tuple<int, int, int>> bl;
    int off = 0;
    for (int i = xl; i <= xh; ++i) {
      int j = n - i;
      if (j < yl || j > yh) continue;
      bl.emplace_back(i, j, off);
      off += size(i, j);
    }
    g.blocks.push_back(std::move(bl));
    g.sizes.push_back(off);
  }
  return g;
}

int total_top(int xh, int yh, int xl, int yl, int xv, int yv) {
  int top = xh + yh;
  if (xv != kUnbounded) top = std::min(top, xh + yl);
  if (yv != kUnbounded) top = std::min(top, yh + xl);
  return top;
}

int total_valid(int xl, int yl, int xv, int yv) { return std::min(sat_add(xv, yl), sat_add(yv, xl)); }

}  // namespace

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(Algebra a, int low, std::vector<Module> terms, std::vector<Matrix> diffs, int valid_through)
    : algebra_(std::move(a)), low_(low), terms_(std::move(terms)), valid_through_(valid_through) {
  const FieldSpec& fs = algebra_.field();
  if (diffs.size() != terms_.size()) throw DimensionMismatch("chain complex needs one differential slot per term");
  diffs_.resize(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].algebra() == algebra_)) throw AlgebraMismatch("chain complex term over a different algebra");
    if (i == 0) {
      diffs_[0] = Matrix(fs, 0, terms_[0].dim());
      continue;
    }
    const Matrix& d = diffs[i];
    if (static_cast<int>(d.rows()) != terms_[i - 1].dim() || static_cast<int>(d.cols()) != terms_[i].dim())
      throw DimensionMismatch("differential has wrong shape at degree " + std::to_string(low + static_cast<int>(i)));
    for (int g = 0; g < algebra_.num_generators(); ++g)
      if (!(d * terms_[i].generator_action(g) == terms_[i - 1].generator_action(g) * d))
        throw InvalidModule("differential is not a module map at degree " + std::to_string(low + static_cast<int>(i)));
    if (i >= 2 && d.cols() > 0 && diffs_[i - 1].rows() > 0 && !(diffs_[i - 1] * d).is_zero())
      throw Error("d∘d != 0 at degree " + std::to_string(low + static_cast<int>(i)));
    diffs_[i] = d;
  }
}

ChainComplex ChainComplex::concentrated(const Module& m, int degree) {
  return ChainComplex(m.algebra(), degree, {m}, {Matrix()});
}

Module ChainComplex::term(int degree) const {
  if (degree < low_ || degree > high()) return zero_module(algebra_);
  return terms_[degree - low_];
}

Matrix ChainComplex::differential(int degree) const {
  const FieldSpec& fs = algebra_.field();
  if (degree <= low_ || degree > high()) return Matrix(fs, term(degree - 1).dim(), term(degree).dim());
  return diffs_[degree - low_];
}

// ---------------------------------------------------------------------------

int FreeComplex::rank(int degree) const {
  if (degree < low || degree > high()) return 0;
  return ranks[degree - low];
}

void FreeComplex::check() const {
  if (diffs.size() != ranks.size()) throw DimensionMismatch("free complex needs one differential slot per term");
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    if (diffs[i].rows() != ranks[i - 1] || diffs[i].cols() != ranks[i])
      throw DimensionMismatch("free complex differential has wrong shape");
    if (i >= 2 && ranks[i] > 0 && ranks[i - 2] > 0 && !(diffs[i - 1].to_linear() * diffs[i].to_linear()).is_zero())
      throw Error("d∘d != 0 in free complex at degree " + std::to_string(low + static_cast<int>(i)));
  }
}

ChainComplex FreeComplex::to_chain_complex() const {
  std::vector<Module> t;
  std::vector<Matrix> d;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    t.push_back(free_module(algebra, ranks[i]));
    d.push_back(i == 0 ? Matrix() : diffs[i].to_linear());
  }
  return ChainComplex(algebra, low, std::move(t), std::move(d), valid_through);
}

std::vector<Matrix> FreeComplex::base_change(const Module& n) const {
  if (!(n.algebra() == algebra)) throw AlgebraMismatch("base_change: module over a different algebra");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    out.push_back(i == 0 ? Matrix(algebra.field(), 0, ranks[0] * n.dim()) : diffs[i].act_on(n));
  return out;
}

FreeComplex from_resolution(const FreeResolution& r) {
  FreeComplex x;
  x.algebra = r.algebra;
  x.low = 0;
  x.ranks = r.ranks;
  x.diffs = r.differentials;
  if (!x.diffs.empty()) x.diffs[0] = RMatrix(r.algebra, 0, r.ranks[0]);
  x.valid_through = r.cutoff - 1;
  return x;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, Module>> homology(const ChainComplex& c) {
  std::vector<std::pair<int, Module>> out;
  const int top = std::min(c.high(), c.valid_through());
  for (int n = c.low(); n <= top; ++n) {
    Module t = c.term(n);
    Matrix d = c.differential(n);
    Matrix z = d.rows() == 0 ? Matrix::identity(c.algebra().field(), t.dim()) : kernel_basis(d);
    Matrix up = c.differential(n + 1);
    Matrix b = up.cols() ? column_basis(up) : Matrix(c.algebra().field(), t.dim(), 0);
    out.emplace_back(n, subquotient_module(c.algebra(), t.generator_actions(), z, b).module);
  }
  return out;
}

GradedDims homology_dims(int low, const std::vector<int>& dims, const std::vector<Matrix>& boundaries, int valid_through) {
  GradedDims g;
  const int high = low + static_cast<int>(dims.size()) - 1;
  const int top = std::min(high, valid_through);
  g.valid_through = valid_through == kUnbounded ? high : top;
  std::vector<std::size_t> rk(dims.size() + 1, 0);
  for (std::size_t i = 1; i < dims.size() && low + static_cast<int>(i) <= top + 1; ++i)
    rk[i] = boundaries[i].empty() ? 0 : rank(boundaries[i]);
  for (int n = low; n <= top; ++n) {
    std::size_t i = n - low;
    g.dims[n] = dims[i] - static_cast<long>(rk[i]) - static_cast<long>(rk[i + 1]);
  }
  return g;
}

GradedDims homology_dims(const ChainComplex& c) {
  std::vector<int> dims;
  std::vector<Matrix> b;
  for (int n = c.low(); n <= c.high(); ++n) {
    dims.push_back(c.term(n).dim());
    b.push_back(c.differential(n));
  }
  return homology_dims(c.low(), dims, b, c.valid_through());
}

// ---------------------------------------------------------------------------

Replacement free_replacement(const ChainComplex& c, int cutoff) {
  const Algebra& r = c.algebra();
  const FieldSpec& fs = r.field();
  const int dr = r.dim();
  const int low = c.empty() ? 0 : c.low();
  const int top = cutoff + 1;
  Replacement out;
  FreeComplex& p = out.complex;
  p.algebra = r;
  p.low = low;
  p.valid_through = std::min(cutoff, c.valid_through());

  Matrix prev_lin;   // linear d_P(n-1): P_{n-1} -> P_{n-2}
  Matrix prev_f;     // f_{n-1}: P_{n-1} -> C_{n-1}
  int prev_rank = 0;
  for (int n = low; n <= top; ++n) {
    Module cn = c.term(n);
    const int pdim = prev_rank * dr, cdim = cn.dim();
    // Ambient P_{n-1} ⊕ C_n.
    std::vector<Matrix> acts;
    for (int g = 0; g < r.num_generators(); ++g) {
      Matrix m(fs, pdim + cdim, pdim + cdim);
      if (pdim) m.set_block(0, 0, Matrix::kron(Matrix::identity(fs, prev_rank), r.left_mult(r.generator(g))));
      if (cdim) m.set_block(pdim, pdim, cn.generator_action(g));
      acts.push_back(std::move(m));
    }
    Module ambient = make_module_unchecked(r, pdim + cdim, std::move(acts));
    // Cone cycles: d_P p = 0 and f(p) = d_C c.
    const int rows_p = n - 1 > low ? static_cast<int>(prev_lin.rows()) : 0;
    const int rows_c = c.term(n - 1).dim();
    Matrix cyc(fs, rows_p + rows_c, pdim + cdim);
    if (rows_p && pdim) cyc.set_block(0, 0, prev_lin);
    if (rows_c && pdim) cyc.set_block(rows_p, 0, prev_f);
    if (rows_c && cdim) cyc.add_block(rows_p, pdim, c.differential(n), mpq_class(-1));
    Matrix z = cyc.rows() == 0 ? Matrix::identity(fs, pdim + cdim) : kernel_basis(cyc);
    Matrix dc_up = c.differential(n + 1);
    Matrix fixed(fs, pdim + cdim, dc_up.cols());
    if (cdim && dc_up.cols()) fixed.set_block(pdim, 0, dc_up);
    bool minimal = true;
    Matrix gens = module_generators(ambient, z, &minimal, &fixed);
    const int rn = static_cast<int>(gens.cols());

    RMatrix dn = RMatrix::from_columns(r, prev_rank, gens.row_range(0, pdim));
    Matrix fn(fs, cdim, rn * dr);
    if (cdim) {
      std::vector<Matrix> ba = cn.basis_actions();
      Matrix cpart = gens.row_range(pdim, pdim + cdim);
      for (int g = 0; g < rn; ++g) {
        Matrix col = cpart.column(g);
        for (int j = 0; j < dr; ++j) fn.set_block(0, g * dr + j, ba[j] * col);
      }
    }
    p.ranks.push_back(rn);
    p.diffs.push_back(n == low ? RMatrix(r, 0, rn) : dn);
    out.comparison.push_back(fn);
    prev_lin = n == low ? Matrix(fs, 0, rn * dr) : dn.to_linear();
    prev_f = fn;
    prev_rank = rn;
  }
  p.check();
  // Chain map check: d_C f_n = f_{n-1} d_P.
  for (int n = low + 1; n <= top; ++n) {
    const Matrix& fn = out.comparison[n - low];
    const Matrix& fm = out.comparison[n - low - 1];
    Matrix dc = c.differential(n);
    if (fn.rows() == 0 || fm.rows() == 0) continue;
    if (!(dc * fn == fm * p.diffs[n - low].to_linear())) throw Error("free_replacement: comparison is not a chain map");
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeComplex derived_tensor_middle(const FreeComplex& x, const FreeComplex& y, const Algebra& a, const Algebra& b,
                                  const Algebra& c) {
  if (!(x.algebra == tensor_flat(a, b))) throw AlgebraMismatch("derived_tensor_middle: left complex is not over A⊗B");
  if (!(y.algebra == tensor_flat(b, c))) throw AlgebraMismatch("derived_tensor_middle: right complex is not over B⊗C");
  const FieldSpec& fs = a.field();
  const int da = a.dim(), db = b.dim(), dc = c.dim();
  const Algebra ab = x.algebra, bc = y.algebra, ac = tensor_flat(a, c);
  const Vec ua = a.unit(), uc = c.unit();

  const int top = total_top(x.high(), y.high(), x.low, y.low, x.valid_through, y.valid_through);
  Bigrading g = bigrade(x.low, x.high(), y.low, y.high(), top, [&](int i, int j) { return x.rank(i) * y.rank(j) * db; });

  // 1_A ⊗ b_k in A⊗B and b_k ⊗ 1_C in B⊗C.
  std::vector<Vec> b_in_ab, b_in_bc, a_in_ac, c_in_ac;
  for (int k = 0; k < db; ++k) {
    b_in_ab.push_back(kron_vec(ua, b.basis_vector(k)));
    b_in_bc.push_back(kron_vec(b.basis_vector(k), uc));
  }
  for (int al = 0; al < da; ++al) a_in_ac.push_back(kron_vec(a.basis_vector(al), uc));
  for (int ga = 0; ga < dc; ++ga) c_in_ac.push_back(kron_vec(ua, c.basis_vector(ga)));

  FreeComplex out;
  out.algebra = ac;
  out.low = g.low;
  out.valid_through = total_valid(x.low, y.low, x.valid_through, y.valid_through);
  for (int n = g.low; n <= g.top; ++n) {
    out.ranks.push_back(g.sizes[n - g.low]);
    RMatrix d(ac, n > g.low ? g.sizes[n - 1 - g.low] : 0, g.sizes[n - g.low]);
    if (n > g.low) {
      for (const auto& [i, j, off] : g.blocks[n - g.low]) {
        const int r = x.rank(i), s = y.rank(j);
        const int row_x = g.offset(n - 1, i - 1), row_y = g.offset(n - 1, i);
        const mpq_class sign = fs.from_integer(i % 2 == 0 ? 1 : -1);
        for (int u = 0; u < r; ++u)
          for (int v = 0; v < s; ++v)
            for (int k = 0; k < db; ++k) {
              const int col = off + (u * s + v) * db + k;
              if (row_x >= 0 && i > x.low)
                for (int u2 = 0; u2 < x.rank(i - 1); ++u2) {
                  if (x.diffs[i - x.low].entry_zero(u2, u)) continue;
                  Vec w = ab.multiply(x.diffs[i - x.low](u2, u), b_in_ab[k]);
                  for (int al = 0; al < da; ++al)
                    for (int be = 0; be < db; ++be) {
                      const mpq_class& cf = w[al * db + be];
                      if (sgn(cf) == 0) continue;
                      add_scaled_vec(fs, d(row_x + (u2 * s + v) * db + be, col), cf, a_in_ac[al]);
                    }
                }
              if (row_y >= 0 && j > y.low)
                for (int v2 = 0; v2 < y.rank(j - 1); ++v2) {
                  if (y.diffs[j - y.low].entry_zero(v2, v)) continue;
                  Vec w = bc.multiply(b_in_bc[k], y.diffs[j - y.low](v2, v));
                  const int s2 = y.rank(j - 1);
                  for (int be = 0; be < db; ++be)
                    for (int ga = 0; ga < dc; ++ga) {
                      const mpq_class& cf = w[be * dc + ga];
                      if (sgn(cf) == 0) continue;
                      add_scaled_vec(fs, d(row_y + (u * s2 + v2) * db + be, col), fs.mul(sign, cf), c_in_ac[ga]);
                    }
                }
            }
      }
    }
    out.diffs.push_back(std::move(d));
  }
  out.check();
  return out;
}

ChainComplex tensor_free_middle(const FreeComplex& x, const ChainComplex& dcx, const Algebra& a, const Algebra& b,
                                const Algebra& c) {
  if (!(x.algebra == tensor_flat(a, b))) throw AlgebraMismatch("tensor_free_middle: left complex is not over A⊗B");
  if (!(dcx.algebra() == tensor_flat(b, c))) throw AlgebraMismatch("tensor_free_middle: right complex is not over B⊗C");
  const FieldSpec& fs = a.field();
  const int da = a.dim(), db = b.dim();
  const int gb = b.num_generators();
  const Algebra ac = tensor_flat(a, c);
  const Vec uc = c.unit();

  const int top = total_top(x.high(), dcx.high(), x.low, dcx.low(), x.valid_through, dcx.valid_through());
  auto dimd = [&](int j) { return dcx.term(j).dim(); };
  Bigrading g = bigrade(x.low, x.high(), dcx.low(), dcx.high(), top, [&](int i, int j) { return x.rank(i) * da * dimd(j); });

  std::vector<Matrix> la;
  for (int al = 0; al < da; ++al) la.push_back(a.left_mult_basis(al));
  std::vector<Matrix> la_gen;
  for (int q = 0; q < a.num_generators(); ++q) la_gen.push_back(a.left_mult(a.generator(q)));
  // Action of b_β ⊗ 1 on each D_j.
  std::vector<std::vector<Matrix>> bact(dcx.high() - dcx.low() + 1);
  for (int j = dcx.low(); j <= dcx.high(); ++j) {
    Module dj = dcx.term(j);
    std::vector<Matrix> ba = dj.basis_actions();
    for (int be = 0; be < db; ++be) {
      Matrix m(fs, dj.dim(), dj.dim());
      for (int ga = 0; ga < c.dim(); ++ga)
        if (sgn(uc[ga]) != 0) m.add_scaled(uc[ga], ba[be * c.dim() + ga]);
      bact[j - dcx.low()].push_back(std::move(m));
    }
  }

  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int n = g.low; n <= g.top; ++n) {
    const int size = g.sizes[n - g.low];
    std::vector<Matrix> acts(ac.num_generators(), Matrix(fs, size, size));
    for (const auto& [i, j, off] : g.blocks[n - g.low]) {
      Module dj = dcx.term(j);
      const int r = x.rank(i), bs = da * dj.dim();
      Matrix idd = Matrix::identity(fs, dj.dim());
      Matrix ida = Matrix::identity(fs, da);
      for (int u = 0; u < r; ++u) {
        for (int q = 0; q < a.num_generators(); ++q) acts[q].set_block(off + u * bs, off + u * bs, Matrix::kron(la_gen[q], idd));
        for (int q = 0; q < c.num_generators(); ++q)
          acts[a.num_generators() + q].set_block(off + u * bs, off + u * bs, Matrix::kron(ida, dj.generator_action(gb + q)));
      }
    }
    terms.push_back(make_module_unchecked(ac, size, std::move(acts)));

    Matrix d(fs, n > g.low ? g.sizes[n - 1 - g.low] : 0, size);
    if (n > g.low) {
      for (const auto& [i, j, off] : g.blocks[n - g.low]) {
        const int r = x.rank(i), dd = dimd(j), bs = da * dd;
        const int row_x = g.offset(n - 1, i - 1), row_y = g.offset(n - 1, i);
        if (row_x >= 0 && i > x.low) {
          const RMatrix& xd = x.diffs[i - x.low];
          for (int u = 0; u < r; ++u)
            for (int u2 = 0; u2 < x.rank(i - 1); ++u2) {
              if (xd.entry_zero(u2, u)) continue;
              const Vec& e = xd(u2, u);
              for (int al = 0; al < da; ++al)
                for (int be = 0; be < db; ++be) {
                  const mpq_class& cf = e[al * db + be];
                  if (sgn(cf) == 0) continue;
                  d.add_block(row_x + u2 * bs, off + u * bs, Matrix::kron(la[al], bact[j - dcx.low()][be]), cf);
                }
            }
        }
        if (row_y >= 0 && j > dcx.low()) {
          const mpq_class sign = (i % 2 == 0) ? 1 : -1;
          Matrix blk = Matrix::kron(Matrix::identity(fs, da), dcx.differential(j));
          const int bs2 = da * dimd(j - 1);
          for (int u = 0; u < r; ++u) d.add_block(row_y + u * bs2, off + u * bs, blk, fs.from_rational(sign));
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(ac, g.low, std::move(terms), std::move(diffs),
                      total_valid(x.low, dcx.low(), x.valid_through, dcx.valid_through()));
}

FreeComplex tensor_same(const FreeComplex& x, const FreeComplex& y) {
  if (!(x.algebra == y.algebra)) throw AlgebraMismatch("tensor_same: complexes over different algebras");
  const FieldSpec& fs = x.algebra.field();
  const int top = total_top(x.high(), y.high(), x.low, y.low, x.valid_through, y.valid_through);
  Bigrading g = bigrade(x.low, x.high(), y.low, y.high(), top, [&](int i, int j) { return x.rank(i) * y.rank(j); });
  FreeComplex out;
  out.algebra = x.algebra;
  out.low = g.low;
  out.valid_through = total_valid(x.low, y.low, x.valid_through, y.valid_through);
  for (int n = g.low; n <= g.top; ++n) {
    out.ranks.push_back(g.sizes[n - g.low]);
    RMatrix d(x.algebra, n > g.low ? g.sizes[n - 1 - g.low] : 0, g.sizes[n - g.low]);
    if (n > g.low) {
      for (const auto& [i, j, off] : g.blocks[n - g.low]) {
        const int r = x.rank(i), s = y.rank(j);
        const int row_x = g.offset(n - 1, i - 1), row_y = g.offset(n - 1, i);
        const mpq_class sign = (i % 2 == 0) ? 1 : -1;
        for (int u = 0; u < r; ++u)
          for (int v = 0; v < s; ++v) {
            const int col = off + u * s + v;
            if (row_x >= 0 && i > x.low)
              for (int u2 = 0; u2 < x.rank(i - 1); ++u2)
                if (!x.diffs[i - x.low].entry_zero(u2, u))
                  add_scaled_vec(fs, d(row_x + u2 * s + v, col), mpq_class(1), x.diffs[i - x.low](u2, u));
            if (row_y >= 0 && j > y.low) {
              const int s2 = y.rank(j - 1);
              for (int v2 = 0; v2 < s2; ++v2)
                if (!y.diffs[j - y.low].entry_zero(v2, v))
                  add_scaled_vec(fs, d(row_y + u * s2 + v2, col), fs.from_rational(sign), y.diffs[j - y.low](v2, v));
            }
          }
      }
    }
    out.diffs.push_back(std::move(d));
  }
  out.check();
  return out;
}

ChainComplex tensor_over_field(const ChainComplex& x, const ChainComplex& y) {
  const Algebra pq = tensor_flat(x.algebra(), y.algebra());
  const FieldSpec& fs = pq.field();
  const int gx = x.algebra().num_generators(), gy = y.algebra().num_generators();
  const int top = total_top(x.high(), y.high(), x.low(), y.low(), x.valid_through(), y.valid_through());
  Bigrading g = bigrade(x.low(), x.high(), y.low(), y.high(), top, [&](int i, int j) { return x.term(i).dim() * y.term(j).dim(); });
  std::vector<Module> terms;
  std::vector<Matrix> diffs;
  for (int n = g.low; n <= g.top; ++n) {
    const int size = g.sizes[n - g.low];
    std::vector<Matrix> acts(gx + gy, Matrix(fs, size, size));
    for (const auto& [i, j, off] : g.blocks[n - g.low]) {
      Module xi = x.term(i), yj = y.term(j);
      Matrix ix = Matrix::identity(fs, xi.dim()), iy = Matrix::identity(fs, yj.dim());
      for (int q = 0; q < gx; ++q) acts[q].set_block(off, off, Matrix::kron(xi.generator_action(q), iy));
      for (int q = 0; q < gy; ++q) acts[gx + q].set_block(off, off, Matrix::kron(ix, yj.generator_action(q)));
    }
    terms.push_back(make_module_unchecked(pq, size, std::move(acts)));
    Matrix d(fs, n > g.low ? g.sizes[n - 1 - g.low] : 0, size);
    if (n > g.low) {
      for (const auto& [i, j, off] : g.blocks[n - g.low]) {
        const int row_x = g.offset(n - 1, i - 1), row_y = g.offset(n - 1, i);
        Matrix ix = Matrix::identity(fs, x.term(i).dim()), iy = Matrix::identity(fs, y.term(j).dim());
        if (row_x >= 0) d.add_block(row_x, off, Matrix::kron(x.differential(i), iy), mpq_class(1));
        if (row_y >= 0) d.add_block(row_y, off, Matrix::kron(ix, y.differential(j)), fs.from_integer(i % 2 == 0 ? 1 : -1));
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(pq, g.low, std::move(terms), std::move(diffs),
                      total_valid(x.low(), y.low(), x.valid_through(), y.valid_through()));
}

}  // namespace frobkit
