#include "frobkit/kernel.hpp"

#include <algorithm>
#include <map>

#include "frobkit/linalg.hpp"

namespace frobkit {
namespace {

int sat_add(int a, int b) { return (a == kUnbounded || b == kUnbounded) ? kUnbounded : a + b; }

ChainComplex with_valid(const ChainComplex& c, int valid) {
  std::vector<Matrix> d;
  for (int n = c.low(); n <= c.high(); ++n) d.push_back(n == c.low() ? Matrix() : c.differential(n));
  return ChainComplex(c.algebra(), c.low(), c.terms(), std::move(d), valid);
}

ChainComplex regroup(const ChainComplex& c, const Algebra& target, const std::vector<int>& perm) {
  std::vector<Module> terms;
  std::vector<Matrix> d;
  for (int n = c.low(); n <= c.high(); ++n) {
    const Module& t = c.terms()[n - c.low()];
    std::vector<Matrix> g;
    for (int p : perm) g.push_back(t.generator_action(p));
    terms.push_back(make_module_unchecked(target, t.dim(), std::move(g)));
    d.push_back(n == c.low() ? Matrix() : c.differential(n));
  }
  return ChainComplex(target, c.low(), std::move(terms), std::move(d), c.valid_through());
}

Module triagonal_module(const Algebra& a) { return restrict(multiplication_map(a, 3), regular_module(a)); }

// Body collapsed to its homology when that is concentrated in one degree.
ChainComplex collapse(const ChainComplex& c) {
  auto hs = homology(c);
  std::vector<std::pair<int, Module>> nz;
  for (auto& h : hs)
    if (h.second.dim() > 0) nz.push_back(h);
  if (nz.size() > 1) return c;
  if (nz.empty()) return ChainComplex(c.algebra(), c.low(), {zero_module(c.algebra())}, {Matrix()}, c.valid_through());
  return ChainComplex(c.algebra(), nz[0].first, {nz[0].second}, {Matrix()}, c.valid_through());
}

}  // namespace

Kernel make_kernel(Algebra source, Algebra target, ChainComplex body, std::string label) {
  if (!(body.algebra() == tensor_flat(source, target))) throw AlgebraMismatch("kernel body is not over source ⊗ target");
  return Kernel{std::move(source), std::move(target), std::move(body), std::move(label)};
}

GradedDims kernel_dims(const Kernel& k, int through) {
  if (through > k.valid_through())
    throw TruncationExhausted(through, k.valid_through(),
                              "kernel " + k.label + " is only valid through degree " + std::to_string(k.valid_through()));
  GradedDims h = homology_dims(k.body);
  GradedDims out;
  out.valid_through = through;
  for (int n = 0; n <= through; ++n) out.dims[n] = h.at(n);
  for (const auto& [d, v] : h.dims)
    if (d < 0 && v != 0) out.dims[d] = v;
  return out;
}

Module diagonal_module(const Algebra& a) { return restrict(multiplication_map(a, 2), regular_module(a)); }

Kernel identity_kernel(const Algebra& a) {
  return make_kernel(a, a, ChainComplex::concentrated(diagonal_module(a)), "cyl");
}

Kernel mult_kernel(const Algebra& a) {
  return make_kernel(tensor_flat(a, a), a, ChainComplex::concentrated(triagonal_module(a)), "pants");
}

Kernel comult_kernel(const Algebra& a) {
  return make_kernel(a, tensor_flat(a, a), ChainComplex::concentrated(triagonal_module(a)), "copants");
}

Kernel unit_kernel(const Algebra& a) {
  return make_kernel(Algebra(a.field()), a, ChainComplex::concentrated(regular_module(a)), "cup");
}

Kernel counit_kernel(const Algebra& a) {
  return make_kernel(a, Algebra(a.field()), ChainComplex::concentrated(regular_module(a)), "cap");
}

Kernel swap_kernel(const Algebra& a, const Algebra& b) {
  const FieldSpec& fs = a.field();
  Algebra ab = tensor_flat(a, b), ba = tensor_flat(b, a);
  Algebra body_alg = tensor_flat(ab, ba);
  Matrix ia = Matrix::identity(fs, a.dim()), ib = Matrix::identity(fs, b.dim());
  std::vector<Matrix> ga, gb;
  for (int g = 0; g < a.num_generators(); ++g) ga.push_back(Matrix::kron(a.left_mult(a.generator(g)), ib));
  for (int g = 0; g < b.num_generators(); ++g) gb.push_back(Matrix::kron(ia, b.left_mult(b.generator(g))));
  std::vector<Matrix> gens = ga;
  gens.insert(gens.end(), gb.begin(), gb.end());
  gens.insert(gens.end(), gb.begin(), gb.end());
  gens.insert(gens.end(), ga.begin(), ga.end());
  Module m(body_alg, a.dim() * b.dim(), std::move(gens));
  return make_kernel(ab, ba, ChainComplex::concentrated(m), "swap");
}

Kernel compose(const Kernel& k1, const Kernel& k2, int cutoff) {
  if (!(k1.target == k2.source)) throw AlgebraMismatch("compose: " + k1.label + " and " + k2.label + " do not share an end");
  const Algebra& a = k1.source;
  const Algebra& b = k1.target;
  const Algebra& c = k2.target;
  const std::string label = "(" + k1.label + " ; " + k2.label + ")";
  const int valid = std::min({cutoff, sat_add(k1.valid_through(), k2.body.low()), sat_add(k2.valid_through(), k1.body.low())});

  const bool single = k1.body.low() == k1.body.high() && k2.body.low() == k2.body.high();
  if (single) {
    const Module& m = k1.body.terms()[0];
    const Module& n = k2.body.terms()[0];
    const int na = static_cast<int>(a.factors().size()), nb = static_cast<int>(b.factors().size());
    bool flat = b.is_base_field() || m.dim() == 0 || n.dim() == 0;
    if (!flat) {
      TorResult t = tor(m.restrict_to_factors(na, na + nb), n.restrict_to_factors(0, nb), cutoff);
      flat = true;
      for (int i = 1; i <= cutoff; ++i)
        if (t.dims.at(i) != 0) flat = false;
    }
    if (flat) {
      Module body = tensor_over_middle(m, n, a, b, c);
      ChainComplex cc(tensor_flat(a, c), k1.body.low() + k2.body.low(), {body}, {Matrix()}, valid);
      return make_kernel(a, c, std::move(cc), label);
    }
  }
  Replacement rep = free_replacement(k1.body, cutoff);
  ChainComplex t = tensor_free_middle(rep.complex, k2.body, a, b, c);
  t = with_valid(t, std::min(valid, t.valid_through()));
  return make_kernel(a, c, collapse(t), label);
}

Kernel external(const Kernel& k1, const Kernel& k2) {
  if (!(k1.source.field() == k2.source.field())) throw FieldMismatch("external: kernels over different fields");
  ChainComplex t = tensor_over_field(k1.body, k2.body);
  const int ga = k1.source.num_generators(), gb = k1.target.num_generators();
  const int gc = k2.source.num_generators(), gd = k2.target.num_generators();
  // Old generator order A, B, C, D; new order A, C, B, D.
  std::vector<int> perm;
  for (int g = 0; g < ga; ++g) perm.push_back(g);
  for (int g = 0; g < gc; ++g) perm.push_back(ga + gb + g);
  for (int g = 0; g < gb; ++g) perm.push_back(ga + g);
  for (int g = 0; g < gd; ++g) perm.push_back(ga + gb + gc + g);
  Algebra src = tensor_flat(k1.source, k2.source), tgt = tensor_flat(k1.target, k2.target);
  return make_kernel(src, tgt, regroup(t, tensor_flat(src, tgt), perm), "(" + k1.label + " | " + k2.label + ")");
}

FrobeniusData frobenius_data(const Algebra& a) {
  return {a, mult_kernel(a), comult_kernel(a), unit_kernel(a), counit_kernel(a)};
}

Kernel corrupted_mult_kernel(const Algebra& a) {
  const FieldSpec& fs = a.field();
  Module good = triagonal_module(a);
  std::vector<Matrix> gens = good.generator_actions();
  const int g0 = 2 * a.num_generators();
  for (int g = g0; g < static_cast<int>(gens.size()); ++g) gens[g] = Matrix(fs, good.dim(), good.dim());
  Module bad(good.algebra(), good.dim(), std::move(gens));
  return make_kernel(tensor_flat(a, a), a, ChainComplex::concentrated(bad), "pants*");
}

bool FrobeniusReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& c) { return c.status == AxiomStatus::Pass; });
}

bool FrobeniusReport::any_fail() const {
  return std::any_of(axioms.begin(), axioms.end(), [](const AxiomCheck& c) { return c.status == AxiomStatus::Fail; });
}

AxiomCheck compare_kernels(const std::string& name, const Kernel& lhs, const Kernel& rhs, int cutoff) {
  AxiomCheck out;
  out.name = name;
  if (!(lhs.source == rhs.source) || !(lhs.target == rhs.target)) {
    out.status = AxiomStatus::Fail;
    out.detail = "kernels have different ends";
    return out;
  }
  out.lhs = kernel_dims(lhs, cutoff);
  out.rhs = kernel_dims(rhs, cutoff);
  for (const auto& [d, v] : out.lhs.dims)
    if (out.rhs.at(d) != v) {
      out.status = AxiomStatus::Fail;
      out.fail_degree = d;
      out.detail = "homology dimension " + std::to_string(v) + " vs " + std::to_string(out.rhs.at(d)) + " in degree " +
                   std::to_string(d);
      return out;
    }
  std::map<int, Module> hl, hr;
  for (auto& [d, m] : homology(lhs.body)) hl.emplace(d, m);
  for (auto& [d, m] : homology(rhs.body)) hr.emplace(d, m);
  bool unknown = false;
  for (const auto& [d, v] : out.lhs.dims) {
    if (v == 0) continue;
    IsoResult iso = module_iso(hl.at(d), hr.at(d));
    if (iso.verdict == IsoVerdict::Yes) {
      out.witnessed_degrees.push_back(d);
    } else if (iso.verdict == IsoVerdict::No) {
      out.status = AxiomStatus::Fail;
      out.fail_degree = d;
      out.detail = "homology modules differ in degree " + std::to_string(d) + ": " + iso.certificate;
      return out;
    } else {
      unknown = true;
      out.detail = "no isomorphism found in degree " + std::to_string(d);
    }
  }
  out.status = unknown ? AxiomStatus::Inconclusive : AxiomStatus::Pass;
  return out;
}

FrobeniusReport verify_frobenius(const FrobeniusData& fd, int cutoff) {
  const Algebra& a = fd.algebra;
  const Kernel id = identity_kernel(a);
  const Kernel sw = swap_kernel(a, a);
  const Kernel& mu = fd.mult;
  const Kernel& de = fd.comult;
  const Kernel& eta = fd.unit;
  const Kernel& eps = fd.counit;
  auto c = [&](const Kernel& x, const Kernel& y) { return compose(x, y, cutoff); };
  FrobeniusReport r;
  r.cutoff = cutoff;
  r.axioms.push_back(compare_kernels("left unit", c(external(eta, id), mu), id, cutoff));
  r.axioms.push_back(compare_kernels("right unit", c(external(id, eta), mu), id, cutoff));
  r.axioms.push_back(compare_kernels("associativity", c(external(mu, id), mu), c(external(id, mu), mu), cutoff));
  r.axioms.push_back(compare_kernels("left counit", c(de, external(eps, id)), id, cutoff));
  r.axioms.push_back(compare_kernels("right counit", c(de, external(id, eps)), id, cutoff));
  r.axioms.push_back(compare_kernels("coassociativity", c(de, external(de, id)), c(de, external(id, de)), cutoff));
  r.axioms.push_back(compare_kernels("commutativity", c(sw, mu), mu, cutoff));
  r.axioms.push_back(compare_kernels("cocommutativity", c(de, sw), de, cutoff));
  const Kernel mu_de = c(mu, de);
  r.axioms.push_back(compare_kernels("frobenius left", c(external(de, id), external(id, mu)), mu_de, cutoff));
  r.axioms.push_back(compare_kernels("frobenius right", c(external(id, de), external(mu, id)), mu_de, cutoff));
  return r;
}

FrobeniusReport verify_frobenius(const Algebra& a, int cutoff) { return verify_frobenius(frobenius_data(a), cutoff); }

GradedDims evaluate_closed_surface(const Algebra& a, int genus, int cutoff) {
  if (genus < 0) throw Error("genus must be nonnegative");
  if (cutoff < 0) throw Error("cutoff must be nonnegative");
  GradedDims out;
  out.valid_through = cutoff;
  if (genus == 0) {
    out.dims[0] = a.dim();
    for (int n = 1; n <= cutoff; ++n) out.dims[n] = 0;
    return out;
  }
  Module d = diagonal_module(a);
  FreeComplex p = from_resolution(free_resolution(d, cutoff + 1));
  FreeComplex t = p;
  for (int i = 1; i < genus; ++i) t = tensor_same(t, p);
  std::vector<int> dims;
  for (int r : t.ranks) dims.push_back(r * d.dim());
  GradedDims h = homology_dims(t.low, dims, t.base_change(d), std::min(t.valid_through, cutoff));
  for (int n = 0; n <= cutoff; ++n) out.dims[n] = h.at(n);
  return out;
}

GradedDims ext_dims(const Module& m, const Module& n, int cutoff) {
  if (!(m.algebra() == n.algebra())) throw AlgebraMismatch("ext_dims: modules over different algebras");
  const FieldSpec& fs = n.algebra().field();
  FreeResolution res = free_resolution(m, cutoff + 1);
  std::vector<Matrix> ba = n.basis_actions();
  const int nd = n.dim();
  std::vector<std::size_t> rk(cutoff + 3, 0);
  for (int i = 1; i <= cutoff + 1; ++i) {
    const RMatrix& d = res.differentials[i];
    Matrix cob(fs, d.cols() * nd, d.rows() * nd);
    for (int col = 0; col < d.cols(); ++col)
      for (int row = 0; row < d.rows(); ++row) {
        const Vec& e = d(row, col);
        for (int k = 0; k < n.algebra().dim(); ++k)
          if (sgn(e[k]) != 0) cob.add_block(col * nd, row * nd, ba[k], e[k]);
      }
    rk[i] = cob.empty() ? 0 : rank(cob);
  }
  GradedDims out;
  out.valid_through = cutoff;
  for (int i = 0; i <= cutoff; ++i)
    out.dims[i] = static_cast<long>(res.ranks[i]) * nd - static_cast<long>(rk[i]) - static_cast<long>(rk[i + 1]);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FieldPoint: return "FieldPoint";
    case Verdict::DirectSumOfPoints: return "DirectSumOfPoints";
    case Verdict::NonReducedOutOfScope: return "NonReducedOutOfScope";
    case Verdict::ObstructionVanishes: return "ObstructionVanishes";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

ObstructionReport no_go_check(const Algebra& a, int ext_cutoff) {
  ObstructionReport r;
  r.algebra = a;
  r.reduced = is_reduced(a);
  r.blocks_found = static_cast<int>(decompose(a).size());
  r.field = is_field(a).verdict;
  Algebra s = tensor_flat(a, a);
  r.hom_diag_to_free_dims = ext_dims(diagonal_module(a), regular_module(s), ext_cutoff);
  if (!r.reduced)
    r.verdict = Verdict::NonReducedOutOfScope;
  else if (r.field == FieldVerdict::True)
    r.verdict = Verdict::FieldPoint;
  else if (r.blocks_found >= 2)
    r.verdict = Verdict::DirectSumOfPoints;
  else if (r.hom_diag_to_free_dims.at(0) == 0)
    r.verdict = Verdict::ObstructionVanishes;
  else
    r.verdict = Verdict::Undetermined;
  return r;
}

}  // namespace frobkit
