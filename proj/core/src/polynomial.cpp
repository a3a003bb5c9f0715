#include "frobkit/polynomial.hpp"

#include <cstdint>
#include <sstream>

namespace frobkit {

Polynomial::Polynomial(FieldSpec f, std::vector<mpq_class> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (auto& v : c_) field_.reduce(v);
  trim();
}

Polynomial Polynomial::constant(FieldSpec f, long c) { return Polynomial(f, {mpq_class(c)}); }

Polynomial Polynomial::linear_root(FieldSpec f, const mpq_class& c) {
  return Polynomial(f, {f.neg(f.from_rational(c)), mpq_class(1)});
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  mpq_class inv = field_.inv(c_.back());
  Polynomial r = *this;
  for (auto& v : r.c_) v = field_.mul(v, inv);
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.mul(c_[i], field_.from_integer(static_cast<long>(i))));
  return Polynomial(field_, d);
}

mpq_class Polynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Polynomial(field_, r);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Polynomial(field_, r);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial(field_, {});
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) field_.add_mul(r[i + j], c_[i], o.c_[j]);
  return Polynomial(field_, r);
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const FieldSpec& f = a.field_;
  std::vector<mpq_class> rem = a.c_;
  int db = b.degree();
  std::vector<mpq_class> q(a.degree() >= db ? a.degree() - db + 1 : 0);
  mpq_class inv = f.inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    mpq_class t = f.mul(rem[k], inv);
    if (sgn(t) == 0) continue;
    q[k - db] = t;
    for (int i = 0; i <= db; ++i) f.sub_mul(rem[k - db + i], t, b.c_[i]);
  }
  return {Polynomial(f, q), Polynomial(f, rem)};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::tuple<Polynomial, Polynomial, Polynomial> Polynomial::ext_gcd(const Polynomial& a, const Polynomial& b) {
  const FieldSpec& f = a.field_;
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = constant(f, 1), s1(f, {});
  Polynomial t0(f, {}), t1 = constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Polynomial s = s0 - q * s1;
    s0 = s1;
    s1 = s;
    Polynomial t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Polynomial scale(f, {f.inv(r0.lead())});
  return {r0 * scale, s0 * scale, t0 * scale};
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpq_class v = c_[i];
    if (sgn(v) == 0) continue;
    bool neg = field_.is_rational() && sgn(v) < 0;
    if (neg) v = -v;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool one = v == 1;
    if (!one || i == 0) os << v.get_str();
    if (i > 0) {
      if (!one) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

namespace {

constexpr std::size_t kMaxCandidates = 400000;

// Divisors of |n|, n != 0; empty if |n| is too large to enumerate.
std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  std::vector<mpz_class> out;
  if (a > mpz_class("1000000000000")) return out;
  std::uint64_t v = a.get_ui();
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    small.push_back(d);
    if (d != v / d) large.push_back(v / d);
  }
  for (auto d : small) out.emplace_back(static_cast<unsigned long>(d));
  for (auto it = large.rbegin(); it != large.rend(); ++it) out.emplace_back(static_cast<unsigned long>(*it));
  return out;
}

// Newton interpolation through (xs[i], ys[i]).
Polynomial interpolate(FieldSpec f, const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  std::size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  Polynomial p(f, {dd[n - 1]});
  for (std::size_t k = n - 1; k-- > 0;) p = p * Polynomial::linear_root(f, xs[k]) + Polynomial(f, {dd[k]});
  return p;
}

FactorResult search_rational(const Polynomial& f, int max_degree, bool exhaustive_possible) {
  const FieldSpec& fs = f.field();
  // Primitive integer form.
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : f.coeffs()) ic.push_back(c.get_num() * (l / c.get_den()));
  auto F = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
  };
  bool complete = exhaustive_possible;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<mpq_class> xs, ys;
    for (long t = 0; static_cast<int>(xs.size()) < d + 1 && t < 64; ++t) {
      for (long x : {t, -t}) {
        if (t == 0 && !xs.empty() && xs.back() == 0) continue;
        if (static_cast<int>(xs.size()) >= d + 1) break;
        mpq_class y = F(mpq_class(x));
        if (sgn(y) == 0) return {FactorSearch::FoundFactor, Polynomial::linear_root(fs, mpq_class(x))};
        xs.emplace_back(x);
        ys.push_back(y);
      }
    }
    std::vector<std::vector<mpz_class>> divs;
    std::size_t combos = 1;
    bool too_big = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto dv = positive_divisors(ys[i].get_num());
      if (dv.empty()) {
        too_big = true;
        break;
      }
      combos *= (i == 0 ? dv.size() : 2 * dv.size());
      if (combos > kMaxCandidates) {
        too_big = true;
        break;
      }
      divs.push_back(std::move(dv));
    }
    if (too_big) {
      complete = false;
      continue;
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    std::vector<int> sign(xs.size(), 1);
    while (true) {
      std::vector<mpq_class> vals(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) vals[i] = mpq_class(divs[i][idx[i]] * sign[i]);
      Polynomial g = interpolate(fs, xs, vals);
      if (g.degree() == d) {
        bool integral = true;
        for (const auto& c : g.coeffs())
          if (c.get_den() != 1) integral = false;
        if (integral && Polynomial::divmod(f, g).second.is_zero()) return {FactorSearch::FoundFactor, g.monic()};
      }
      // Odometer over (divisor, sign); the first point keeps a positive sign.
      std::size_t i = 0;
      for (; i < xs.size(); ++i) {
        if (i > 0 && sign[i] == 1) {
          sign[i] = -1;
          break;
        }
        if (i > 0) sign[i] = 1;
        if (++idx[i] < divs[i].size()) break;
        idx[i] = 0;
      }
      if (i == xs.size()) break;
    }
  }
  return {complete ? FactorSearch::Irreducible : FactorSearch::Unknown, std::nullopt};
}

FactorResult search_modular(const Polynomial& f, int max_degree, bool exhaustive_possible) {
  const FieldSpec& fs = f.field();
  const std::uint64_t p = fs.characteristic();
  bool complete = exhaustive_possible;
  for (int d = 1; d <= max_degree; ++d) {
    double count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<double>(p);
    if (count > static_cast<double>(kMaxCandidates)) {
      complete = false;
      break;
    }
    std::vector<std::uint64_t> digits(d, 0);
    while (true) {
      std::vector<mpq_class> c;
      for (int i = 0; i < d; ++i) c.emplace_back(static_cast<unsigned long>(digits[i]));
      c.emplace_back(1);
      Polynomial g(fs, c);
      if (Polynomial::divmod(f, g).second.is_zero()) return {FactorSearch::FoundFactor, g};
      int i = 0;
      for (; i < d; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
      if (i == d) break;
    }
  }
  return {complete ? FactorSearch::Irreducible : FactorSearch::Unknown, std::nullopt};
}

}  // namespace

FactorResult find_factor(const Polynomial& f, int degree_budget) {
  if (f.degree() < 1) throw Error("find_factor: constant polynomial");
  if (f.degree() == 1) return {FactorSearch::Irreducible, std::nullopt};
  const bool within = f.degree() <= degree_budget;
  const int max_d = within ? f.degree() / 2 : degree_budget / 2;
  Polynomial m = f.monic();
  return f.field().is_rational() ? search_rational(m, max_d, within) : search_modular(m, max_d, within);
}

}  // namespace frobkit
