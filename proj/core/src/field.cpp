#include "frobkit/field.hpp"

#include <cctype>

namespace frobkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

void FieldSpec::reduce(mpq_class& v) const {
  if (p_ == 0) return;
  mpz_class m(static_cast<unsigned long>(p_));
  if (v.get_den() != 1) {
    mpz_class den = v.get_den() % m;
    if (den == 0) throw Error("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class num = v.get_num() * inv;
    v = mpq_class(num);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_num_mpz_t(), m.get_mpz_t());
  v = mpq_class(r);
}

mpq_class FieldSpec::from_integer(long v) const {
  mpq_class r(v);
  reduce(r);
  return r;
}

mpq_class FieldSpec::from_rational(const mpq_class& v) const {
  mpq_class r(v);
  reduce(r);
  return r;
}

void FieldSpec::add_to(mpq_class& acc, const mpq_class& v) const {
  acc += v;
  if (p_ != 0 && acc >= static_cast<unsigned long>(p_)) acc -= static_cast<unsigned long>(p_);
}

void FieldSpec::sub_mul(mpq_class& acc, const mpq_class& f, const mpq_class& v) const {
  if (p_ == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), f.get_mpq_t(), v.get_mpq_t());
    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
    return;
  }
  mpz_class t = f.get_num() * v.get_num();
  mpz_class a = acc.get_num() - t;
  mpz_fdiv_r_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p_));
  acc = mpq_class(a);
}

void FieldSpec::add_mul(mpq_class& acc, const mpq_class& f, const mpq_class& v) const {
  if (p_ == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), f.get_mpq_t(), v.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
    return;
  }
  mpz_class a = acc.get_num() + f.get_num() * v.get_num();
  mpz_fdiv_r_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p_));
  acc = mpq_class(a);
}

mpq_class FieldSpec::add(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a + b;
  if (p_ != 0 && r >= static_cast<unsigned long>(p_)) r -= static_cast<unsigned long>(p_);
  return r;
}

mpq_class FieldSpec::sub(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a - b;
  if (p_ != 0 && r < 0) r += static_cast<unsigned long>(p_);
  return r;
}

mpq_class FieldSpec::mul(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p_));
  return mpq_class(r);
}

mpq_class FieldSpec::neg(const mpq_class& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return mpq_class(static_cast<unsigned long>(p_)) - a;
}

mpq_class FieldSpec::inv(const mpq_class& a) const {
  if (sgn(a) == 0) throw Error("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class m(static_cast<unsigned long>(p_)), r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return mpq_class(r);
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
  auto digits = [&](std::string& out) {
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    return !out.empty();
  };
  std::string num, den;
  if (!digits(num)) throw Error("malformed rational literal '" + text + "'");
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den)) throw Error("malformed rational literal '" + text + "'");
  }
  if (i != text.size()) throw Error("malformed rational literal '" + text + "'");
  mpz_class n(num), d(den.empty() ? std::string("1") : den);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  if (neg) q = -q;
  return Scalar(f, q);
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalars over " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.add(value_, o.value_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.sub(value_, o.value_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.mul(value_, o.value_);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.mul(value_, field_.inv(o.value_));
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.neg(value_);
  return r;
}

}  // namespace frobkit
