#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "frobkit/error.hpp"

namespace frobkit {

/// The base field: either the rationals or a prime field F_p.
///
/// Raw field values are carried as mpq_class. Over F_p a value is always an
/// integer in [0, p); over Q it is a canonical fraction (GMP keeps lowest terms
/// with positive denominator).
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws Error unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

  // Raw arithmetic. Inputs must already be normalized for this field.
  mpq_class from_integer(long v) const;
  mpq_class from_rational(const mpq_class& v) const;
  void add_to(mpq_class& acc, const mpq_class& v) const;
  /// acc -= f * v
  void sub_mul(mpq_class& acc, const mpq_class& f, const mpq_class& v) const;
  /// acc += f * v
  void add_mul(mpq_class& acc, const mpq_class& f, const mpq_class& v) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  /// Throws Error on zero.
  mpq_class inv(const mpq_class& a) const;
  void reduce(mpq_class& v) const;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// A field element tagged with its field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec f, long v) : field_(f), value_(f.from_integer(v)) {}
  Scalar(FieldSpec f, const mpq_class& v) : field_(f), value_(f.from_rational(v)) {}

  /// Parses "p", "-p" or "p/q". Throws Error on malformed text.
  static Scalar parse(FieldSpec f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  const mpq_class& raw() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  std::string str() const { return value_.get_str(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && value_ == o.value_;
  }

 private:
  void check(const Scalar& o) const;
  FieldSpec field_;
  mpq_class value_;
};

}  // namespace frobkit
