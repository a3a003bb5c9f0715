#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

/// Dense univariate polynomial, coefficients stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldSpec f, std::vector<mpq_class> coeffs);

  static Polynomial constant(FieldSpec f, long c);
  /// x - c
  static Polynomial linear_root(FieldSpec f, const mpq_class& c);

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0); }
  const mpq_class& lead() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  mpq_class eval(const mpq_class& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }

  /// (quotient, remainder)
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);
  /// (g, u, v) with u a + v b = g, g monic.
  static std::tuple<Polynomial, Polynomial, Polynomial> ext_gcd(const Polynomial& a, const Polynomial& b);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  FieldSpec field_;
  std::vector<mpq_class> c_;
};

enum class FactorSearch { FoundFactor, Irreducible, Unknown };

struct FactorResult {
  FactorSearch status = FactorSearch::Unknown;
  std::optional<Polynomial> factor;  ///< monic proper factor when status == FoundFactor
};

/// Looks for a proper monic factor of f. Irreducible is only reported when the
/// search was exhaustive: deg f <= degree_budget and every candidate degree
/// up to deg f / 2 was covered. Over Q this is Kronecker's method on the
/// primitive integer form; over F_p candidates are enumerated.
FactorResult find_factor(const Polynomial& f, int degree_budget = 6);

}  // namespace frobkit
