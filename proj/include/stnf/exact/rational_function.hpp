#pragma once

#include <string>

#include "stnf/exact/polynomial.hpp"

namespace stnf {

// num/den in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(Polynomial::constant(c)), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Polynomial::constant(Rational(1))) {}
  // Throws std::domain_error when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  // Only meaningful when is_constant().
  Rational constant_value() const { return num_.coefficient(0); }

  // Throws std::domain_error("pole at τ") when the denominator vanishes.
  Rational eval(const Rational& t) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  // Throws std::domain_error when g is identically zero.
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace stnf
