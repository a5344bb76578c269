#include "stnf/exact/rational_function.hpp"

#include <stdexcept>

namespace stnf {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator polynomial");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

Rational RationalFunction::eval(const Rational& t) const {
  const Rational d = den_.eval(t);
  if (sgn(d) == 0) throw std::domain_error("pole at " + stnf::to_string(t));
  return num_.eval(t) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  if (f.den_ == g.den_) return RationalFunction(f.num_ + g.num_, f.den_);
  return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return f + (-g);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) return RationalFunction();
  if (f.is_polynomial() && g.is_polynomial())
    return RationalFunction(f.num_ * g.num_);
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw std::domain_error("division by identically zero function");
  return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace stnf
