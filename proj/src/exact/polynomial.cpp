#include "stnf/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stnf {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::linear_root(const Rational& r) {
  return Polynomial(std::vector<Rational>{Rational(-r), Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c(coeffs_);
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm(1);
  for (const auto& c : coeffs_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content(0);
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(coeffs_.back()) < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  std::vector<Rational> c(big.coeffs_);
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) c[i] += small.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  if (sgn(s) == 0) return {};
  std::vector<Rational> c(p.coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<Rational> rem(coeffs_);
  std::vector<Rational> quot(rem.size() - divisor.coeffs_.size() + 1, Rational(0));
  const Rational& lead = divisor.leading();
  const std::size_t dn = divisor.coeffs_.size();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational& top = rem[k + dn - 1];
    if (sgn(top) == 0) continue;
    Rational q = top / lead;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    quot[k] = std::move(q);
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs_of(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << stnf::to_string(mag);
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial quotient");
  return q;
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  const Polynomial g = gcd(p, p.derivative());
  return exact_quotient(p, g).primitive();
}

SturmSequence::SturmSequence(const Polynomial& p) {
  chain_.push_back(p);
  if (p.degree() <= 0) return;
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    Polynomial r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern while taming coefficients.
    Polynomial neg = -r;
    Polynomial prim = neg.primitive();
    if (sgn(prim.leading()) != sgn(neg.leading())) prim = -prim;
    chain_.push_back(std::move(prim));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.coefficients().size(); i-- > 0;) {
    const int c = cmp(a.coefficients()[i], b.coefficients()[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace stnf
