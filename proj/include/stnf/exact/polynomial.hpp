#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stnf/exact/rational.hpp"

namespace stnf {

// Dense univariate polynomial in t with rational coefficients, ascending
// degree order. The zero polynomial has no coefficients; otherwise the
// leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  // The monomial t.
  static Polynomial variable();
  // t - r
  static Polynomial linear_root(const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(eval(t)); }

  Polynomial derivative() const;
  Polynomial monic() const;
  // Scaled to integer coefficients with content one and positive leading
  // coefficient; same roots.
  Polynomial primitive() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
// p / gcd(p, p'), made primitive.
Polynomial square_free_part(const Polynomial& p);

// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  // Number of distinct roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  const Polynomial& base() const { return chain_.front(); }

 private:
  int variations(const Rational& x) const;
  std::vector<Polynomial> chain_;
};

// Lexicographic order on coefficient vectors (degree first). Only used to
// make containers deterministic.
std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

}  // namespace stnf
