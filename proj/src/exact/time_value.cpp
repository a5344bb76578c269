#include "stnf/exact/time_value.hpp"

#include <stdexcept>

namespace stnf {

namespace {

// Roots of square-free q in the open interval ]a, b[, where q(a), q(b) != 0
// and n = number of roots there.
void isolate(const SturmSequence& s, const Rational& a, const Rational& b, int n,
             std::vector<TimeValue>& out) {
  if (n == 0) return;
  const Polynomial& q = s.base();
  if (n == 1) {
    Rational lo = a;
    Rational hi = b;
    while (q.sign_at(lo) == 0 || q.sign_at(hi) == 0) {
      Rational mid = (lo + hi) / 2;
      if (q.sign_at(mid) == 0) {
        out.emplace_back(mid);
        return;
      }
      if (s.count_roots(lo, mid) == 1) hi = std::move(mid); else lo = std::move(mid);
    }
    out.push_back(TimeValue::algebraic(q, lo, hi));
    return;
  }
  Rational mid = (a + b) / 2;
  const bool root_mid = q.sign_at(mid) == 0;
  const int left = s.count_roots(a, mid) - (root_mid ? 1 : 0);
  isolate(s, a, mid, left, out);
  if (root_mid) out.emplace_back(mid);
  isolate(s, mid, b, n - left - (root_mid ? 1 : 0), out);
}

Polynomial negate_variable(const Polynomial& p) {
  std::vector<Rational> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

}  // namespace

TimeValue TimeValue::unchecked(Polynomial poly, Rational lo, Rational hi) {
  TimeValue tv;
  tv.poly_ = std::move(poly);
  tv.lo_ = std::move(lo);
  tv.hi_ = std::move(hi);
  return tv;
}

TimeValue TimeValue::algebraic(const Polynomial& poly, const Rational& lo, const Rational& hi) {
  if (poly.is_zero()) throw std::invalid_argument("algebraic time with zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty isolating interval");
  const Polynomial q = square_free_part(poly);
  if (q.sign_at(lo) == 0 || q.sign_at(hi) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  const SturmSequence s(q);
  if (s.count_roots(lo, hi) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root");
  const Rational lead = abs_of(q.leading());
  // Rational roots are multiples of 1/lead, and an open interval no wider
  // than that spacing holds at most one candidate.
  Rational a = lo;
  Rational b = hi;
  const int sa = q.sign_at(a);
  while (b - a > 1 / lead) {
    Rational mid = (a + b) / 2;
    const int sm = q.sign_at(mid);
    if (sm == 0) return TimeValue(mid);
    if (sm == sa) a = std::move(mid); else b = std::move(mid);
  }
  Rational cand = make_rational(Integer(floor_of(a * lead) + 1), lead.get_num());
  if (cand < b && q.sign_at(cand) == 0) return TimeValue(cand);
  return unchecked(q, a, b);
}

TimeValue TimeValue::bisected() const {
  if (is_exact()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  if (poly_.sign_at(mid) == poly_.sign_at(lo_)) return unchecked(poly_, mid, hi_);
  return unchecked(poly_, lo_, mid);
}

TimeValue TimeValue::narrowed(const Rational& eps) const {
  if (sgn(eps) <= 0) throw std::invalid_argument("refinement width must be positive");
  TimeValue tv = *this;
  while (!tv.is_exact() && tv.hi_ - tv.lo_ > eps) tv = tv.bisected();
  return tv;
}

TimeValue TimeValue::negated() const {
  if (is_exact()) return TimeValue(Rational(-value_));
  Polynomial q = negate_variable(poly_).primitive();
  return unchecked(std::move(q), -hi_, -lo_);
}

std::string TimeValue::to_string() const {
  if (is_exact()) return stnf::to_string(value_);
  return "root(" + poly_.to_string() + " in ]" + stnf::to_string(lo_) + ", " +
         stnf::to_string(hi_) + "[)";
}

std::vector<TimeValue> poly_real_roots(const Polynomial& p, const Rational& lo,
                                       const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("indeterminate roots");
  std::vector<TimeValue> out;
  if (p.degree() == 0 || hi < lo) return out;
  const Polynomial q = square_free_part(p);
  if (lo == hi) {
    if (q.sign_at(lo) == 0) out.emplace_back(lo);
    return out;
  }
  const SturmSequence s(q);
  const bool root_lo = q.sign_at(lo) == 0;
  const bool root_hi = q.sign_at(hi) == 0;
  if (root_lo) out.emplace_back(lo);
  const int inner = s.count_roots(lo, hi) - (root_hi ? 1 : 0);
  isolate(s, lo, hi, inner, out);
  if (root_hi) out.emplace_back(hi);
  return out;
}

std::pair<Rational, Rational> refine(const TimeValue& tv, const Rational& eps) {
  const TimeValue n = tv.narrowed(eps);
  return {n.lower(), n.upper()};
}

std::strong_ordering tv_compare(const TimeValue& a, const Rational& b) {
  if (a.is_exact()) return cmp(a.value(), b) <=> 0;
  if (b <= a.lo()) return std::strong_ordering::greater;
  if (b >= a.hi()) return std::strong_ordering::less;
  // a is irrational, so b is not a root; compare signs against the left end.
  const int sb = a.poly().sign_at(b);
  return sb == a.poly().sign_at(a.lo()) ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
}

std::strong_ordering tv_compare(const TimeValue& a, const TimeValue& b) {
  if (b.is_exact()) return tv_compare(a, b.value());
  if (a.is_exact()) return 0 <=> tv_compare(b, a.value());
  TimeValue x = a;
  TimeValue y = b;
  const Polynomial g = gcd(x.poly(), y.poly());
  const bool shared = g.degree() > 0 && vanishes_at(g, x) && vanishes_at(g, y);
  if (shared) {
    x = TimeValue::algebraic(g, x.lo(), x.hi());
    y = TimeValue::algebraic(g, y.lo(), y.hi());
  }
  const SturmSequence gs(shared ? square_free_part(g) : Polynomial::constant(1));
  while (true) {
    if (x.hi() <= y.lo()) return std::strong_ordering::less;
    if (y.hi() <= x.lo()) return std::strong_ordering::greater;
    if (shared) {
      const Rational lo = x.lo() < y.lo() ? x.lo() : y.lo();
      const Rational hi = x.hi() > y.hi() ? x.hi() : y.hi();
      // Endpoints of either isolating interval are not roots of g.
      if (gs.count_roots(lo, hi) == 1) return std::strong_ordering::equal;
    }
    x = x.bisected();
    y = y.bisected();
  }
}

bool vanishes_at(const Polynomial& p, const TimeValue& tv) {
  if (p.is_zero()) return true;
  if (tv.is_exact()) return p.sign_at(tv.value()) == 0;
  const Polynomial g = gcd(p, tv.poly());
  if (g.degree() <= 0) return false;
  return g.sign_at(tv.lo()) != g.sign_at(tv.hi());
}

int sign_at(const Polynomial& p, const TimeValue& tv) {
  if (tv.is_exact()) return p.sign_at(tv.value());
  if (vanishes_at(p, tv)) return 0;
  const Polynomial q = square_free_part(p);
  if (q.degree() <= 0) return sgn(p.leading());
  const SturmSequence s(q);
  TimeValue x = tv;
  while (q.sign_at(x.lo()) == 0 || s.count_roots(x.lo(), x.hi()) != 0) x = x.bisected();
  return p.sign_at(x.lo());
}

namespace {

// Simplest rational strictly inside ]a, b[ for 0 <= a < b, via a Stern-Brocot
// descent that only needs exact comparisons against a and b.
Rational simplest_positive(const TimeValue& a, const TimeValue& b) {
  Integer pl(0), ql(1), pr(1), qr(0);
  const auto at_or_below_a = [&](const Integer& p, const Integer& q) {
    return tv_compare(a, make_rational(p, q)) != std::strong_ordering::less;
  };
  const auto at_or_above_b = [&](const Integer& p, const Integer& q) {
    return tv_compare(b, make_rational(p, q)) != std::strong_ordering::greater;
  };
  while (true) {
    const Integer pm = pl + pr;
    const Integer qm = ql + qr;
    if (at_or_below_a(pm, qm)) {
      // Advance the left bound by the largest k with (pl+k pr)/(ql+k qr) <= a.
      Integer k(1);
      while (at_or_below_a(pl + 2 * k * pr, ql + 2 * k * qr)) k *= 2;
      Integer lo = k, hi = 2 * k;
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (at_or_below_a(pl + mid * pr, ql + mid * qr)) lo = mid; else hi = mid;
      }
      pl += lo * pr;
      ql += lo * qr;
    } else if (at_or_above_b(pm, qm)) {
      Integer k(1);
      while (at_or_above_b(pr + 2 * k * pl, qr + 2 * k * ql)) k *= 2;
      Integer lo = k, hi = 2 * k;
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (at_or_above_b(pr + mid * pl, qr + mid * ql)) lo = mid; else hi = mid;
      }
      pr += lo * pl;
      qr += lo * ql;
    } else {
      return make_rational(pm, qm);
    }
  }
}

}  // namespace

Rational simplest_between(const TimeValue& a, const TimeValue& b) {
  if (tv_compare(a, b) != std::strong_ordering::less)
    throw std::invalid_argument("simplest_between needs a < b");
  const auto a0 = tv_compare(a, Rational(0));
  const auto b0 = tv_compare(b, Rational(0));
  if (a0 == std::strong_ordering::less && b0 == std::strong_ordering::greater) return 0;
  if (b0 != std::strong_ordering::greater) return -simplest_positive(b.negated(), a.negated());
  return simplest_positive(a, b);
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() <= 0) return 1;
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_of(p.coefficients()[i] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace stnf
