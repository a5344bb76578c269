#include "stnf/exact/rational.hpp"

#include <stdexcept>

namespace stnf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)),
                       Integer(static_cast<long>(den)));
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return make_rational(Integer(text.substr(0, slash), 10),
                         Integer(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& r) { return sgn(r); }

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational abs_of(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

Rational pow2(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? make_rational(Integer(1), p) : Rational(p);
}

std::size_t hash_value(const Rational& r) {
  // Low limbs are enough to spread keys; equality is still exact.
  const auto limb = [](const mpz_srcptr z) -> std::size_t {
    return z->_mp_size == 0 ? 0 : static_cast<std::size_t>(z->_mp_d[0]) ^
                                      static_cast<std::size_t>(z->_mp_size);
  };
  const std::size_t h = limb(r.get_num_mpz_t());
  return h * 1000003u ^ limb(r.get_den_mpz_t());
}

}  // namespace stnf
