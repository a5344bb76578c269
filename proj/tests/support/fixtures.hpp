#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "oracle_bridge.hpp"
#include "stnf/pipeline/pipeline.hpp"

namespace stnf {

inline void PrintTo(const TimeInterval& i, std::ostream* os) { *os << i.to_string(); }
inline void PrintTo(const TimeValue& t, std::ostream* os) { *os << t.to_string(); }

}  // namespace stnf

namespace stnf::testing {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }
inline Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }
inline Triangle tri(Point a, Point b, Point c) {
  return Triangle{{std::move(a), std::move(b), std::move(c)}};
}
inline RationalFunction tvar() { return RationalFunction::variable(); }

inline TimeDepAffinity translation(RationalFunction dx, RationalFunction dy) {
  TimeDepAffinity f;
  f.b1 = std::move(dx);
  f.b2 = std::move(dy);
  return f;
}

// The two-triangle object: a static triangle and a triangle sliding right.
inline GeometricObject two_triangles() {
  GeometricObject g{"two_triangles", {}};
  g.atoms.push_back({tri(pt(-1, 0), pt(1, 0), pt(0, 2)), TimeInterval::closed(q(0), q(4)),
                     TimeDepAffinity::identity(), g.id});
  g.atoms.push_back({tri(pt(-3, 1), pt(-1, 1), pt(-2, 3)), TimeInterval::closed(q(0), q(4)),
                     translation(tvar(), Rational(0)), g.id});
  return g;
}

// A moving 2x1 rectangle under (x + 2t + 2, y - t - 1), split along either diagonal.
inline GeometricObject rectangle(bool other_diagonal) {
  GeometricObject g{"rectangle", {}};
  const TimeDepAffinity f = translation(RationalFunction(Rational(2)) * tvar() + Rational(2),
                                        Rational(-1) - tvar());
  const TimeInterval dom = TimeInterval::closed(q(0), q(4));
  if (!other_diagonal) {
    g.atoms.push_back({tri(pt(0, 0), pt(2, 0), pt(2, -1)), dom, f, g.id});
    g.atoms.push_back({tri(pt(0, 0), pt(0, -1), pt(2, -1)), dom, f, g.id});
  } else {
    g.atoms.push_back({tri(pt(0, 0), pt(2, 0), pt(0, -1)), dom, f, g.id});
    g.atoms.push_back({tri(pt(2, 0), pt(2, -1), pt(0, -1)), dom, f, g.id});
  }
  return g;
}

// Two atoms with integer corners, linear motion and a scaling that stays
// positive on the time domain [0, 2].
inline GeometricObject random_object(std::uint64_t seed, int atoms = 2) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<long> v(-2, 2);
  std::uniform_int_distribution<long> u(0, 2);
  GeometricObject g{"random" + std::to_string(seed), {}};
  while (static_cast<int>(g.atoms.size()) < atoms) {
    const Triangle t = tri(pt(c(rng), c(rng)), pt(c(rng), c(rng)), pt(c(rng), c(rng)));
    if (t.degeneracy() != Degeneracy::full) continue;
    TimeDepAffinity f;
    f.a11 = RationalFunction(Rational(1)) + RationalFunction(q(u(rng), 2)) * tvar();
    f.a12 = q(v(rng), 2);
    f.b1 = RationalFunction(Rational(v(rng))) * tvar();
    f.b2 = RationalFunction(Rational(v(rng))) * tvar();
    g.atoms.push_back({t, TimeInterval::closed(q(0), q(2)), f, g.id});
  }
  return g;
}

struct StaticAffinity {
  Rational a11, a12, a21, a22, b1, b2;
  Point operator()(const Point& p) const {
    return {a11 * p.x + a12 * p.y + b1, a21 * p.x + a22 * p.y + b2};
  }
  Triangle operator()(const Triangle& t) const { return tri((*this)(t.corners[0]), (*this)(t.corners[1]), (*this)(t.corners[2])); }
};

inline StaticAffinity random_affinity(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-5, 5);
  std::uniform_int_distribution<long> d(1, 3);
  while (true) {
    StaticAffinity a{q(c(rng), d(rng)), q(c(rng), d(rng)), q(c(rng), d(rng)),
                     q(c(rng), d(rng)), q(c(rng), d(rng)), q(c(rng), d(rng))};
    if (sgn(a.a11 * a.a22 - a.a12 * a.a21) != 0) return a;
  }
}

// alpha composed after every atom's transform.
inline GeometricObject apply(const StaticAffinity& a, GeometricObject g) {
  for (auto& o : g.atoms) {
    const TimeDepAffinity f = o.f;
    const auto mul = [](const Rational& s, const RationalFunction& r) { return RationalFunction(s) * r; };
    o.f.a11 = mul(a.a11, f.a11) + mul(a.a12, f.a21);
    o.f.a12 = mul(a.a11, f.a12) + mul(a.a12, f.a22);
    o.f.a21 = mul(a.a21, f.a11) + mul(a.a22, f.a21);
    o.f.a22 = mul(a.a21, f.a12) + mul(a.a22, f.a22);
    o.f.b1 = mul(a.a11, f.b1) + mul(a.a12, f.b2) + a.b1;
    o.f.b2 = mul(a.a21, f.b1) + mul(a.a22, f.b2) + a.b2;
  }
  return g;
}

// Snapshot of the normal-form atoms alive at t.
inline std::vector<Triangle> nf_snapshot(const NormalForm& nf, const Rational& t) {
  std::vector<Triangle> out;
  for (const auto& a : nf.atoms)
    if (auto s = snapshot_atomic(a, t)) out.push_back(canonical(*s));
  sort_canonical(out);
  return out;
}

// k rational times strictly inside each non-point partition element.
inline std::vector<Rational> sample_times(const NormalForm& nf, int k) {
  std::vector<Rational> out;
  for (const auto& d : nf.partition) {
    if (d.is_point()) {
      if (d.lo.is_exact()) out.push_back(d.lo.value());
      continue;
    }
    const Rational lo = d.lo.is_exact() ? d.lo.value() : refine(d.lo, q(1, 1 << 20)).second;
    const Rational hi = d.hi.is_exact() ? d.hi.value() : refine(d.hi, q(1, 1 << 20)).first;
    for (int i = 1; i <= k; ++i) out.push_back(lo + (hi - lo) * q(i, k + 1));
  }
  return out;
}

struct Soundness {
  int overlaps = 0;
  bool area_equal = true;
  int disagreements = 0;
};

// The normal form at t against the input snapshot, by the oracle.
inline Soundness check_snapshot(const GeometricObject& g, const NormalForm& nf, const Rational& t,
                                int points, std::uint64_t seed) {
  const auto in = to_oracle(snapshot_geometric(g, t));
  const auto out = to_oracle(nf_snapshot(nf, t));
  Soundness s;
  s.overlaps = static_cast<int>(oracle::overlapping_pairs(out).size());
  s.area_equal = oracle::area_sum(out) == oracle::union_area(in) && oracle::union_area(out) == oracle::union_area(in);
  s.disagreements = oracle::disagreements(oracle::membership_sample(in, out, points, seed));
  return s;
}

}  // namespace stnf::testing
