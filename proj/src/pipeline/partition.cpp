#include <algorithm>
#include <map>
#include <stdexcept>

#include "stnf/pipeline/pipeline.hpp"

namespace stnf {

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return exact_quotient(a, gcd(a, b)) * b;
}

Polynomial cleared(const RationalFunction& f, const Polynomial& common) {
  return exact_quotient(common, f.den()) * f.num();
}

// a*p.x + b*p.y - c with every denominator cleared.
Polynomial incidence(const MovingCarrier& l, const MovingPoint& p) {
  const Polynomial d = lcm(p.fx.den(), p.fy.den());
  return l.pa * cleared(p.fx, d) + l.pb * cleared(p.fy, d) - l.pc * d;
}

std::vector<TimeValue> coincidences(const MovingPoint& p, const MovingPoint& q,
                                    const TimeInterval& i) {
  const Polynomial dx = (p.fx - q.fx).num();
  const Polynomial dy = (p.fy - q.fy).num();
  if (dx.is_zero() && dy.is_zero()) return {};
  if (dx.is_zero()) return roots_in(dy, i);
  if (dy.is_zero()) return roots_in(dx, i);
  return roots_in(gcd(dx, dy), i);
}

bool proper(const std::optional<TimeInterval>& i) { return i && !i->is_point(); }

void append(std::vector<TimeValue>& out, std::vector<TimeValue> more) {
  for (auto& t : more) out.push_back(std::move(t));
}

struct CarrierSet {
  std::vector<MovingCarrier> carriers;
  // Nondegenerate atoms having the carrier as an edge line.
  std::vector<std::vector<int>> owners;
  std::map<std::string, int> index;

  void add(const MovingSegment& seg, int atom, bool full) {
    MovingCarrier c = moving_carrier(seg);
    const std::string key = c.a.to_string() + "|" + c.b.to_string() + "|" + c.c.to_string() + "|" +
                            c.domain.to_string();
    auto [it, fresh] = index.emplace(key, static_cast<int>(carriers.size()));
    if (fresh) {
      carriers.push_back(std::move(c));
      owners.emplace_back();
    }
    if (full) owners[it->second].push_back(atom);
  }

  bool share_owner(int i, int j) const {
    for (int a : owners[i])
      if (std::find(owners[j].begin(), owners[j].end(), a) != owners[j].end()) return true;
    return false;
  }

  bool share_owner(int i, int j, int k) const {
    for (int a : owners[i])
      if (std::find(owners[j].begin(), owners[j].end(), a) != owners[j].end() &&
          std::find(owners[k].begin(), owners[k].end(), a) != owners[k].end())
        return true;
    return false;
  }
};

std::string trajectory(const MovingPoint& p) { return p.fx.to_string() + "," + p.fy.to_string(); }

// shared[k][e]: edge e of atom k (corners e, e+1) is also an edge of an atom
// with the same domain lying on the other side, so it never bounds the union.
std::vector<std::array<bool, 3>> shared_edges(const GeometricObject& g) {
  std::vector<std::array<bool, 3>> out(g.atoms.size(), {false, false, false});
  struct Side {
    std::size_t atom;
    int edge;
    int sign;
  };
  std::map<std::string, std::vector<Side>> edges;
  for (std::size_t k = 0; k < g.atoms.size(); ++k) {
    const AtomicObject& o = g.atoms[k];
    if (o.domain.is_point() || o.ref.degeneracy() != Degeneracy::full) continue;
    const auto mc = moving_corners(o);
    const Rational t = sample_time(o.domain.lo, o.domain.hi);
    for (int e = 0; e < 3; ++e) {
      const MovingPoint& p = mc[e];
      const MovingPoint& q = mc[(e + 1) % 3];
      std::string a = trajectory(p), b = trajectory(q);
      if (b < a) std::swap(a, b);
      const int sign = static_cast<int>(orientation(p.at(t), q.at(t), mc[(e + 2) % 3].at(t))) *
                       (trajectory(p) < trajectory(q) ? 1 : -1);
      edges[a + ";" + b + ";" + o.domain.to_string()].push_back({k, e, sign});
    }
  }
  for (const auto& [key, sides] : edges) {
    bool pos = false, neg = false;
    for (const auto& s : sides) (s.sign > 0 ? pos : neg) = true;
    if (pos && neg)
      for (const auto& s : sides) out[s.atom][s.edge] = true;
  }
  return out;
}

}  // namespace

MovingCarrier moving_carrier(const MovingSegment& seg) {
  const RationalFunction a = seg.q.fy - seg.p.fy;
  const RationalFunction b = seg.p.fx - seg.q.fx;
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("degenerate moving segment");
  const RationalFunction c = a * seg.p.fx + b * seg.p.fy;
  const RationalFunction& s = a.is_zero() ? b : a;
  MovingCarrier m;
  m.a = a / s;
  m.b = b / s;
  m.c = c / s;
  const auto dom = intersect(seg.p.domain, seg.q.domain);
  m.domain = dom ? *dom : seg.p.domain;
  const Polynomial d = lcm(lcm(a.den(), b.den()), c.den());
  m.pa = cleared(a, d);
  m.pb = cleared(b, d);
  m.pc = cleared(c, d);
  return m;
}

std::vector<TimeValue> pair_events(const MovingCarrier& c1, const MovingCarrier& c2,
                                   const TimeInterval& i) {
  const Polynomial det = c1.pa * c2.pb - c2.pa * c1.pb;
  if (!det.is_zero()) return roots_in(det, i);
  // Always parallel: the lines may still coincide at isolated times.
  const Polynomial m1 = c1.pa * c2.pc - c2.pa * c1.pc;
  const Polynomial m2 = c1.pb * c2.pc - c2.pb * c1.pc;
  if (m1.is_zero() && m2.is_zero()) return {};
  if (m1.is_zero()) return roots_in(m2, i);
  if (m2.is_zero()) return roots_in(m1, i);
  return roots_in(gcd(m1, m2), i);
}

std::vector<TimeValue> triple_events(const MovingCarrier& c1, const MovingCarrier& c2,
                                     const MovingCarrier& c3, const TimeInterval& i) {
  const Polynomial det = c1.pa * (c2.pb * c3.pc - c3.pb * c2.pc) -
                         c1.pb * (c2.pa * c3.pc - c3.pa * c2.pc) +
                         c1.pc * (c2.pa * c3.pb - c3.pa * c2.pb);
  if (det.is_zero()) return {};
  return roots_in(det, i);
}

EventList partition(const GeometricObject& g) {
  std::vector<TimeValue> chi;
  CarrierSet cs;
  std::vector<MovingPoint> loose;
  const auto shared = shared_edges(g);
  for (std::size_t k = 0; k < g.atoms.size(); ++k) {
    const AtomicObject& o = g.atoms[k];
    chi.push_back(o.domain.lo);
    chi.push_back(o.domain.hi);
    if (o.domain.is_point()) continue;
    const auto mc = moving_corners(o);
    switch (o.ref.degeneracy()) {
      case Degeneracy::full:
        for (int e = 0; e < 3; ++e)
          if (!shared[k][e]) cs.add({mc[e], mc[(e + 1) % 3]}, static_cast<int>(k), true);
        break;
      case Degeneracy::segment: {
        const CanonicalTriangle c = canonicalize(o.ref);
        cs.add({mc[c.perm[0]], mc[c.perm[1]]}, static_cast<int>(k), false);
        loose.push_back(mc[c.perm[0]]);
        loose.push_back(mc[c.perm[1]]);
        break;
      }
      case Degeneracy::point:
        loose.push_back(mc[0]);
        break;
    }
  }

  const auto& cars = cs.carriers;
  const std::size_t n = cars.size();
  // Pairwise 2x2 minors of the cleared coefficient rows, reused by the triples.
  std::vector<std::vector<Polynomial>> ab(n, std::vector<Polynomial>(n));
  std::vector<std::vector<Polynomial>> ac(n, std::vector<Polynomial>(n));
  std::vector<std::vector<Polynomial>> bc(n, std::vector<Polynomial>(n));
  std::vector<std::vector<std::optional<TimeInterval>>> meet(n, std::vector<std::optional<TimeInterval>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      meet[i][j] = intersect(cars[i].domain, cars[j].domain);
      if (!proper(meet[i][j])) continue;
      ab[i][j] = cars[i].pa * cars[j].pb - cars[j].pa * cars[i].pb;
      ac[i][j] = cars[i].pa * cars[j].pc - cars[j].pa * cars[i].pc;
      bc[i][j] = cars[i].pb * cars[j].pc - cars[j].pb * cars[i].pc;
      if (cs.share_owner(static_cast<int>(i), static_cast<int>(j))) continue;
      append(chi, pair_events(cars[i], cars[j], *meet[i][j]));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!proper(meet[i][j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!proper(meet[j][k]) || !proper(meet[i][k])) continue;
        const auto dom = intersect(*meet[i][j], cars[k].domain);
        if (!proper(dom)) continue;
        if (cs.share_owner(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k))) continue;
        const Polynomial det = cars[i].pa * bc[j][k] - cars[i].pb * ac[j][k] + cars[i].pc * ab[j][k];
        if (det.degree() > 0) append(chi, roots_in(det, *dom));
      }
    }

  // Points and segment ends of degenerate atoms meeting carriers or each other.
  for (std::size_t p = 0; p < loose.size(); ++p) {
    for (const auto& c : cars) {
      const auto dom = intersect(loose[p].domain, c.domain);
      if (!proper(dom)) continue;
      const Polynomial inc = incidence(c, loose[p]);
      if (!inc.is_zero()) append(chi, roots_in(inc, *dom));
    }
    for (std::size_t q = p + 1; q < loose.size(); ++q) {
      const auto dom = intersect(loose[p].domain, loose[q].domain);
      if (proper(dom)) append(chi, coincidences(loose[p], loose[q], *dom));
    }
  }

  std::sort(chi.begin(), chi.end(), [](const TimeValue& a, const TimeValue& b) {
    return tv_compare(a, b) == std::strong_ordering::less;
  });
  chi.erase(std::unique(chi.begin(), chi.end()), chi.end());
  return chi;
}

Rational sample_time(const TimeValue& lo, const TimeValue& hi) {
  if (tv_compare(lo, hi) != std::strong_ordering::less)
    throw std::invalid_argument("sample_time needs lo < hi");
  if (lo.is_exact() && hi.is_exact()) return (lo.value() + hi.value()) / 2;
  return simplest_between(lo, hi);
}

Rational approximate_time(const TimeValue& t, const Rational& eps) {
  if (t.is_exact()) return t.value();
  if (sgn(eps) <= 0) throw std::invalid_argument("epsilon must be positive");
  long k = 0;
  while (pow2(-k) > eps) ++k;
  const Rational scale = pow2(k);
  TimeValue n = t;
  while (floor_of(n.lower() * scale) != floor_of(n.upper() * scale)) n = n.bisected();
  const Rational lo = Rational(floor_of(n.lower() * scale)) / scale;
  return simplest_between(lo, Rational(lo + pow2(-k)));
}

}  // namespace stnf
