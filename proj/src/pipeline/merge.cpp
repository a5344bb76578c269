#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "stnf/pipeline/pipeline.hpp"

namespace stnf {

namespace {

struct Group {
  TimeInterval domain;
  std::vector<AtomicObject> atoms;
  bool approximate() const {
    return std::any_of(atoms.begin(), atoms.end(), [](const AtomicObject& a) { return a.approximate; });
  }
};

std::string triangle_key(const Triangle& t) { return to_string(canonical(t)); }

std::string trajectory_key(const AtomicObject& a) {
  std::vector<std::string> parts;
  for (const auto& c : moving_corners(a)) parts.push_back(c.fx.to_string() + "," + c.fy.to_string());
  std::sort(parts.begin(), parts.end());
  return parts[0] + ";" + parts[1] + ";" + parts[2];
}

// Every key of `a` matched to exactly one key of `b`.
bool bijective(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  std::unordered_set<std::string> keys(b.begin(), b.end());
  if (keys.size() != b.size()) return false;
  std::unordered_set<std::string> seen;
  for (const auto& k : a)
    if (!keys.count(k) || !seen.insert(k).second) return false;
  return true;
}

std::optional<std::vector<std::string>> snapshot_keys(const std::vector<AtomicObject>& atoms,
                                                      const Rational& t) {
  std::vector<std::string> out;
  for (const auto& a : atoms) {
    if (!nonsingular_at(a.f, t)) return std::nullopt;
    Triangle s;
    for (int k = 0; k < 3; ++k) s.corners[k] = a.f.apply(a.ref.corners[k], t);
    out.push_back(triangle_key(s));
  }
  return out;
}

std::vector<std::string> ref_keys(const std::vector<AtomicObject>& atoms) {
  std::vector<std::string> out;
  for (const auto& a : atoms) out.push_back(triangle_key(a.ref));
  return out;
}

std::vector<std::string> trajectory_keys(const std::vector<AtomicObject>& atoms) {
  std::vector<std::string> out;
  for (const auto& a : atoms) out.push_back(trajectory_key(a));
  return out;
}

void set_domain(Group& g, const TimeInterval& d) {
  g.domain = d;
  for (auto& a : g.atoms) a.domain = d;
}

// Merge of a group with the next partition element at an exact time.
bool try_merge(Group& cur, Group& next) {
  if (cur.approximate() || next.approximate()) return false;
  const TimeValue& t = next.domain.lo;
  if (!t.is_exact()) return false;
  TimeInterval merged = cur.domain;
  merged.hi = next.domain.hi;
  merged.closed_hi = next.domain.closed_hi;
  if (next.domain.is_point()) {
    const auto keys = snapshot_keys(cur.atoms, t.value());
    if (!keys || !bijective(*keys, ref_keys(next.atoms))) return false;
    set_domain(cur, merged);
    return true;
  }
  if (cur.domain.is_point()) {
    const auto keys = snapshot_keys(next.atoms, t.value());
    if (!keys || !bijective(*keys, ref_keys(cur.atoms))) return false;
    cur.atoms = std::move(next.atoms);
    set_domain(cur, merged);
    return true;
  }
  if (!bijective(trajectory_keys(cur.atoms), trajectory_keys(next.atoms))) return false;
  set_domain(cur, merged);
  return true;
}

// Rational-function corners of an atom for exact sign tests at an algebraic time.
struct Corners {
  Degeneracy kind;
  std::vector<MovingPoint> pts;  // distinct reference corners only
};

Corners corners_of(const AtomicObject& a) {
  Corners c{a.ref.degeneracy(), {}};
  const auto mc = moving_corners(a);
  for (int k = 0; k < 3; ++k) {
    bool dup = false;
    for (int j = 0; j < k; ++j) dup = dup || a.ref.corners[j] == a.ref.corners[k];
    if (!dup) c.pts.push_back(mc[k]);
  }
  return c;
}

int sign_at(const RationalFunction& f, const TimeValue& t) {
  return sign_at(f.num(), t) * sign_at(f.den(), t);
}

int orient_at(const MovingPoint& a, const MovingPoint& b, const MovingPoint& p, const TimeValue& t) {
  return sign_at((b.fx - a.fx) * (p.fy - a.fy) - (b.fy - a.fy) * (p.fx - a.fx), t);
}

bool on_segment_at(const MovingPoint& p, const MovingPoint& a, const MovingPoint& b,
                   const TimeValue& t) {
  if (orient_at(a, b, p, t) != 0) return false;
  const auto dot = [&](const MovingPoint& o, const MovingPoint& u, const MovingPoint& v) {
    return sign_at((u.fx - o.fx) * (v.fx - o.fx) + (u.fy - o.fy) * (v.fy - o.fy), t);
  };
  return dot(a, p, b) >= 0 && dot(b, p, a) >= 0;
}

bool in_triangle_at(const MovingPoint& p, const std::vector<MovingPoint>& tri, const TimeValue& t) {
  int pos = 0, neg = 0;
  for (int k = 0; k < 3; ++k) {
    const int s = orient_at(tri[k], tri[(k + 1) % 3], p, t);
    pos += s > 0;
    neg += s < 0;
  }
  return pos == 0 || neg == 0;
}

bool same_at(const MovingPoint& p, const MovingPoint& q, const TimeValue& t) {
  return sign_at(p.fx - q.fx, t) == 0 && sign_at(p.fy - q.fy, t) == 0;
}

// A point or segment touching another piece at t, which the neighbouring
// times do not see.
bool degenerate_contact(const std::vector<AtomicObject>& atoms, const TimeValue& t) {
  std::vector<Corners> cs;
  for (const auto& a : atoms) cs.push_back(corners_of(a));
  for (std::size_t d = 0; d < cs.size(); ++d) {
    if (cs[d].kind == Degeneracy::full) continue;
    for (std::size_t e = 0; e < cs.size(); ++e) {
      if (e == d) continue;
      const Corners& other = cs[e];
      for (const auto& p : cs[d].pts) {
        if (other.kind == Degeneracy::full && in_triangle_at(p, other.pts, t)) return true;
        if (other.kind == Degeneracy::segment && on_segment_at(p, other.pts[0], other.pts[1], t))
          return true;
        if (other.kind == Degeneracy::point && same_at(p, other.pts[0], t)) return true;
      }
      if (cs[d].kind == Degeneracy::segment && other.kind == Degeneracy::full)
        for (const auto& v : other.pts)
          if (on_segment_at(v, cs[d].pts[0], cs[d].pts[1], t)) return true;
    }
  }
  return false;
}

// cur ends open at the algebraic time t = point.lo, next starts open there.
bool try_merge_algebraic(Group& cur, const Group& point, Group& next,
                         const std::vector<TimeValue>& endpoints) {
  const TimeValue& t = point.domain.lo;
  if (cur.domain.is_point() || cur.approximate()) return false;
  for (const auto& e : endpoints)
    if (e == t) return false;
  if (cur.atoms.empty() != point.atoms.empty()) return false;
  for (const auto& a : cur.atoms)
    if (!nonsingular_at(a.f, t)) return false;
  if (!bijective(trajectory_keys(cur.atoms), trajectory_keys(next.atoms))) return false;
  if (degenerate_contact(cur.atoms, t)) return false;
  TimeInterval merged = cur.domain;
  merged.hi = next.domain.hi;
  merged.closed_hi = next.domain.closed_hi;
  set_domain(cur, merged);
  return true;
}

bool atom_less(const AtomicObject& a, const AtomicObject& b) { return a.ref < b.ref; }

AtomicObject rebased(const AtomicObject& a, const std::string& id) {
  if (a.domain.is_point()) return {canonical(a.ref), a.domain, a.f, id, a.approximate};
  const Rational t = sample_time(a.domain.lo, a.domain.hi);
  const auto mc = moving_corners(a);
  Triangle snap;
  for (int k = 0; k < 3; ++k) snap.corners[k] = mc[k].at(t);
  const CanonicalTriangle c = canonicalize(snap);
  const std::array<MovingPoint, 3> ordered{mc[c.perm[0]], mc[c.perm[1]], mc[c.perm[2]]};
  return {c.triangle, a.domain, recover_affinity(c.triangle, ordered), id, false};
}

}  // namespace

bool operator==(const NormalForm& a, const NormalForm& b) {
  if (a.partition != b.partition || a.atoms.size() != b.atoms.size()) return false;
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    const auto& x = a.atoms[i];
    const auto& y = b.atoms[i];
    if (!(x.ref == y.ref && x.domain == y.domain && x.f == y.f && x.approximate == y.approximate))
      return false;
  }
  return true;
}

NormalForm merge(const GeometricObject& g, const std::vector<AtomicObject>& atoms,
                 const EventList& chi) {
  const std::vector<TimeInterval> elements = elements_of(chi);
  std::vector<Group> el;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& e : elements) {
    slot.emplace(e.to_string(), el.size());
    el.push_back({e, {}});
  }
  for (const auto& a : atoms) {
    const auto it = slot.find(a.domain.to_string());
    if (it == slot.end()) throw std::invalid_argument("atom domain is not a partition element");
    el[it->second].atoms.push_back(a);
  }

  std::vector<TimeValue> endpoints;
  for (const auto& a : g.atoms) {
    endpoints.push_back(a.domain.lo);
    endpoints.push_back(a.domain.hi);
  }

  std::vector<Group> done;
  if (!el.empty()) {
    Group cur = std::move(el[0]);
    std::size_t k = 1;
    while (k < el.size()) {
      Group& next = el[k];
      if (next.domain.is_point() && !next.domain.lo.is_exact()) {
        if (k + 1 < el.size() && try_merge_algebraic(cur, next, el[k + 1], endpoints)) {
          k += 2;
          continue;
        }
      } else if (try_merge(cur, next)) {
        ++k;
        continue;
      }
      done.push_back(std::move(cur));
      cur = std::move(next);
      ++k;
    }
    done.push_back(std::move(cur));
  }

  NormalForm nf;
  for (auto& grp : done) {
    std::vector<AtomicObject> part;
    for (const auto& a : grp.atoms) part.push_back(rebased(a, g.id));
    std::sort(part.begin(), part.end(), atom_less);
    nf.atoms.insert(nf.atoms.end(), part.begin(), part.end());
    nf.partition.push_back(grp.domain);
  }
  return nf;
}

NormalForm t_st(const GeometricObject& g, const Rational& eps) {
  for (const auto& a : g.atoms) {
    check_interval(a.domain);
    const auto v = validate_atomic(a);
    if (!v.empty()) throw std::invalid_argument("invalid atomic object: " + v.front().label());
  }
  if (g.atoms.empty()) return {};
  const EventList chi = partition(g);
  return merge(g, triangulate_steps(g, chi, eps), chi);
}

bool normal_form_equal(const GeometricObject& g1, const GeometricObject& g2) {
  return t_st(g1) == t_st(g2);
}

GeometricObject as_object(const NormalForm& nf, const std::string& id) {
  GeometricObject g{id, nf.atoms};
  for (auto& a : g.atoms) a.source_id = id;
  return g;
}

std::vector<Triangle> snapshot_normal_form(const NormalForm& nf, const Rational& t) {
  std::vector<Triangle> out;
  for (const auto& a : nf.atoms)
    if (auto s = snapshot_atomic(a, t)) out.push_back(canonical(*s));
  sort_canonical(out);
  return out;
}

}  // namespace stnf
