#include "stnf/oracle/oracle.hpp"

#include <algorithm>
#include <random>

namespace stnf::oracle {

namespace {

Rational orient(const Pt& a, const Pt& b, const Pt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool same(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }

bool is_full(const Tri& t) { return sgn(orient(t[0], t[1], t[2])) != 0; }
bool is_point(const Tri& t) { return same(t[0], t[1]) && same(t[1], t[2]); }

// Extreme corners of a segment triangle.
std::pair<Pt, Pt> segment_ends(const Tri& t) {
  const auto less = [](const Pt& a, const Pt& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; };
  Pt lo = t[0], hi = t[0];
  for (const auto& p : t) {
    if (less(p, lo)) lo = p;
    if (less(hi, p)) hi = p;
  }
  return {lo, hi};
}

bool on_closed_segment(const Pt& a, const Pt& b, const Pt& p) {
  if (!(std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y)))
    return false;
  return sgn(orient(a, b, p)) == 0;
}

bool in_box(const Tri& t, const Pt& p) {
  return std::min({t[0].x, t[1].x, t[2].x}) <= p.x && p.x <= std::max({t[0].x, t[1].x, t[2].x}) &&
         std::min({t[0].y, t[1].y, t[2].y}) <= p.y && p.y <= std::max({t[0].y, t[1].y, t[2].y});
}

// Sign convention: each value > 0 strictly inside.
std::array<Rational, 3> inside_values(const Tri& t, const Pt& p) {
  const int s = sgn(orient(t[0], t[1], t[2]));
  std::array<Rational, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = s * orient(t[i], t[(i + 1) % 3], p);
  return v;
}

bool in_closed(const Tri& t, const Pt& p) {
  if (!in_box(t, p)) return false;
  if (is_full(t)) {
    for (const auto& v : inside_values(t, p))
      if (sgn(v) < 0) return false;
    return true;
  }
  const auto [lo, hi] = segment_ends(t);
  return on_closed_segment(lo, hi, p);
}

bool in_open(const Tri& t, const Pt& p) {
  if (!is_full(t)) return false;
  for (const auto& v : inside_values(t, p))
    if (sgn(v) <= 0) return false;
  return true;
}

struct XRange {
  Rational lo;
  Rational hi;
};

XRange x_range(const Tri& t) {
  return {std::min({t[0].x, t[1].x, t[2].x}), std::max({t[0].x, t[1].x, t[2].x})};
}

// Length of the union of vertical cross-sections at abscissa x.
Rational cross_section(const std::vector<Tri>& s, const std::vector<XRange>& ranges,
                       const Rational& x) {
  std::vector<std::pair<Rational, Rational>> spans;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Tri& t = s[k];
    if (x < ranges[k].lo || ranges[k].hi < x) continue;
    std::vector<Rational> ys;
    for (int i = 0; i < 3; ++i) {
      const Pt& a = t[i];
      const Pt& b = t[(i + 1) % 3];
      if (a.x == b.x) continue;
      const Rational lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
      if (x < lo || hi < x) continue;
      ys.push_back(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x));
    }
    if (ys.size() < 2) continue;
    const auto [mn, mx] = std::minmax_element(ys.begin(), ys.end());
    spans.push_back({*mn, *mx});
  }
  std::sort(spans.begin(), spans.end());
  Rational total(0);
  bool open = false;
  Rational cur_lo, cur_hi;
  for (const auto& [lo, hi] : spans) {
    if (open && lo <= cur_hi) {
      if (hi > cur_hi) cur_hi = hi;
      continue;
    }
    if (open) total += cur_hi - cur_lo;
    cur_lo = lo;
    cur_hi = hi;
    open = true;
  }
  if (open) total += cur_hi - cur_lo;
  return total;
}

// Open-interval set of parameters u in ]0,1[ with a + u (b - a) strictly
// inside t; returns whether it is nonempty.
bool segment_meets_open(const Tri& t, const Pt& a, const Pt& b) {
  Rational lo(0), hi(1);
  const auto va = inside_values(t, a);
  const auto vb = inside_values(t, b);
  for (int i = 0; i < 3; ++i) {
    // v(u) = va + u (vb - va) > 0
    const Rational d = vb[i] - va[i];
    if (sgn(d) == 0) {
      if (sgn(va[i]) <= 0) return false;
      continue;
    }
    const Rational root = -va[i] / d;
    if (sgn(d) > 0) {
      if (root > lo) lo = root;
    } else if (root < hi) {
      hi = root;
    }
  }
  return lo < hi;
}

// SAT for two full triangles: interiors meet iff no edge axis separates.
bool full_interiors_meet(const Tri& a, const Tri& b) {
  for (const Tri* t : {&a, &b}) {
    const Tri& other = t == &a ? b : a;
    const int s = sgn(orient((*t)[0], (*t)[1], (*t)[2]));
    for (int i = 0; i < 3; ++i) {
      bool all_outside = true;
      for (const auto& p : other)
        if (s * sgn(orient((*t)[i], (*t)[(i + 1) % 3], p)) > 0) all_outside = false;
      if (all_outside) return false;
    }
  }
  return true;
}

}  // namespace

Rational union_area(const std::vector<Tri>& s) {
  std::vector<Tri> full;
  for (const auto& t : s)
    if (is_full(t)) full.push_back(t);
  std::vector<XRange> ranges;
  std::vector<Rational> xs;
  struct Edge {
    Pt a;
    Pt b;
    Rational xlo, xhi, ylo, yhi;
  };
  std::vector<Edge> edges;
  for (const auto& t : full) {
    ranges.push_back(x_range(t));
    for (int i = 0; i < 3; ++i) {
      const Pt& a = t[i];
      const Pt& b = t[(i + 1) % 3];
      xs.push_back(a.x);
      edges.push_back({a, b, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                       std::max(a.y, b.y)});
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.xhi < f.xlo || f.xhi < e.xlo || e.yhi < f.ylo || f.yhi < e.ylo) continue;
      const Pt& a = e.a;
      const Pt& b = e.b;
      const Pt& c = f.a;
      const Pt& d = f.b;
      const Rational den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
      if (sgn(den) == 0) continue;
      const Rational u = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
      const Rational v = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / den;
      if (sgn(u) < 0 || u > 1 || sgn(v) < 0 || v > 1) continue;
      xs.push_back(a.x + u * (b.x - a.x));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rational area(0);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    area += (xs[k + 1] - xs[k]) * cross_section(full, ranges, (xs[k] + xs[k + 1]) / 2);
  return area;
}

Rational area_sum(const std::vector<Tri>& s) {
  Rational total(0);
  for (const auto& t : s) total += abs(orient(t[0], t[1], t[2])) / 2;
  return total;
}

bool in_closed_union(const std::vector<Tri>& s, const Pt& p) {
  for (const auto& t : s)
    if (in_closed(t, p)) return true;
  return false;
}

bool on_some_boundary(const std::vector<Tri>& s, const Pt& p) {
  for (const auto& t : s) {
    if (!in_box(t, p)) continue;
    if (is_point(t)) {
      if (same(t[0], p)) return true;
      continue;
    }
    for (int i = 0; i < 3; ++i)
      if (!same(t[i], t[(i + 1) % 3]) && on_closed_segment(t[i], t[(i + 1) % 3], p)) return true;
  }
  return false;
}

bool interiors_disjoint(const Tri& a, const Tri& b) {
  const auto box_lo = [](const Tri& t, bool x) {
    return x ? std::min({t[0].x, t[1].x, t[2].x}) : std::min({t[0].y, t[1].y, t[2].y});
  };
  const auto box_hi = [](const Tri& t, bool x) {
    return x ? std::max({t[0].x, t[1].x, t[2].x}) : std::max({t[0].y, t[1].y, t[2].y});
  };
  for (bool x : {true, false})
    if (box_hi(a, x) < box_lo(b, x) || box_hi(b, x) < box_lo(a, x)) return true;
  const bool fa = is_full(a), fb = is_full(b);
  if (fa && fb) return !full_interiors_meet(a, b);
  if (!fa && fb) return interiors_disjoint(b, a);
  const bool pb = is_point(b);
  if (fa) {
    if (pb) return !in_open(a, b[0]);
    const auto [lo, hi] = segment_ends(b);
    return !segment_meets_open(a, lo, hi);
  }
  const bool pa = is_point(a);
  if (pa && pb) return !same(a[0], b[0]);
  if (pa || pb) {
    const Tri& seg = pa ? b : a;
    const Pt& p = pa ? a[0] : b[0];
    const auto [lo, hi] = segment_ends(seg);
    return !(on_closed_segment(lo, hi, p) && !same(p, lo) && !same(p, hi));
  }
  const auto [a0, a1] = segment_ends(a);
  const auto [b0, b1] = segment_ends(b);
  const Rational den = (a1.x - a0.x) * (b1.y - b0.y) - (a1.y - a0.y) * (b1.x - b0.x);
  if (sgn(den) != 0) {
    const Rational u = ((b0.x - a0.x) * (b1.y - b0.y) - (b0.y - a0.y) * (b1.x - b0.x)) / den;
    const Rational v = ((b0.x - a0.x) * (a1.y - a0.y) - (b0.y - a0.y) * (a1.x - a0.x)) / den;
    return !(sgn(u) > 0 && u < 1 && sgn(v) > 0 && v < 1);
  }
  if (sgn(orient(a0, a1, b0)) != 0) return true;
  // Collinear: overlap of positive length?
  const bool by_x = a0.x != a1.x;
  const auto key = [&](const Pt& p) { return by_x ? p.x : p.y; };
  const Rational lo = std::max(key(a0), key(b0));
  const Rational hi = std::min(key(a1), key(b1));
  return !(lo < hi);
}

std::vector<std::pair<int, int>> overlapping_pairs(const std::vector<Tri>& s) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!interiors_disjoint(s[i], s[j])) out.push_back({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

std::vector<MembershipVerdict> membership_sample(const std::vector<Tri>& in,
                                                 const std::vector<Tri>& out, int k,
                                                 std::uint64_t seed) {
  bool any = false;
  Rational x0, x1, y0, y1;
  for (const auto* set : {&in, &out}) {
    for (const auto& t : *set) {
      for (const auto& p : t) {
        if (!any) {
          x0 = x1 = p.x;
          y0 = y1 = p.y;
          any = true;
        }
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
      }
    }
  }
  if (!any) x0 = x1 = y0 = y1 = 0;
  const Rational mx = (x1 - x0) / 10 + 1;
  const Rational my = (y1 - y0) / 10 + 1;
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  std::mt19937_64 rng(seed);
  const long scale = 1L << 20;
  std::uniform_int_distribution<long> u(0, scale);
  std::vector<MembershipVerdict> verdicts;
  verdicts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const Rational fx = make_rational(u(rng), scale);
    const Rational fy = make_rational(u(rng), scale);
    Pt p{x0 + (x1 - x0) * fx, y0 + (y1 - y0) * fy};
    verdicts.push_back({p, in_closed_union(in, p), in_closed_union(out, p),
                        on_some_boundary(in, p) || on_some_boundary(out, p)});
  }
  return verdicts;
}

int disagreements(const std::vector<MembershipVerdict>& verdicts) {
  int n = 0;
  for (const auto& v : verdicts)
    if (!v.on_boundary && v.in_input != v.in_output) ++n;
  return n;
}

}  // namespace stnf::oracle
