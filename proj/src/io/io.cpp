#include "stnf/io/io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace stnf::io {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer n;
    const bool digits = !s.empty() &&
                        std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                        s != "-";
    if (!digits || n.set_str(s, 10) != 0) schema_error(path, "expected an integer, got \"" + s + "\"");
    return n;
  }
  schema_error(path, "expected an integer");
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(read_integer(j, path));
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected a rational [numerator, denominator]");
  const Integer n = read_integer(j[0], path + "/0");
  const Integer d = read_integer(j[1], path + "/1");
  if (d == 0) schema_error(path, "zero denominator");
  return make_rational(n, d);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(path, "missing \"" + key + "\"");
  return *it;
}

Polynomial read_polynomial(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected a coefficient list");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_rational(j[i], path + "/" + std::to_string(i)));
  return Polynomial(std::move(c));
}

RationalFunction read_function(const json& j, const std::string& path) {
  if (!j.is_object()) return RationalFunction(read_rational(j, path));
  const Polynomial num = read_polynomial(member(j, "num", path), path + "/num");
  if (!j.contains("den")) return RationalFunction(num);
  const Polynomial den = read_polynomial(j["den"], path + "/den");
  if (den.is_zero()) schema_error(path + "/den", "zero denominator");
  return RationalFunction(num, den);
}

TimeValue read_time(const json& j, const std::string& path) {
  if (!j.is_object()) return read_rational(j, path);
  const Polynomial p = read_polynomial(member(j, "poly", path), path + "/poly");
  const json& iso = member(j, "iso", path);
  if (!iso.is_array() || iso.size() != 2) schema_error(path + "/iso", "expected [lo, hi]");
  try {
    return TimeValue::algebraic(p, read_rational(iso[0], path + "/iso/0"), read_rational(iso[1], path + "/iso/1"));
  } catch (const std::invalid_argument& e) {
    schema_error(path, e.what());
  }
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected true or false");
  return j.get<bool>();
}

const char* const kEntries[6] = {"a11", "a12", "a21", "a22", "b1", "b2"};

AtomicObject read_atom(const json& j, const std::string& path, const std::string& id) {
  AtomicObject o;
  o.source_id = id;
  const json& tri = member(j, "triangle", path);
  if (!tri.is_array() || tri.size() != 3) schema_error(path + "/triangle", "expected three corners");
  for (int k = 0; k < 3; ++k) {
    const std::string cp = path + "/triangle/" + std::to_string(k);
    if (!tri[k].is_array() || tri[k].size() != 2) schema_error(cp, "expected a corner [x, y]");
    o.ref.corners[k] = {read_rational(tri[k][0], cp + "/0"), read_rational(tri[k][1], cp + "/1")};
  }
  const json& iv = member(j, "interval", path);
  const std::string ip = path + "/interval";
  o.domain.lo = read_time(member(iv, "lo", ip), ip + "/lo");
  o.domain.hi = read_time(member(iv, "hi", ip), ip + "/hi");
  o.domain.closed_lo = read_bool(member(iv, "closed_lo", ip), ip + "/closed_lo");
  o.domain.closed_hi = read_bool(member(iv, "closed_hi", ip), ip + "/closed_hi");
  try {
    check_interval(o.domain);
  } catch (const std::invalid_argument& e) {
    schema_error(ip, e.what());
  }
  if (j.contains("transform")) {
    const json& f = j["transform"];
    const std::string fp = path + "/transform";
    if (!f.is_object()) schema_error(fp, "expected an object");
    RationalFunction* slots[6] = {&o.f.a11, &o.f.a12, &o.f.a21, &o.f.a22, &o.f.b1, &o.f.b2};
    for (int e = 0; e < 6; ++e)
      if (f.contains(kEntries[e])) *slots[e] = read_function(f[kEntries[e]], fp + "/" + kEntries[e]);
  }
  if (j.contains("approximate")) o.approximate = read_bool(j["approximate"], path + "/approximate");
  return o;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  int line = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i < end; ++i)
    if (text[i] == '\n') {
      ++line;
      start = i + 1;
    }
  return {line, static_cast<int>(end - start) + 1};
}

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json rational_json(const Rational& r) { return json::array({integer_json(r.get_num()), integer_json(r.get_den())}); }

json polynomial_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_json(c));
  return out;
}

json time_json(const TimeValue& t) {
  if (t.is_exact()) return rational_json(t.value());
  return {{"poly", polynomial_json(t.poly())}, {"iso", json::array({rational_json(t.lo()), rational_json(t.hi())})}};
}

json interval_json(const TimeInterval& i) {
  return {{"lo", time_json(i.lo)}, {"hi", time_json(i.hi)}, {"closed_lo", i.closed_lo}, {"closed_hi", i.closed_hi}};
}

json triangle_json(const Triangle& t) {
  json out = json::array();
  for (const auto& p : t.corners) out.push_back(json::array({rational_json(p.x), rational_json(p.y)}));
  return out;
}

json atom_json(const AtomicObject& o) {
  json f = json::object();
  const auto c = o.f.coefficients();
  for (int e = 0; e < 6; ++e) f[kEntries[e]] = {{"num", polynomial_json(c[e].num())}, {"den", polynomial_json(c[e].den())}};
  return {{"triangle", triangle_json(o.ref)}, {"interval", interval_json(o.domain)}, {"transform", f},
          {"approximate", o.approximate}};
}

json atoms_json(const std::vector<AtomicObject>& atoms) {
  json out = json::array();
  for (const auto& a : atoms) out.push_back(atom_json(a));
  return out;
}

Integer pow10(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return p;
}

}  // namespace

GeometricObject read_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column),
                     std::make_pair(line, column));
  }
  GeometricObject g{"object", {}};
  const json* atoms = &j;
  std::string path;
  if (j.is_object()) {
    if (j.contains("id")) {
      if (!j["id"].is_string()) schema_error("/id", "expected a string");
      g.id = j["id"].get<std::string>();
    }
    atoms = &member(j, "atoms", "");
    path = "/atoms";
  }
  if (!atoms->is_array()) schema_error(path, "expected a list of atoms");
  for (std::size_t i = 0; i < atoms->size(); ++i)
    g.atoms.push_back(read_atom((*atoms)[i], path + "/" + std::to_string(i), g.id));
  return g;
}

GeometricObject read_object_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_object(ss.str());
}

std::string write_object(const GeometricObject& g) {
  return json{{"id", g.id}, {"atoms", atoms_json(g.atoms)}}.dump(1) + "\n";
}

std::string write_normal_form(const NormalForm& nf, const std::string& id) {
  json part = json::array();
  for (const auto& d : nf.partition) part.push_back(interval_json(d));
  return json{{"id", id}, {"partition", part}, {"atoms", atoms_json(nf.atoms)}}.dump(1) + "\n";
}

std::string write_partition(const EventList& chi) {
  json out = json::array();
  for (const auto& t : chi) out.push_back(time_json(t));
  return out.dump() + "\n";
}

std::string write_triangles(const std::vector<Triangle>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(triangle_json(t));
  return out.dump() + "\n";
}

std::string decimal(const Rational& x, const Rational& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("epsilon must be positive");
  long k = 0;
  while (Rational(1, pow10(k)) > eps) ++k;
  const Integer scale = pow10(k);
  const Integer n = floor_of(x * Rational(scale) + Rational(1, 2));
  Integer mag = abs(n);
  std::string digits = mag.get_str();
  if (static_cast<long>(digits.size()) <= k) digits.insert(0, k + 1 - digits.size(), '0');
  std::string whole = digits.substr(0, digits.size() - k);
  std::string frac = digits.substr(digits.size() - k);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (sgn(n) < 0 ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

Box bounding_box(const std::vector<std::vector<Triangle>>& frames) {
  Box b{Rational(0), Rational(0), Rational(1), Rational(1)};
  bool first = true;
  for (const auto& f : frames)
    for (const auto& t : f)
      for (const auto& p : t.corners) {
        if (first) {
          b = {p.x, p.y, p.x, p.y};
          first = false;
          continue;
        }
        b.xmin = std::min(b.xmin, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.xmax = std::max(b.xmax, p.x);
        b.ymax = std::max(b.ymax, p.y);
      }
  const Rational w = std::max(Rational(b.xmax - b.xmin), Rational(b.ymax - b.ymin));
  const Rational pad = sgn(w) > 0 ? Rational(w / 20) : Rational(1);
  return {b.xmin - pad, b.ymin - pad, b.xmax + pad, b.ymax + pad};
}

std::string render_svg(const std::vector<Triangle>& ts, const Box& box, const Rational& eps,
                       const std::string& title, std::uint64_t seed) {
  const auto num = [&](const Rational& v) { return decimal(v, eps); };
  const Rational w = box.xmax - box.xmin;
  const Rational h = box.ymax - box.ymin;
  const Rational stroke = std::max(w, h) / 200;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\""
      << num(box.xmin) << " " << num(-box.ymax) << " " << num(w) << " " << num(h) << "\">\n"
      << "<title>" << title << "</title>\n";
  std::mt19937_64 rng(seed);
  for (const auto& t : ts) {
    const unsigned hue = static_cast<unsigned>(rng() % 360);
    const std::string fill = "hsl(" + std::to_string(hue) + ",60%,70%)";
    const auto xy = [&](const Point& p) { return num(p.x) + "," + num(-p.y); };
    switch (t.degeneracy()) {
      case Degeneracy::full:
        out << "<polygon points=\"" << xy(t.corners[0]) << " " << xy(t.corners[1]) << " " << xy(t.corners[2])
            << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\"/>\n";
        break;
      case Degeneracy::segment: {
        const Triangle c = canonical(t);
        out << "<line x1=\"" << num(c.corners[0].x) << "\" y1=\"" << num(-c.corners[0].y) << "\" x2=\""
            << num(c.corners[1].x) << "\" y2=\"" << num(-c.corners[1].y) << "\" stroke=\"black\" stroke-width=\""
            << num(stroke) << "\"/>\n";
        break;
      }
      case Degeneracy::point:
        out << "<circle cx=\"" << num(t.corners[0].x) << "\" cy=\"" << num(-t.corners[0].y) << "\" r=\""
            << num(2 * stroke) << "\" fill=\"black\"/>\n";
        break;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace stnf::io
