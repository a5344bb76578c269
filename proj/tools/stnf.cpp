#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stnf/io/io.hpp"

namespace {

using namespace stnf;

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kParse = 2;

struct RunConfig {
  Rational epsilon = kDefaultEpsilon;
  std::uint64_t seed = 0;
  int frame_count = 9;
  std::string output;
};

Rational parse_epsilon(const std::string& text) {
  const Rational e = parse_rational(text);
  if (sgn(e) <= 0) throw std::invalid_argument("epsilon must be positive");
  return e;
}

GeometricObject load(const std::string& path) {
  try {
    return io::read_object_file(path);
  } catch (const io::ParseError& e) {
    throw io::ParseError(path + ": " + e.what(), e.position());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

int cmd_validate(const std::string& file) {
  const GeometricObject g = load(file);
  bool ok = true;
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    const auto v = validate_atomic(g.atoms[i]);
    std::cout << "atom " << i << ": ";
    if (v.empty()) {
      std::cout << "ok\n";
      continue;
    }
    ok = false;
    for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? " " : "") << v[k].label();
    std::cout << "\n";
  }
  return ok ? kOk : kSemantic;
}

void require_valid(const GeometricObject& g) {
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    const auto v = validate_atomic(g.atoms[i]);
    if (!v.empty())
      throw std::invalid_argument("atom " + std::to_string(i) + " is invalid: " + v.front().label());
  }
}

int cmd_partition(const std::string& file) {
  const GeometricObject g = load(file);
  require_valid(g);
  std::cout << io::write_partition(g.atoms.empty() ? EventList{} : partition(g));
  return kOk;
}

int cmd_triangulate(const std::string& file, const RunConfig& cfg) {
  const GeometricObject g = load(file);
  emit(io::write_normal_form(t_st(g, cfg.epsilon), g.id), cfg.output);
  return kOk;
}

std::string describe(const AtomicObject& a) {
  return to_string(a.ref) + " on " + a.domain.to_string() + " under " + a.f.to_string();
}

int cmd_diff(const std::string& a, const std::string& b, const RunConfig& cfg) {
  const NormalForm x = t_st(load(a), cfg.epsilon);
  const NormalForm y = t_st(load(b), cfg.epsilon);
  if (x == y) {
    std::cout << "equal\n";
    return kOk;
  }
  const std::size_t np = std::min(x.partition.size(), y.partition.size());
  for (std::size_t i = 0; i < np; ++i)
    if (!(x.partition[i] == y.partition[i])) {
      std::cout << "partition element " << i << ": " << x.partition[i].to_string() << " vs "
                << y.partition[i].to_string() << "\n";
      return kSemantic;
    }
  if (x.partition.size() != y.partition.size()) {
    std::cout << "partition sizes: " << x.partition.size() << " vs " << y.partition.size() << "\n";
    return kSemantic;
  }
  const std::size_t na = std::min(x.atoms.size(), y.atoms.size());
  for (std::size_t i = 0; i < na; ++i)
    if (!(NormalForm{{x.atoms[i]}, {}} == NormalForm{{y.atoms[i]}, {}})) {
      std::cout << "atom " << i << ": " << describe(x.atoms[i]) << " vs " << describe(y.atoms[i]) << "\n";
      return kSemantic;
    }
  std::cout << "atom counts: " << x.atoms.size() << " vs " << y.atoms.size() << "\n";
  return kSemantic;
}

int cmd_snapshot(const std::string& file, const std::string& time, bool triangulated, const RunConfig& cfg) {
  const GeometricObject g = load(file);
  Rational t;
  try {
    t = parse_rational(time);
  } catch (const std::exception&) {
    throw io::ParseError("bad --time " + time);
  }
  if (triangulated) {
    emit(io::write_triangles(snapshot_normal_form(t_st(g, cfg.epsilon), t)), cfg.output);
    return kOk;
  }
  require_valid(g);
  emit(io::write_triangles(snapshot_geometric(g, t)), cfg.output);
  return kOk;
}

std::vector<Rational> frame_times(const GeometricObject& g, int k, const Rational& eps) {
  if (g.atoms.empty()) return std::vector<Rational>(k, Rational(0));
  const TimeInterval d = time_domain(g);
  const Rational lo = approximate_time(d.lo, eps);
  const Rational hi = approximate_time(d.hi, eps);
  std::vector<Rational> out;
  if (k == 1) return {(lo + hi) / 2};
  for (int i = 0; i < k; ++i) out.push_back(lo + (hi - lo) * Rational(i, k - 1));
  return out;
}

int cmd_render(const std::string& file, const RunConfig& cfg) {
  if (cfg.frame_count < 1) throw io::ParseError("--frames must be at least 1");
  if (cfg.output.empty()) throw io::ParseError("render needs --out DIR");
  const GeometricObject g = load(file);
  const NormalForm nf = t_st(g, cfg.epsilon);
  const auto times = frame_times(g, cfg.frame_count, cfg.epsilon);
  std::vector<std::vector<Triangle>> frames;
  for (const auto& t : times) frames.push_back(snapshot_normal_form(nf, t));
  const io::Box box = io::bounding_box(frames);
  std::filesystem::create_directories(cfg.output);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.svg", i);
    const std::string path = (std::filesystem::path(cfg.output) / name).string();
    emit(io::render_svg(frames[i], box, cfg.epsilon, g.id + " at t = " + to_string(times[i]), cfg.seed), path);
    std::cout << path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine-invariant triangulation of moving triangles"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string epsilon;
  app.add_option("--epsilon", epsilon, "accuracy for approximate output, as N/D (default 1/2^32)");
  app.add_option("--seed", cfg.seed, "seed for render colours");

  std::string file, file2, time;
  bool triangulated = false;
  auto* validate = app.add_subcommand("validate", "check every atom of an object");
  validate->add_option("input", file)->required();
  auto* part = app.add_subcommand("partition", "print the event times");
  part->add_option("input", file)->required();
  auto* tri = app.add_subcommand("triangulate", "print the normal form");
  tri->add_option("input", file)->required();
  tri->add_option("--out", cfg.output, "output file");
  auto* diff = app.add_subcommand("diff", "compare two objects by normal form");
  diff->add_option("first", file)->required();
  diff->add_option("second", file2)->required();
  auto* snap = app.add_subcommand("snapshot", "print the triangles alive at a time");
  snap->add_option("input", file)->required();
  snap->add_option("--time", time, "time as N/D")->required();
  snap->add_flag("--triangulated", triangulated, "snapshot of the normal form");
  snap->add_option("--out", cfg.output, "output file");
  auto* render = app.add_subcommand("render", "write SVG frames of the normal form");
  render->add_option("input", file)->required();
  render->add_option("--frames", cfg.frame_count, "number of frames");
  render->add_option("--out", cfg.output, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (!epsilon.empty())
      cfg.epsilon = parse_epsilon(epsilon);
    else if (const char* env = std::getenv("STNF_EPSILON"))
      cfg.epsilon = parse_epsilon(env);
  } catch (const std::exception& e) {
    std::cerr << "error: bad epsilon: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*part) return cmd_partition(file);
    if (*tri) return cmd_triangulate(file, cfg);
    if (*diff) return cmd_diff(file, file2, cfg);
    if (*snap) return cmd_snapshot(file, time, triangulated, cfg);
    if (*render) return cmd_render(file, cfg);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
