#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stnf/pipeline/pipeline.hpp"

namespace stnf::io {

// Malformed input. Syntax errors carry a 1-based line and column, schema
// errors the JSON pointer of the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::optional<std::pair<int, int>> position = std::nullopt)
      : std::runtime_error(what), position_(position) {}
  const std::optional<std::pair<int, int>>& position() const { return position_; }

 private:
  std::optional<std::pair<int, int>> position_;
};

// {"id": ..., "atoms": [...]} or a bare atom list. A "partition" member is ignored.
GeometricObject read_object(const std::string& text);
GeometricObject read_object_file(const std::string& path);

std::string write_object(const GeometricObject& g);
std::string write_normal_form(const NormalForm& nf, const std::string& id);
std::string write_partition(const EventList& chi);
std::string write_triangles(const std::vector<Triangle>& ts);

// x rounded to the nearest multiple of 10^-k, the coarsest power of ten not above eps.
std::string decimal(const Rational& x, const Rational& eps);

struct Box {
  Rational xmin, ymin, xmax, ymax;
};

Box bounding_box(const std::vector<std::vector<Triangle>>& frames);

// One SVG 1.1 document; y grows upward as in the input.
std::string render_svg(const std::vector<Triangle>& ts, const Box& box, const Rational& eps,
                       const std::string& title, std::uint64_t seed);

}  // namespace stnf::io
