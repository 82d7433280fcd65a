// Copyright 2026 The qprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qprob/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "qprob/suprematism.hpp"

namespace qprob::svg {
namespace {

constexpr double kScale = 200.0;  // px per unit length
constexpr double kMargin = 40.0;

std::string num(double v) {
  std::string s = fmt::format("{:.3f}", v);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Canvas {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool empty = true;
  std::vector<std::string> body;
  std::vector<std::string> footer;

  // Model coordinates: y up. SVG: y down.
  Point2 map(Point2 p, double offset_x) const {
    return {offset_x + kScale * p.x, -kScale * p.y};
  }

  void grow(Point2 q) {
    if (empty) {
      min_x = max_x = q.x;
      min_y = max_y = q.y;
      empty = false;
      return;
    }
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }

  void polygon(const std::vector<Point2>& pts, double offset_x,
               std::string_view style) {
    std::string list;
    for (const Point2& p : pts) {
      const Point2 q = map(p, offset_x);
      grow(q);
      if (!list.empty()) list += ' ';
      list += num(q.x) + "," + num(q.y);
    }
    body.push_back(fmt::format("  <polygon points=\"{}\" {}/>", list, style));
  }

  void circle(Point2 p, double offset_x, double r, std::string_view style) {
    const Point2 q = map(p, offset_x);
    grow(q);
    body.push_back(fmt::format("  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>",
                               num(q.x), num(q.y), num(r), style));
  }

  void text(Point2 p, double offset_x, double dx, double dy,
            std::string_view content, std::string_view extra = "") {
    const Point2 q = map(p, offset_x);
    body.push_back(fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
        "font-size=\"14\"{}>{}</text>",
        num(q.x + dx), num(q.y + dy), extra, content));
  }

  std::string render(std::string_view caption) const {
    const double x0 = min_x - kMargin;
    const double y0 = min_y - kMargin;
    const double w = (max_x - min_x) + 2 * kMargin;
    const double h =
        (max_y - min_y) + 2 * kMargin + 30.0 + 18.0 * footer.size();
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" "
        "width=\"{}\" height=\"{}\">\n",
        num(x0), num(y0), num(w), num(h), num(w), num(h));
    out += fmt::format("  <title>{}</title>\n", caption);
    out += fmt::format(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        num(x0), num(y0), num(w), num(h));
    for (const auto& line : body) out += line + "\n";
    double y = max_y + kMargin;
    for (const auto& line : footer) {
      out += fmt::format(
          "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
          "font-size=\"13\">{}</text>\n",
          num(x0 + 10), num(y), line);
      y += 18.0;
    }
    out += fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
        "font-size=\"13\">{}</text>\n",
        num(x0 + 10), num(y + 15.0), caption);
    out += "</svg>\n";
    return out;
  }
};

constexpr std::string_view kReferenceStyle =
    "fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\"";
constexpr std::string_view kInnerStyle =
    "fill=\"#f2d7a0\" fill-opacity=\"0.6\" stroke=\"#202020\" "
    "stroke-width=\"2\"";
constexpr std::array<std::string_view, 3> kSquareFill{"#c8102e", "#1d3c8f",
                                                       "#111111"};

void draw_triangle(Canvas& c, const ProbTriple& p, std::string_view tag,
                   double offset_x) {
  const auto ref = reference_triangle();
  c.polygon({ref[0], ref[1], ref[2]}, offset_x, kReferenceStyle);
  const TrianglePicture pic = triangle_picture(p);
  c.polygon({pic.vertices[0], pic.vertices[1], pic.vertices[2]}, offset_x,
            kInnerStyle);
  for (int k = 0; k < 3; ++k) {
    c.circle(pic.vertices[k], offset_x, 4.0, "fill=\"#202020\"");
    c.text(pic.vertices[k], offset_x, 6.0, -6.0,
           fmt::format("A{}{}", k + 1, tag));
  }
  c.footer.push_back(fmt::format("p{} = ({}, {}, {})  S{} = {}", tag,
                                 num(p.p1), num(p.p2), num(p.p3), tag,
                                 num(pic.total_area)));
}

}  // namespace

std::string triangle_figure(const ProbTriple& p, std::string_view tag,
                            std::string_view caption) {
  Canvas c;
  draw_triangle(c, p, tag, 0.0);
  return c.render(caption);
}

std::string malevich_squares_figure(const ProbTriple& p, std::string_view tag,
                                    std::string_view caption) {
  Canvas c;
  const TrianglePicture pic = triangle_picture(p);
  const auto ref = reference_triangle();
  Point2 g{0, 0};
  for (const auto& v : pic.vertices) {
    g.x += v.x / 3.0;
    g.y += v.y / 3.0;
  }
  const auto& v = pic.vertices;
  const double cross = (v[1].x - v[0].x) * (v[2].y - v[0].y) -
                       (v[1].y - v[0].y) * (v[2].x - v[0].x);
  if (std::fabs(cross) < 1e-12) {
    g = {(ref[0].x + ref[1].x + ref[2].x) / 3.0,
         (ref[0].y + ref[1].y + ref[2].y) / 3.0};
  }
  c.polygon({ref[0], ref[1], ref[2]}, 0.0, kReferenceStyle);
  for (int k = 0; k < 3; ++k) {
    const Point2 a = v[k];
    const Point2 b = v[(k + 1) % 3];
    Point2 n{-(b.y - a.y), b.x - a.x};
    const Point2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    if (n.x * (mid.x - g.x) + n.y * (mid.y - g.y) < 0) n = {-n.x, -n.y};
    if (pic.side_lengths[k] == 0.0) continue;
    const Point2 c2{b.x + n.x, b.y + n.y};
    const Point2 c3{a.x + n.x, a.y + n.y};
    c.polygon({a, b, c2, c3}, 0.0,
              fmt::format("fill=\"{}\" fill-opacity=\"0.85\" "
                          "stroke=\"#202020\" stroke-width=\"1\"",
                          kSquareFill[k]));
    const Point2 centre{0.5 * (a.x + c2.x), 0.5 * (a.y + c2.y)};
    c.text(centre, 0.0, -20.0, 5.0, num(pic.square_areas[k]),
           " fill=\"white\"");
  }
  c.polygon({v[0], v[1], v[2]}, 0.0, kInnerStyle);
  for (int k = 0; k < 3; ++k) {
    c.text(v[k], 0.0, 6.0, -6.0, fmt::format("A{}{}", k + 1, tag));
  }
  c.footer.push_back(fmt::format("S{} = {}", tag, num(pic.total_area)));
  return c.render(caption);
}

std::string triangle_pair_figure(const ProbTriple& left,
                                 std::string_view left_tag,
                                 const ProbTriple& right,
                                 std::string_view right_tag,
                                 std::string_view caption) {
  Canvas c;
  draw_triangle(c, left, left_tag, 0.0);
  draw_triangle(c, right, right_tag, kScale * (kReferenceSide + 0.6));
  return c.render(caption);
}

}  // namespace qprob::svg
