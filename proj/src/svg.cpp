#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polylab {

namespace {

struct Box {
  double x0, y0, x1, y1;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// clip line a x + b y + c = 0 to the box; false when it misses
bool clip_line(double a, double b, double c, const Box& box, double& px0, double& py0, double& px1, double& py1) {
  std::vector<std::pair<double, double>> hits;
  auto push = [&](double x, double y) {
    for (auto& h : hits)
      if (std::abs(h.first - x) + std::abs(h.second - y) < 1e-9) return;
    hits.push_back({x, y});
  };
  if (std::abs(b) > 1e-12) {
    for (double x : {box.x0, box.x1}) {
      double y = -(a * x + c) / b;
      if (y >= box.y0 - 1e-9 && y <= box.y1 + 1e-9) push(x, y);
    }
  }
  if (std::abs(a) > 1e-12) {
    for (double y : {box.y0, box.y1}) {
      double x = -(b * y + c) / a;
      if (x >= box.x0 - 1e-9 && x <= box.x1 + 1e-9) push(x, y);
    }
  }
  if (hits.size() < 2) return false;
  px0 = hits[0].first;
  py0 = hits[0].second;
  px1 = hits[1].first;
  py1 = hits[1].second;
  return true;
}

}  // namespace

std::string render_svg(const Arrangement& lines) {
  if (lines.kind() != Kind::Lines) throw Error(Errc::DomainError, "render expects a line arrangement");
  if (!lines.field().is_rationals()) throw Error(Errc::DomainError, "field not orderable");
  auto sing = singular_points(lines);
  Box box{-1, -1, 1, 1};
  bool have = false;
  std::vector<std::pair<double, double>> pts;
  for (auto& [p, mult] : sing) {
    if (p.t[2].is_zero()) continue;  // points at infinity do not steer the viewport
    double x = (p.t[0] / p.t[2]).rational().get_d();
    double y = (p.t[1] / p.t[2]).rational().get_d();
    pts.push_back({x, y});
    if (!have) {
      box = {x, y, x, y};
      have = true;
    } else {
      box.x0 = std::min(box.x0, x);
      box.y0 = std::min(box.y0, y);
      box.x1 = std::max(box.x1, x);
      box.y1 = std::max(box.y1, y);
    }
  }
  double w = std::max(box.x1 - box.x0, 1e-3), h = std::max(box.y1 - box.y0, 1e-3);
  double pad = 0.2 * std::max(w, h);
  box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};
  w = box.x1 - box.x0;
  h = box.y1 - box.y0;
  const double scale = 640.0 / std::max(w, h);
  auto X = [&](double x) { return (x - box.x0) * scale; };
  auto Y = [&](double y) { return (box.y1 - y) * scale; };  // flip for screen coordinates
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w * scale) + "\" height=\"" +
                    fmt(h * scale) + "\" viewBox=\"0 0 " + fmt(w * scale) + " " + fmt(h * scale) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Triple& t = lines.member(i);
    double a = t[0].rational().get_d(), b = t[1].rational().get_d(), c = t[2].rational().get_d();
    if (std::abs(a) < 1e-12 && std::abs(b) < 1e-12) continue;  // the line at infinity has no affine trace
    double x0, y0, x1, y1;
    if (!clip_line(a, b, c, box, x0, y0, x1, y1)) continue;
    svg += "<line x1=\"" + fmt(X(x0)) + "\" y1=\"" + fmt(Y(y0)) + "\" x2=\"" + fmt(X(x1)) + "\" y2=\"" +
           fmt(Y(y1)) + "\" stroke=\"#225\" stroke-width=\"1.2\"/>\n";
  }
  for (auto& [x, y] : pts) {
    svg += "<circle cx=\"" + fmt(X(x)) + "\" cy=\"" + fmt(Y(y)) + "\" r=\"2.5\" fill=\"#a22\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace polylab
