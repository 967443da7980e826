#include "hz/newton_polygon.hpp"

#include <algorithm>

#include "hz/errors.hpp"

namespace hz {

Rational PolygonSegment::slope() const {
  return (right.value.finite() - left.value.finite()) / Rational(static_cast<long>(width()));
}

std::vector<PolygonSegment> NewtonPolygon::segments() const {
  std::vector<PolygonSegment> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back({vertices[i], vertices[i + 1]});
  return out;
}

NewtonPolygon newton_polygon_of_values(const std::vector<Val>& values) {
  if (values.empty()) throw DomainError("Newton polygon of the zero polynomial");
  if (values.back().is_infinite()) throw DomainError("leading coefficient has infinite valuation");

  NewtonPolygon np;
  for (std::size_t i = 0; i < values.size(); ++i) np.points.push_back({i, values[i]});
  while (values[np.zero_root_width].is_infinite()) ++np.zero_root_width;

  // From each vertex, the next one is the finite point of least slope; among
  // equal slopes the farthest wins, so collinear interior points are skipped.
  const std::size_t d = values.size() - 1;
  std::size_t current = np.zero_root_width;
  np.vertices.push_back(np.points[current]);
  while (current < d) {
    std::size_t best = 0;
    Rational best_slope;
    for (std::size_t j = current + 1; j <= d; ++j) {
      if (values[j].is_infinite()) continue;
      const Rational slope =
          (values[j].finite() - values[current].finite()) / Rational(static_cast<long>(j - current));
      if (best == 0 || slope <= best_slope) {
        best = j;
        best_slope = slope;
      }
    }
    current = best;
    np.vertices.push_back(np.points[current]);
  }
  return np;
}

NewtonPolygon newton_polygon(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  std::vector<Val> values;
  values.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) values.push_back(p.field()->val(c));
  return newton_polygon_of_values(values);
}

RootValuations root_valuations(const NewtonPolygon& polygon) {
  RootValuations out;
  for (const auto& seg : polygon.segments()) out.insert(out.end(), seg.width(), Val(seg.root_valuation()));
  out.insert(out.end(), polygon.zero_root_width, Val::infinity());
  std::sort(out.begin(), out.end());
  return out;
}

RootValuations root_valuations(const Polynomial& p) { return root_valuations(newton_polygon(p)); }

std::vector<IsolatedSlope> isolated_segments(const NewtonPolygon& polygon) {
  std::vector<IsolatedSlope> out;
  if (polygon.zero_root_width == 1) out.push_back({0, Val::infinity()});
  for (const auto& seg : polygon.segments())
    if (seg.width() == 1) out.push_back({seg.left.index, Val(seg.root_valuation())});
  return out;
}

}  // namespace hz
