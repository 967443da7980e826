#pragma once

#include <cstddef>
#include <vector>

#include "hz/polynomial.hpp"
#include "hz/value_group.hpp"

namespace hz {

struct PolygonPoint {
  std::size_t index;
  Val value;

  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

/// Hull segment between consecutive finite vertices (left.index < right.index).
struct PolygonSegment {
  PolygonPoint left;
  PolygonPoint right;

  std::size_t width() const { return right.index - left.index; }
  /// Geometric slope (v_right - v_left) / width.
  Rational slope() const;
  /// Valuation shared by the `width()` roots this segment accounts for: minus the slope.
  Rational root_valuation() const { return -slope(); }
};

/// Lower convex hull of the points (i, v(p_i)).
///
/// Vertices are finite points; the leading run of infinite points (zero
/// coefficients) is recorded as zero_root_width, the multiplicity of 0 as a root.
/// Points lying on a segment strictly between its endpoints are not vertices.
struct NewtonPolygon {
  std::vector<PolygonPoint> points;
  std::vector<PolygonPoint> vertices;
  std::size_t zero_root_width = 0;

  std::size_t degree() const { return points.size() - 1; }
  std::vector<PolygonSegment> segments() const;
};

/// An isolated (width one) piece of the polygon: the slope from k to k + 1.
/// root_valuation is infinite for the width-one run of zero coefficients at k = 0.
struct IsolatedSlope {
  std::size_t k;
  Val root_valuation;

  friend bool operator==(const IsolatedSlope&, const IsolatedSlope&) = default;
};

/// Ascending multiset of root valuations, infinity last.
using RootValuations = std::vector<Val>;

/// Throws DomainError if the last value is infinite or the list is empty.
NewtonPolygon newton_polygon_of_values(const std::vector<Val>& values);
/// Throws DomainError on the zero polynomial.
NewtonPolygon newton_polygon(const Polynomial& p);

RootValuations root_valuations(const NewtonPolygon& polygon);
RootValuations root_valuations(const Polynomial& p);

std::vector<IsolatedSlope> isolated_segments(const NewtonPolygon& polygon);

}  // namespace hz
