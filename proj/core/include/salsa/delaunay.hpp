#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "salsa/graph.hpp"

namespace salsa {

struct Point {
    double x;
    double y;
};

// Counter-clockwise vertex triple.
using Triangle = std::array<NodeId, 3>;

// Bowyer-Watson triangulation of at least three points, inserted in index
// order inside an enclosing super triangle.
//
// In-circle decisions use double precision. An exact zero determinant
// (cocircular points) is resolved as if the inserted point were perturbed
// by a symbolic epsilon scaled by its index: the point counts as inside iff
// its index is lower than every vertex of the triangle.
class DelaunayTriangulation {
public:
    explicit DelaunayTriangulation(std::span<const Point> points);

    // Triangles whose three vertices are all input points.
    const std::vector<Triangle>& triangles() const { return triangles_; }
    // Every edge between two input points that appears in the final
    // triangulation, including edges on the boundary of the super triangle fan.
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<Triangle> triangles_;
    std::vector<Edge> edges_;
};

// Orientation determinant of (a, b, c); positive when counter-clockwise.
double orient2d(const Point& a, const Point& b, const Point& c);
// Positive when d lies strictly inside the circumcircle of the CCW triangle abc.
double in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace salsa
