#include "salsa/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace salsa {

double orient2d(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double al = adx * adx + ady * ady;
    const double bl = bdx * bdx + bdy * bdy;
    const double cl = cdx * cdx + cdy * cdy;
    return adx * (bdy * cl - bl * cdy) - ady * (bdx * cl - bl * cdx) + al * (bdx * cdy - bdy * cdx);
}

namespace {

std::uint64_t undirected_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

DelaunayTriangulation::DelaunayTriangulation(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n < 3) throw std::invalid_argument("Delaunay triangulation needs at least 3 points");

    double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
    for (const auto& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double cx = 0.5 * (min_x + max_x), cy = 0.5 * (min_y + max_y);
    constexpr double kScale = 1000.0;

    std::vector<Point> verts(points.begin(), points.end());
    verts.push_back({cx - kScale * span, cy - kScale * span});
    verts.push_back({cx + kScale * span, cy - kScale * span});
    verts.push_back({cx, cy + kScale * span});
    const auto s0 = static_cast<NodeId>(n);

    std::vector<Triangle> tris{{s0, s0 + 1, s0 + 2}};
    tris.reserve(2 * n + 8);

    struct DirectedEdge {
        std::uint64_t key;
        NodeId from;
        NodeId to;
    };
    std::vector<char> bad;
    std::vector<DirectedEdge> cavity;
    std::vector<Triangle> kept;

    for (NodeId p = 0; p < static_cast<NodeId>(n); ++p) {
        const Point& pp = verts[p];
        bad.assign(tris.size(), 0);
        cavity.clear();
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& [a, b, c] = tris[t];
            const double det = in_circle(verts[a], verts[b], verts[c], pp);
            const bool inside = det > 0.0 || (det == 0.0 && p < std::min({a, b, c}));
            if (!inside) continue;
            bad[t] = 1;
            cavity.push_back({undirected_key(a, b), a, b});
            cavity.push_back({undirected_key(b, c), b, c});
            cavity.push_back({undirected_key(c, a), c, a});
        }
        std::sort(cavity.begin(), cavity.end(),
                  [](const DirectedEdge& x, const DirectedEdge& y) { return x.key < y.key; });

        kept.clear();
        for (std::size_t t = 0; t < tris.size(); ++t) {
            if (!bad[t]) kept.push_back(tris[t]);
        }
        for (std::size_t i = 0; i < cavity.size();) {
            std::size_t j = i;
            while (j < cavity.size() && cavity[j].key == cavity[i].key) ++j;
            // Interior cavity edges appear twice; the boundary appears once.
            if (j - i == 1) kept.push_back({cavity[i].from, cavity[i].to, p});
            i = j;
        }
        tris.swap(kept);
    }

    std::vector<std::uint64_t> keys;
    keys.reserve(3 * tris.size());
    for (const auto& t : tris) {
        const bool real = t[0] < s0 && t[1] < s0 && t[2] < s0;
        if (real) triangles_.push_back(t);
        for (int i = 0; i < 3; ++i) {
            const NodeId a = t[i], b = t[(i + 1) % 3];
            if (a < s0 && b < s0) keys.push_back(undirected_key(a, b));
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    edges_.reserve(keys.size());
    for (auto k : keys) {
        edges_.push_back({static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xffffffffULL)});
    }
}

}  // namespace salsa
