#include "gm/delaunay.hpp"

#include <algorithm>
#include <cmath>

namespace gm {

namespace {

// Hull edges are closed off by triangles through a vertex at infinity.
constexpr Index kGhost = -1;

double orient(const Point2& a, const Point2& b, const Point2& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Positive when d lies strictly inside the circle through a, b, c (counter-clockwise).
double in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d)
{
    const double adx = a[0] - d[0], ady = a[1] - d[1];
    const double bdx = b[0] - d[0], bdy = b[1] - d[1];
    const double cdx = c[0] - d[0], cdy = c[1] - d[1];
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

Edge ordered(Index a, Index b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Ghost triangles are stored as (a, b, kGhost), with the exterior to the left of a->b.
Triangle normalize(Index a, Index b, Index c)
{
    if (a == kGhost)
        return {b, c, kGhost};
    if (b == kGhost)
        return {c, a, kGhost};
    return {a, b, c};
}

bool conflicts(const std::vector<Point2>& p, const Triangle& t, const Point2& q)
{
    const auto& a = p[static_cast<std::size_t>(t[0])];
    const auto& b = p[static_cast<std::size_t>(t[1])];
    if (t[2] != kGhost)
        return in_circle(a, b, p[static_cast<std::size_t>(t[2])], q) > 0.0;
    const double o = orient(a, b, q);
    if (o != 0.0)
        return o > 0.0;
    // On the hull line: only the open segment counts.
    const double dot = (q[0] - a[0]) * (q[0] - b[0]) + (q[1] - a[1]) * (q[1] - b[1]);
    return dot < 0.0;
}

} // namespace

std::vector<Triangle> delaunay_triangulation(const std::vector<Point2>& p)
{
    const auto n = static_cast<Index>(p.size());
    if (n < 3)
        return {};
    auto at = [&](Index i) -> const Point2& { return p[static_cast<std::size_t>(i)]; };

    Index i1 = 1;
    while (i1 < n && at(i1) == at(0))
        ++i1;
    Index i2 = i1 + 1;
    while (i2 < n && orient(at(0), at(i1), at(i2)) == 0.0)
        ++i2;
    if (i2 >= n)
        return {};

    Index a = 0, b = i1, c = i2;
    if (orient(at(a), at(b), at(c)) < 0.0)
        std::swap(b, c);
    std::vector<Triangle> tris{{a, b, c}, {b, a, kGhost}, {c, b, kGhost}, {a, c, kGhost}};

    for (Index i = 1; i < n; ++i) {
        if (i == i1 || i == i2)
            continue;
        std::vector<Triangle> keep;
        std::vector<std::pair<Index, Index>> directed;
        keep.reserve(tris.size() + 4);
        for (const auto& t : tris) {
            if (conflicts(p, t, at(i))) {
                for (int e = 0; e < 3; ++e)
                    directed.emplace_back(t[static_cast<std::size_t>(e)], t[static_cast<std::size_t>((e + 1) % 3)]);
            } else {
                keep.push_back(t);
            }
        }
        if (directed.empty())
            continue; // duplicate point
        std::sort(directed.begin(), directed.end());
        for (const auto& [u, v] : directed)
            if (!std::binary_search(directed.begin(), directed.end(), std::pair<Index, Index>{v, u}))
                keep.push_back(normalize(u, v, i));
        tris = std::move(keep);
    }

    std::vector<Triangle> out;
    for (const auto& t : tris) {
        if (t[2] == kGhost)
            continue;
        Triangle s = t;
        std::sort(s.begin(), s.end());
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> triangulation_edges(const std::vector<Triangle>& triangles)
{
    std::vector<Edge> edges;
    for (const auto& t : triangles) {
        edges.push_back(ordered(t[0], t[1]));
        edges.push_back(ordered(t[1], t[2]));
        edges.push_back(ordered(t[0], t[2]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace gm
