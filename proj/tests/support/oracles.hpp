#pragma once

// Independent brute-force oracles used by the property and acceptance
// suites. These deliberately avoid the code paths they check: the octagon
// oracle computes template maxima straight from the point sets, the 2-D hull
// oracle uses integer cross products, and the reachability oracle walks the
// transition relation by direct evaluation.

#include <optional>
#include <set>
#include <vector>

#include "icesep/model.hpp"
#include "icesep/octagon.hpp"

namespace icesep::testing
{

// Template-max octagon of a finite point set: entry (i, j) is the maximum of
// v_j - v_i over the points. Such a matrix is tightly closed by
// construction, so it can be compared entrywise against OctagonElem.
inline Int oracle_oct_entry(const std::vector<State>& points, std::size_t i, std::size_t j)
{
    auto doubled = [](const State& p, std::size_t v) { return (v & 1) ? -p[v / 2] : p[v / 2]; };
    Int best = doubled(points[0], j) - doubled(points[0], i);
    for (const State& p : points)
        best = std::max(best, doubled(p, j) - doubled(p, i));
    return best;
}

inline bool oracle_oct_equals(const std::vector<State>& points, const OctagonElem& d)
{
    std::size_t N = 2 * d.dim();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
        {
            const auto& e = d.entry(i, j);
            if (!e || *e != oracle_oct_entry(points, i, j))
                return false;
        }
    return true;
}

// Exact half-plane test: p lies in the convex hull of the 2-D points iff it
// is on the inner side of every supporting line through two of them (with
// collinear sets handled along their carrier line).
inline bool oracle_hull2_contains(const std::vector<State>& pts, const State& p)
{
    auto cross = [](const State& a, const State& b, const State& c) {
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    };
    if (pts.empty())
        return false;
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i)
        collinear = cross(pts[0], pts[1], pts[i]) == 0;
    if (pts.size() == 1 || (pts.size() >= 2 && pts[0] == pts[1] && pts.size() == 2))
        collinear = true;
    if (collinear)
    {
        // Degenerate hull: a point or a segment.
        std::size_t far = 0;
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i] != pts[0])
                far = i;
        if (far == 0)
            return p == pts[0];
        if (cross(pts[0], pts[far], p) != 0)
            return false;
        Int dx = pts[far][0] - pts[0][0], dy = pts[far][1] - pts[0][1];
        Int proj = dx * (p[0] - pts[0][0]) + dy * (p[1] - pts[0][1]);
        Int lo = 0, hi = dx * dx + dy * dy;
        for (const State& q : pts)
        {
            Int t = dx * (q[0] - pts[0][0]) + dy * (q[1] - pts[0][1]);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        return proj >= lo && proj <= hi;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
        {
            if (i == j)
                continue;
            bool all_left = true;
            for (const State& q : pts)
                if (cross(pts[i], pts[j], q) < 0)
                {
                    all_left = false;
                    break;
                }
            if (all_left && cross(pts[i], pts[j], p) < 0)
                return false;
        }
    return true;
}

// Bad state reachable from Init within the box, by breadth-first search over
// direct transition evaluation. Returns a witness when one exists.
inline std::optional<State> oracle_reachable_bad(const TranSys& sys, const Int& bound)
{
    std::vector<State> box;
    State s(sys.dim(), -bound);
    while (true)
    {
        box.push_back(s);
        std::size_t i = s.size();
        while (i-- > 0)
        {
            if (s[i] < bound)
            {
                ++s[i];
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    s[j] = -bound;
                break;
            }
            if (i == 0)
                goto done;
        }
    }
done:
    std::set<State> reached;
    std::vector<State> frontier;
    for (const State& q : box)
        if (eval_formula(sys.init, q))
        {
            reached.insert(q);
            frontier.push_back(q);
        }
    while (!frontier.empty())
    {
        std::vector<State> next;
        for (const State& q : frontier)
        {
            if (!eval_formula(sys.good, q))
                return q;
            for (const State& r : box)
                if (!reached.count(r) && eval_trans(sys.trans, q, r))
                {
                    reached.insert(r);
                    next.push_back(r);
                }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

// Inductiveness and adequacy of a formula over the box, by direct
// evaluation of the three conditions.
inline bool oracle_inductive(const TranSys& sys, const Formula& inv, const Int& bound)
{
    std::vector<State> box;
    State s(sys.dim(), -bound);
    while (true)
    {
        box.push_back(s);
        std::size_t i = s.size();
        bool more = false;
        while (i-- > 0)
        {
            if (s[i] < bound)
            {
                ++s[i];
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    s[j] = -bound;
                more = true;
                break;
            }
        }
        if (!more)
            break;
    }
    std::vector<const State*> in_inv, out_inv;
    for (const State& q : box)
    {
        bool in = eval_formula(inv, q);
        if (in && !eval_formula(sys.good, q))
            return false;
        if (!in && eval_formula(sys.init, q))
            return false;
        (in ? in_inv : out_inv).push_back(&q);
    }
    for (const State* q : in_inv)
        for (const State* r : out_inv)
            if (eval_trans(sys.trans, *q, *r))
                return false;
    return true;
}

} // namespace icesep::testing
