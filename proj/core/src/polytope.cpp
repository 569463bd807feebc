#include "icesep/polytope.hpp"

#include <algorithm>
#include <cassert>

#include "geometry.hpp"

namespace icesep
{

using geometry::Vec;

namespace
{

// Columns of the hull-membership system: one per point with a trailing 1 in
// the convexity row, one per ray/line direction with a trailing 0.
void push_hull_columns(std::vector<Vec>& cols, const std::vector<State>& points,
                       const std::vector<Vec>& rays, const std::vector<Vec>& lines, bool convexity_row)
{
    auto push = [&](const Vec& v, int last) {
        Vec col = v;
        if (convexity_row)
            col.push_back(last);
        cols.push_back(std::move(col));
    };
    for (const State& p : points)
        push(p, 1);
    for (const Vec& r : rays)
        push(r, 0);
    for (const Vec& l : lines)
    {
        push(l, 0);
        Vec neg = l;
        for (Int& x : neg)
            x = -x;
        push(neg, 0);
    }
}

bool hull_contains(const std::vector<State>& points, const std::vector<Vec>& rays,
                   const std::vector<Vec>& lines, const State& p)
{
    std::vector<Vec> cols;
    push_hull_columns(cols, points, rays, lines, /*convexity_row=*/true);
    Vec rhs = p;
    rhs.push_back(1);
    return geometry::feasible_nonneg(cols, rhs);
}

bool cone_contains(const std::vector<Vec>& rays, const std::vector<Vec>& lines, const Vec& r)
{
    std::vector<Vec> cols;
    push_hull_columns(cols, {}, rays, lines, /*convexity_row=*/false);
    return geometry::feasible_nonneg(cols, r);
}

} // namespace

PolytopeElem PolytopeElem::from_point(const State& s)
{
    PolytopeElem d(s.size());
    d.points_.push_back(s);
    d.refresh_box();
    return d;
}

std::optional<PolytopeElem> PolytopeElem::from_constraints(std::size_t dim,
                                                           const std::vector<LinearConstraint>& atoms)
{
    // Homogenize over (x, w): a.x <= b becomes (a,-b).(x,w) <= 0, plus w >= 0.
    std::vector<Vec> eqs, ineqs;
    for (const LinearConstraint& c : atoms)
    {
        if (c.coeffs.size() != dim)
            throw StructuralError("polytope atom dimension mismatch");
        Vec row = c.coeffs;
        row.push_back(-c.bound);
        (c.rel == Rel::eq ? eqs : ineqs).push_back(std::move(row));
    }
    Vec w_nonneg(dim + 1, Int(0));
    w_nonneg[dim] = -1;
    ineqs.push_back(std::move(w_nonneg));

    geometry::ConeGens gens = geometry::dd_cone(dim + 1, eqs, ineqs);

    PolytopeElem d(dim);
    for (const Vec& l : gens.lines)
    {
        assert(l[dim] == 0);
        d.lines_.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(dim));
    }
    for (const Vec& r : gens.rays)
    {
        const Int& w = r[dim];
        assert(w >= 0);
        if (w == 0)
        {
            d.rays_.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim));
            continue;
        }
        State p(dim);
        for (std::size_t i = 0; i < dim; ++i)
        {
            if (r[i] % w != 0)
                return std::nullopt; // non-integer vertex
            p[i] = r[i] / w;
        }
        d.points_.push_back(std::move(p));
    }
    if (d.points_.empty())
        return std::nullopt; // empty region
    d.minimize();
    d.refresh_box();
    return d;
}

void PolytopeElem::minimize()
{
    geometry::reduce_rows(lines_);

    // Rays: reduce modulo the line space, then keep only extreme ones.
    for (Vec& r : rays_)
    {
        geometry::eliminate_pivots(lines_, r);
        geometry::normalize_primitive(r);
    }
    std::erase_if(rays_, [](const Vec& r) {
        return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
    });
    for (std::size_t i = 0; i < rays_.size();)
    {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < rays_.size(); ++j)
            if (j != i)
                others.push_back(rays_[j]);
        bool dup = std::find(others.begin(), others.end(), rays_[i]) != others.end();
        if (dup || cone_contains(others, lines_, rays_[i]))
            rays_.erase(rays_.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }

    // Points: drop any in the hull of the remaining generators.
    for (std::size_t i = 0; i < points_.size();)
    {
        std::vector<State> others;
        for (std::size_t j = 0; j < points_.size(); ++j)
            if (j != i)
                others.push_back(points_[j]);
        bool dup = std::find(others.begin(), others.end(), points_[i]) != others.end();
        if (dup || (!others.empty() && hull_contains(others, rays_, lines_, points_[i])))
            points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    assert(!points_.empty());
    facet_cache_.reset();
}

void PolytopeElem::refresh_box()
{
    box_lo_.assign(dim_, std::nullopt);
    box_hi_.assign(dim_, std::nullopt);
    for (std::size_t i = 0; i < dim_; ++i)
    {
        bool open_lo = false, open_hi = false;
        for (const Vec& r : rays_)
        {
            open_lo = open_lo || r[i] < 0;
            open_hi = open_hi || r[i] > 0;
        }
        for (const Vec& l : lines_)
            if (l[i] != 0)
                open_lo = open_hi = true;
        if (open_lo && open_hi)
            continue;
        Int lo = points_[0][i], hi = points_[0][i];
        for (const State& p : points_)
        {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        if (!open_lo)
            box_lo_[i] = lo;
        if (!open_hi)
            box_hi_[i] = hi;
    }
}

bool PolytopeElem::in_box(const State& p) const
{
    for (std::size_t i = 0; i < dim_; ++i)
    {
        if (box_lo_[i] && p[i] < *box_lo_[i])
            return false;
        if (box_hi_[i] && p[i] > *box_hi_[i])
            return false;
    }
    return true;
}

bool PolytopeElem::contains(const State& p) const
{
    if (p.size() != dim_)
        throw StructuralError("polytope membership dimension mismatch");
    if (!in_box(p))
        return false;
    return hull_contains(points_, rays_, lines_, p);
}

bool PolytopeElem::subset_of(const PolytopeElem& other) const
{
    if (dim_ != other.dim_)
        throw StructuralError("polytope comparison dimension mismatch");
    for (const State& p : points_)
        if (!other.contains(p))
            return false;
    for (const Vec& r : rays_)
        if (!cone_contains(other.rays_, other.lines_, r))
            return false;
    for (const Vec& l : lines_)
    {
        Vec neg = l;
        for (Int& x : neg)
            x = -x;
        if (!cone_contains(other.rays_, other.lines_, l) ||
            !cone_contains(other.rays_, other.lines_, neg))
            return false;
    }
    return true;
}

const std::vector<LinearConstraint>& PolytopeElem::facets() const
{
    if (facet_cache_)
        return *facet_cache_;

    // Facets are extreme rays of the polar cone of the homogenization; dual
    // lines give the affine hull.
    std::vector<Vec> dual_ineqs, dual_eqs;
    for (const State& p : points_)
    {
        Vec v = p;
        v.push_back(1);
        dual_ineqs.push_back(std::move(v));
    }
    for (const Vec& r : rays_)
    {
        Vec v = r;
        v.push_back(0);
        dual_ineqs.push_back(std::move(v));
    }
    for (const Vec& l : lines_)
    {
        Vec v = l;
        v.push_back(0);
        dual_eqs.push_back(std::move(v));
    }
    geometry::ConeGens dual = geometry::dd_cone(dim_ + 1, dual_eqs, dual_ineqs);

    // Rows in [rhs, a_0 .. a_(n-1)] layout: pivots are chosen from the
    // highest variable down, so facets come out over the earliest variables.
    auto to_row = [&](const Vec& y) {
        Vec row(dim_ + 1);
        row[0] = -y[dim_];
        for (std::size_t i = 0; i < dim_; ++i)
            row[i + 1] = y[i];
        return row;
    };

    std::vector<Vec> eq_rows;
    for (const Vec& l : dual.lines)
        eq_rows.push_back(to_row(l));
    geometry::reduce_rows(eq_rows);

    auto result = std::make_shared<std::vector<LinearConstraint>>();
    for (const Vec& row : eq_rows)
    {
        std::vector<Int> coeffs(row.begin() + 1, row.end());
        auto c = make_eq(std::move(coeffs), row[0]);
        assert(c); // affine hull of integer points has integer solutions
        result->push_back(std::move(*c));
    }

    std::vector<LinearConstraint> ineq;
    for (const Vec& y : dual.rays)
    {
        Vec row = to_row(y);
        geometry::eliminate_pivots(eq_rows, row);
        std::vector<Int> coeffs(row.begin() + 1, row.end());
        bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Int& x) { return x == 0; });
        if (zero)
        {
            assert(row[0] >= 0); // trivial 0 <= b
            continue;
        }
        ineq.push_back(make_le(std::move(coeffs), row[0]));
    }
    std::sort(ineq.begin(), ineq.end());
    ineq.erase(std::unique(ineq.begin(), ineq.end()), ineq.end());
    result->insert(result->end(), ineq.begin(), ineq.end());

    facet_cache_ = std::move(result);
    return *facet_cache_;
}

PolytopeElem poly_join(const PolytopeElem& a, const PolytopeElem& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("polytope join dimension mismatch");
    PolytopeElem d(a.dim());
    d.points_ = a.points_;
    d.points_.insert(d.points_.end(), b.points_.begin(), b.points_.end());
    d.rays_ = a.rays_;
    d.rays_.insert(d.rays_.end(), b.rays_.begin(), b.rays_.end());
    d.lines_ = a.lines_;
    d.lines_.insert(d.lines_.end(), b.lines_.begin(), b.lines_.end());
    d.minimize();
    d.refresh_box();
    return d;
}

bool poly_join_contains(const PolytopeElem& a, const PolytopeElem& b, const State& p)
{
    if (a.dim() != b.dim() || p.size() != a.dim())
        throw StructuralError("polytope join dimension mismatch");
    std::vector<State> points = a.points_;
    points.insert(points.end(), b.points_.begin(), b.points_.end());
    std::vector<Vec> rays = a.rays_;
    rays.insert(rays.end(), b.rays_.begin(), b.rays_.end());
    std::vector<Vec> lines = a.lines_;
    lines.insert(lines.end(), b.lines_.begin(), b.lines_.end());
    return hull_contains(points, rays, lines, p);
}

} // namespace icesep
