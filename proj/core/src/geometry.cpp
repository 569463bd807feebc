#include "geometry.hpp"

#include <cassert>
#include <cstddef>

#include "icesep/model.hpp"

namespace icesep::geometry
{

Int dot(const Vec& a, const Vec& b)
{
    assert(a.size() == b.size());
    Int sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            sum += a[i] * b[i];
    return sum;
}

bool normalize_primitive(Vec& v)
{
    Int g = 0;
    for (const Int& x : v)
        g = gcd(g, x);
    if (g == 0)
        return false;
    if (g > 1)
        for (Int& x : v)
            x /= g;
    return true;
}

// ---------------------------------------------------------------------------
// Phase-1 simplex
// ---------------------------------------------------------------------------

bool feasible_nonneg(const std::vector<Vec>& cols, const Vec& rhs)
{
    const std::size_t m = rhs.size();
    const std::size_t k = cols.size();
    for (const Vec& c : cols)
        assert(c.size() == m);

    if (m == 0)
        return true;

    // Tableau rows over columns [0, k): structural, [k, k+m): artificial.
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(k + m, Rat(0)));
    std::vector<Rat> b(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        bool flip = rhs[i] < 0;
        b[i] = flip ? Rat(-rhs[i]) : Rat(rhs[i]);
        for (std::size_t j = 0; j < k; ++j)
        {
            const Int& a = cols[j][i];
            if (a != 0)
                t[i][j] = flip ? Rat(-a) : Rat(a);
        }
        t[i][k + i] = 1;
    }

    // Reduced costs for minimizing the sum of artificials.
    std::vector<Rat> cost(k + m, Rat(0));
    Rat objective(0);
    for (std::size_t i = 0; i < m; ++i)
    {
        for (std::size_t j = 0; j < k; ++j)
            cost[j] -= t[i][j];
        objective += b[i];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = k + i;

    while (true)
    {
        // Bland: smallest column with negative reduced cost.
        std::size_t enter = k + m;
        for (std::size_t j = 0; j < k + m; ++j)
            if (cost[j] < 0)
            {
                enter = j;
                break;
            }
        if (enter == k + m)
            break;

        std::size_t leave = m;
        Rat best(0);
        for (std::size_t i = 0; i < m; ++i)
        {
            if (t[i][enter] <= 0)
                continue;
            Rat ratio = b[i] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        // The phase-1 objective is bounded below by zero, so a pivot row exists.
        assert(leave != m);

        Rat piv = t[leave][enter];
        for (Rat& x : t[leave])
            x /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (i == leave || t[i][enter] == 0)
                continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < k + m; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
            b[i] -= f * b[leave];
        }
        if (cost[enter] != 0)
        {
            Rat f = cost[enter];
            for (std::size_t j = 0; j < k + m; ++j)
                if (t[leave][j] != 0)
                    cost[j] -= f * t[leave][j];
            objective += f * b[leave];
        }
        basis[leave] = enter;
    }
    return objective == 0;
}

// ---------------------------------------------------------------------------
// Row reduction helpers
// ---------------------------------------------------------------------------

void reduce_rows(std::vector<Vec>& rows)
{
    std::vector<Vec> work;
    for (Vec& r : rows)
        if (normalize_primitive(r))
            work.push_back(std::move(r));
    rows.clear();
    if (work.empty())
        return;

    const std::size_t dim = work[0].size();
    std::vector<Vec> done;
    for (std::size_t col = dim; col-- > 0;)
    {
        std::size_t idx = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (work[i][col] != 0)
            {
                idx = i;
                break;
            }
        if (idx == work.size())
            continue;
        Vec pivot = std::move(work[idx]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(idx));
        auto eliminate = [&](Vec& s) {
            if (s[col] == 0)
                return;
            Vec out(s.size());
            for (std::size_t j = 0; j < s.size(); ++j)
                out[j] = pivot[col] * s[j] - s[col] * pivot[j];
            s = std::move(out);
            normalize_primitive(s);
        };
        for (Vec& s : work)
            eliminate(s);
        for (Vec& s : done)
            eliminate(s);
        normalize_primitive(pivot);
        if (pivot[col] < 0)
            for (Int& x : pivot)
                x = -x;
        done.push_back(std::move(pivot));
        // Drop rows that became zero.
        std::vector<Vec> alive;
        for (Vec& s : work)
        {
            bool zero = true;
            for (const Int& x : s)
                if (x != 0)
                {
                    zero = false;
                    break;
                }
            if (!zero)
                alive.push_back(std::move(s));
        }
        work = std::move(alive);
    }
    rows = std::move(done);
}

void eliminate_pivots(const std::vector<Vec>& rows, Vec& v)
{
    for (const Vec& row : rows)
    {
        std::size_t col = row.size();
        for (std::size_t j = row.size(); j-- > 0;)
            if (row[j] != 0)
            {
                col = j;
                break;
            }
        if (col == row.size() || v[col] == 0)
            continue;
        const Int& p = row[col]; // positive by reduce_rows
        Vec out(v.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            out[j] = p * v[j] - v[col] * row[j];
        v = std::move(out);
    }
}

// ---------------------------------------------------------------------------
// Double description
// ---------------------------------------------------------------------------

namespace
{

struct RayRec
{
    Vec v;
    std::vector<char> tight; // per processed constraint, dot == 0
};

bool is_zero(const Vec& v)
{
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace

ConeGens dd_cone(std::size_t dim, const std::vector<Vec>& eqs, const std::vector<Vec>& ineqs)
{
    std::vector<Vec> lines;
    for (std::size_t i = 0; i < dim; ++i)
    {
        Vec e(dim, Int(0));
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<RayRec> rays;
    std::vector<Vec> processed;

    auto refresh_tight = [&]() {
        for (RayRec& r : rays)
        {
            r.tight.resize(processed.size());
            for (std::size_t t = 0; t < processed.size(); ++t)
                r.tight[t] = dot(processed[t], r.v) == 0 ? 1 : 0;
        }
    };

    auto handle = [&](const Vec& c, bool is_eq) {
        if (is_zero(c))
            return;
        // A line not orthogonal to c absorbs the constraint.
        std::size_t li = lines.size();
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (dot(c, lines[i]) != 0)
            {
                li = i;
                break;
            }
        if (li != lines.size())
        {
            Vec l0 = std::move(lines[li]);
            lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(li));
            Int d0 = dot(c, l0);
            for (Vec& l : lines)
            {
                Int dl = dot(c, l);
                if (dl == 0)
                    continue;
                Vec out(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    out[j] = d0 * l[j] - dl * l0[j];
                l = std::move(out);
                normalize_primitive(l);
            }
            Int a = d0 < 0 ? -d0 : d0;
            Int s = d0 < 0 ? Int(-1) : Int(1);
            for (RayRec& r : rays)
            {
                Int dr = dot(c, r.v);
                if (dr == 0)
                    continue;
                Vec out(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    out[j] = a * r.v[j] - s * dr * l0[j];
                r.v = std::move(out);
                normalize_primitive(r.v);
            }
            if (!is_eq)
            {
                Vec r0 = l0;
                if (d0 > 0)
                    for (Int& x : r0)
                        x = -x;
                rays.push_back({std::move(r0), {}});
            }
        }
        else
        {
            std::vector<Int> d(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i)
                d[i] = dot(c, rays[i].v);

            auto adjacent = [&](std::size_t i, std::size_t j) {
                for (std::size_t w = 0; w < rays.size(); ++w)
                {
                    if (w == i || w == j)
                        continue;
                    bool contains = true;
                    for (std::size_t t = 0; t < processed.size(); ++t)
                        if (rays[i].tight[t] && rays[j].tight[t] && !rays[w].tight[t])
                        {
                            contains = false;
                            break;
                        }
                    if (contains)
                        return false;
                }
                return true;
            };

            std::vector<RayRec> next;
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (d[i] < 0 ? !is_eq : d[i] == 0)
                    next.push_back(rays[i]);
            for (std::size_t i = 0; i < rays.size(); ++i)
            {
                if (d[i] <= 0)
                    continue;
                for (std::size_t j = 0; j < rays.size(); ++j)
                {
                    if (d[j] >= 0 || !adjacent(i, j))
                        continue;
                    Vec out(dim);
                    for (std::size_t t = 0; t < dim; ++t)
                        out[t] = d[i] * rays[j].v[t] - d[j] * rays[i].v[t];
                    if (normalize_primitive(out))
                        next.push_back({std::move(out), {}});
                }
            }
            rays = std::move(next);
        }
        processed.push_back(c);
        refresh_tight();
    };

    for (const Vec& c : eqs)
        handle(c, true);
    for (const Vec& c : ineqs)
        handle(c, false);

    ConeGens out;
    for (RayRec& r : rays)
    {
        bool dup = false;
        for (const Vec& seen : out.rays)
            if (seen == r.v)
            {
                dup = true;
                break;
            }
        if (!dup)
            out.rays.push_back(std::move(r.v));
    }
    out.lines = std::move(lines);
    return out;
}

} // namespace icesep::geometry
