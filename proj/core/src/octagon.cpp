#include "icesep/octagon.hpp"

#include <cassert>

namespace icesep
{

namespace
{

using Entry = std::optional<Int>;

Entry add(const Entry& a, const Entry& b)
{
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

// min with nullopt as +inf
bool tighten(Entry& into, const Entry& with)
{
    if (!with)
        return false;
    if (!into || *with < *into)
    {
        into = with;
        return true;
    }
    return false;
}

// Valuation of the doubled variables at a point: v_{2k} = p_k, v_{2k+1} = -p_k.
Int doubled(const State& p, std::size_t i)
{
    return (i & 1) ? -p[i / 2] : p[i / 2];
}

} // namespace

OctagonElem OctagonElem::from_point(const State& s)
{
    std::size_t n = s.size();
    std::vector<Entry> m(4 * n * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j)
            m[i * 2 * n + j] = doubled(s, j) - doubled(s, i);
    return OctagonElem(n, std::move(m));
}

std::optional<OctagonElem> OctagonElem::from_constraints(std::size_t dim,
                                                         const std::vector<LinearConstraint>& atoms)
{
    std::size_t N = 2 * dim;
    std::vector<Entry> m(N * N);
    for (std::size_t i = 0; i < N; ++i)
        m[i * N + i] = 0;

    auto bound_arc = [&](std::size_t i, std::size_t j, const Int& c) {
        tighten(m[i * N + j], Entry(c));
        tighten(m[(j ^ 1) * N + (i ^ 1)], Entry(c)); // coherent twin
    };

    // One direction of an octagonal constraint: sum of +/-1 coefficients.
    auto apply_le = [&](const std::vector<Int>& coeffs, const Int& b) -> bool {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < dim; ++i)
            if (coeffs[i] != 0)
            {
                if (coeffs[i] != 1 && coeffs[i] != -1)
                    return false;
                vars.push_back(i);
            }
        if (vars.size() == 1)
        {
            std::size_t k = vars[0];
            // +/-x_k <= b encodes as an arc of weight 2b between 2k and 2k+1.
            if (coeffs[k] > 0)
                bound_arc(2 * k + 1, 2 * k, 2 * b);
            else
                bound_arc(2 * k, 2 * k + 1, 2 * b);
            return true;
        }
        if (vars.size() == 2)
        {
            std::size_t i = vars[0], j = vars[1];
            bool pi = coeffs[i] > 0, pj = coeffs[j] > 0;
            if (pi && pj)
                bound_arc(2 * i + 1, 2 * j, b);
            else if (pi && !pj)
                bound_arc(2 * j, 2 * i, b);
            else if (!pi && pj)
                bound_arc(2 * i, 2 * j, b);
            else
                bound_arc(2 * i, 2 * j + 1, b);
            return true;
        }
        return false;
    };

    for (const LinearConstraint& c : atoms)
    {
        if (c.coeffs.size() != dim)
            throw StructuralError("octagon atom dimension mismatch");
        if (!apply_le(c.coeffs, c.bound))
            return std::nullopt;
        if (c.rel == Rel::eq)
        {
            std::vector<Int> neg(c.coeffs);
            for (Int& a : neg)
                a = -a;
            if (!apply_le(neg, -c.bound))
                return std::nullopt;
        }
    }

    OctagonElem oct(dim, std::move(m));
    if (!oct.close())
        return std::nullopt;
    return oct;
}

bool OctagonElem::close()
{
    std::size_t N = 2 * n_;
    auto at = [&](std::size_t i, std::size_t j) -> Entry& { return m_[i * N + j]; };

    bool dirty = true;
    while (dirty)
    {
        dirty = false;
        // shortest paths
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t i = 0; i < N; ++i)
            {
                if (!at(i, k))
                    continue;
                for (std::size_t j = 0; j < N; ++j)
                    if (tighten(at(i, j), add(at(i, k), at(k, j))))
                        dirty = true;
            }
        for (std::size_t i = 0; i < N; ++i)
            if (*at(i, i) < 0)
                return false;
        // integer tightening: unary bounds are even on the doubled encoding
        for (std::size_t i = 0; i < N; ++i)
        {
            Entry& u = at(i, i ^ 1);
            if (u && (*u) % 2 != 0)
            {
                u = floor_div(*u, 2) * 2;
                dirty = true;
            }
        }
        for (std::size_t i = 0; i < N; ++i)
        {
            Entry s = add(at(i, i ^ 1), at(i ^ 1, i));
            if (s && *s < 0)
                return false;
        }
        // strong coherence: v_j - v_i <= (bound(2v_j) + bound(-2v_i)) / 2
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
            {
                if (i == j)
                    continue;
                const Entry& a = at(i, i ^ 1);
                const Entry& b = at(j ^ 1, j);
                if (a && b)
                    if (tighten(at(i, j), Entry((*a + *b) / 2)))
                        dirty = true;
            }
    }
    for (std::size_t i = 0; i < N; ++i)
        at(i, i) = 0;
    return true;
}

OctagonElem oct_join(const OctagonElem& a, const OctagonElem& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("octagon join dimension mismatch");
    std::size_t N = 2 * a.dim();
    std::vector<Entry> m(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
        {
            const Entry& x = a.entry(i, j);
            const Entry& y = b.entry(i, j);
            m[i * N + j] = (x && y) ? Entry(std::max(*x, *y)) : std::nullopt;
        }
    OctagonElem joined(a.dim(), std::move(m));
    bool nonempty = joined.close(); // already closed in theory; keeps the invariant explicit
    assert(nonempty);
    (void)nonempty;
    return joined;
}

bool oct_member(const State& p, const OctagonElem& d)
{
    if (p.size() != d.dim())
        throw StructuralError("octagon membership dimension mismatch");
    std::size_t N = 2 * d.dim();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
        {
            const Entry& e = d.entry(i, j);
            if (e && doubled(p, j) - doubled(p, i) > *e)
                return false;
        }
    return true;
}

bool oct_leq(const OctagonElem& a, const OctagonElem& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("octagon comparison dimension mismatch");
    std::size_t N = 2 * a.dim();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
        {
            const Entry& x = a.entry(i, j);
            const Entry& y = b.entry(i, j);
            if (!y)
                continue;
            if (!x || *x > *y)
                return false;
        }
    return true;
}

std::vector<LinearConstraint> oct_constraints(const OctagonElem& d)
{
    std::size_t n = d.dim();
    std::vector<LinearConstraint> out;
    auto emit = [&](const Int& ci, std::size_t i, const Int& cj, std::size_t j, const Int& b) {
        std::vector<Int> coeffs(n, Int(0));
        coeffs[i] = ci;
        if (i != j)
            coeffs[j] = cj;
        out.push_back(make_le(std::move(coeffs), b));
    };
    for (std::size_t k = 0; k < n; ++k)
    {
        const auto& up = d.entry(2 * k + 1, 2 * k); // 2 x_k <= .
        const auto& dn = d.entry(2 * k, 2 * k + 1); // -2 x_k <= .
        if (up)
            emit(1, k, 0, k, *up / 2);
        if (dn)
            emit(-1, k, 0, k, *dn / 2);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const auto& pp = d.entry(2 * i + 1, 2 * j);     //  x_i + x_j
            const auto& pm = d.entry(2 * j, 2 * i);         //  x_i - x_j
            const auto& mp = d.entry(2 * i, 2 * j);         // -x_i + x_j
            const auto& mm = d.entry(2 * i, 2 * j + 1);     // -x_i - x_j
            if (pp)
                emit(1, i, 1, j, *pp);
            if (pm)
                emit(1, i, -1, j, *pm);
            if (mp)
                emit(-1, i, 1, j, *mp);
            if (mm)
                emit(-1, i, -1, j, *mm);
        }
    return out;
}

} // namespace icesep
