#include "icesep/interval.hpp"

namespace icesep
{

IntervalElem IntervalElem::from_point(const State& s)
{
    std::vector<std::optional<Int>> lo(s.begin(), s.end());
    std::vector<std::optional<Int>> hi(s.begin(), s.end());
    return IntervalElem(std::move(lo), std::move(hi));
}

std::optional<IntervalElem> IntervalElem::from_constraints(std::size_t dim,
                                                           const std::vector<LinearConstraint>& atoms)
{
    std::vector<std::optional<Int>> lo(dim), hi(dim);
    for (const LinearConstraint& c : atoms)
    {
        if (c.coeffs.size() != dim)
            throw StructuralError("interval atom dimension mismatch");
        std::size_t var = dim;
        for (std::size_t i = 0; i < dim; ++i)
        {
            if (c.coeffs[i] == 0)
                continue;
            if (var != dim)
                return std::nullopt; // more than one variable
            var = i;
        }
        const Int& a = c.coeffs[var]; // +1 or -1 after normalization
        if (c.rel == Rel::eq)
        {
            Int v = a > 0 ? c.bound : -c.bound;
            if (!lo[var] || *lo[var] < v)
                lo[var] = v;
            if (!hi[var] || *hi[var] > v)
                hi[var] = v;
        }
        else if (a > 0)
        {
            if (!hi[var] || *hi[var] > c.bound)
                hi[var] = c.bound;
        }
        else
        {
            Int v = -c.bound;
            if (!lo[var] || *lo[var] < v)
                lo[var] = v;
        }
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (lo[i] && hi[i] && *lo[i] > *hi[i])
            return std::nullopt; // empty box
    return IntervalElem(std::move(lo), std::move(hi));
}

IntervalElem iv_join(const IntervalElem& a, const IntervalElem& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("interval join dimension mismatch");
    std::vector<std::optional<Int>> lo(a.dim()), hi(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
    {
        if (a.lo(i) && b.lo(i))
            lo[i] = std::min(*a.lo(i), *b.lo(i));
        if (a.hi(i) && b.hi(i))
            hi[i] = std::max(*a.hi(i), *b.hi(i));
    }
    return IntervalElem(std::move(lo), std::move(hi));
}

bool iv_member(const State& p, const IntervalElem& d)
{
    if (p.size() != d.dim())
        throw StructuralError("interval membership dimension mismatch");
    for (std::size_t i = 0; i < d.dim(); ++i)
    {
        if (d.lo(i) && p[i] < *d.lo(i))
            return false;
        if (d.hi(i) && p[i] > *d.hi(i))
            return false;
    }
    return true;
}

bool iv_leq(const IntervalElem& a, const IntervalElem& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("interval comparison dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
    {
        if (b.lo(i) && (!a.lo(i) || *a.lo(i) < *b.lo(i)))
            return false;
        if (b.hi(i) && (!a.hi(i) || *a.hi(i) > *b.hi(i)))
            return false;
    }
    return true;
}

std::vector<LinearConstraint> iv_constraints(const IntervalElem& d)
{
    std::vector<LinearConstraint> out;
    for (std::size_t i = 0; i < d.dim(); ++i)
    {
        std::vector<Int> unit(d.dim(), Int(0));
        if (d.hi(i))
        {
            unit[i] = 1;
            out.push_back(make_le(unit, *d.hi(i)));
            unit[i] = 0;
        }
        if (d.lo(i))
        {
            unit[i] = -1;
            out.push_back(make_le(unit, -*d.lo(i)));
            unit[i] = 0;
        }
    }
    return out;
}

} // namespace icesep
