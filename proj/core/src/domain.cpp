#include "icesep/domain.hpp"

namespace icesep
{

std::string_view to_string(DomainKind kind)
{
    switch (kind)
    {
    case DomainKind::interval: return "int";
    case DomainKind::octagon: return "oct";
    case DomainKind::polytope: return "poly";
    }
    return "?";
}

std::optional<DomainKind> domain_from_string(std::string_view name)
{
    if (name == "int")
        return DomainKind::interval;
    if (name == "oct")
        return DomainKind::octagon;
    if (name == "poly")
        return DomainKind::polytope;
    return std::nullopt;
}

DomainKind kind_of(const AbstractElement& d)
{
    if (std::holds_alternative<IntervalElem>(d))
        return DomainKind::interval;
    if (std::holds_alternative<OctagonElem>(d))
        return DomainKind::octagon;
    return DomainKind::polytope;
}

std::size_t dim_of(const AbstractElement& d)
{
    return std::visit([](const auto& e) { return e.dim(); }, d);
}

AbstractElement singleton(const State& s, DomainKind kind)
{
    switch (kind)
    {
    case DomainKind::interval: return IntervalElem::from_point(s);
    case DomainKind::octagon: return OctagonElem::from_point(s);
    case DomainKind::polytope: return PolytopeElem::from_point(s);
    }
    throw StructuralError("unknown domain kind");
}

namespace
{

[[noreturn]] void mixed_kinds()
{
    throw StructuralError("operation on elements of different domains");
}

} // namespace

AbstractElement join(const AbstractElement& a, const AbstractElement& b)
{
    if (kind_of(a) != kind_of(b))
        mixed_kinds();
    switch (kind_of(a))
    {
    case DomainKind::interval: return iv_join(std::get<IntervalElem>(a), std::get<IntervalElem>(b));
    case DomainKind::octagon: return oct_join(std::get<OctagonElem>(a), std::get<OctagonElem>(b));
    case DomainKind::polytope: return poly_join(std::get<PolytopeElem>(a), std::get<PolytopeElem>(b));
    }
    throw StructuralError("unknown domain kind");
}

bool join_contains(const AbstractElement& a, const AbstractElement& b, const State& p)
{
    if (kind_of(a) != kind_of(b))
        mixed_kinds();
    // Interval and octagon joins are cheap; only polytopes benefit from the
    // non-materializing path.
    if (kind_of(a) == DomainKind::polytope)
        return poly_join_contains(std::get<PolytopeElem>(a), std::get<PolytopeElem>(b), p);
    return member(p, join(a, b));
}

bool member(const State& p, const AbstractElement& d)
{
    switch (kind_of(d))
    {
    case DomainKind::interval: return iv_member(p, std::get<IntervalElem>(d));
    case DomainKind::octagon: return oct_member(p, std::get<OctagonElem>(d));
    case DomainKind::polytope: return std::get<PolytopeElem>(d).contains(p);
    }
    throw StructuralError("unknown domain kind");
}

bool leq(const AbstractElement& a, const AbstractElement& b)
{
    if (kind_of(a) != kind_of(b))
        mixed_kinds();
    switch (kind_of(a))
    {
    case DomainKind::interval: return iv_leq(std::get<IntervalElem>(a), std::get<IntervalElem>(b));
    case DomainKind::octagon: return oct_leq(std::get<OctagonElem>(a), std::get<OctagonElem>(b));
    case DomainKind::polytope: return std::get<PolytopeElem>(a).subset_of(std::get<PolytopeElem>(b));
    }
    throw StructuralError("unknown domain kind");
}

bool same_element(const AbstractElement& a, const AbstractElement& b)
{
    return leq(a, b) && leq(b, a);
}

std::vector<LinearConstraint> constraints(const AbstractElement& d)
{
    switch (kind_of(d))
    {
    case DomainKind::interval: return iv_constraints(std::get<IntervalElem>(d));
    case DomainKind::octagon: return oct_constraints(std::get<OctagonElem>(d));
    case DomainKind::polytope: return std::get<PolytopeElem>(d).facets();
    }
    throw StructuralError("unknown domain kind");
}

namespace
{

// Flatten nested conjunctions of atoms; false when any other connective or a
// constant-false survives.
bool flatten_conjunction(const Formula& f, std::vector<LinearConstraint>& atoms)
{
    switch (f.kind())
    {
    case Formula::Kind::atom:
        atoms.push_back(f.constraint());
        return true;
    case Formula::Kind::conj:
        for (const Formula& g : f.args())
            if (!flatten_conjunction(g, atoms))
                return false;
        return true;
    default:
        return false;
    }
}

} // namespace

std::optional<AbstractElement> from_conjunction(const Formula& f, DomainKind kind, std::size_t dim)
{
    std::vector<LinearConstraint> atoms;
    if (!flatten_conjunction(f, atoms) || atoms.empty())
        return std::nullopt;
    switch (kind)
    {
    case DomainKind::interval:
        if (auto d = IntervalElem::from_constraints(dim, atoms))
            return AbstractElement(std::move(*d));
        return std::nullopt;
    case DomainKind::octagon:
        if (auto d = OctagonElem::from_constraints(dim, atoms))
            return AbstractElement(std::move(*d));
        return std::nullopt;
    case DomainKind::polytope:
        if (auto d = PolytopeElem::from_constraints(dim, atoms))
            return AbstractElement(std::move(*d));
        return std::nullopt;
    }
    throw StructuralError("unknown domain kind");
}

} // namespace icesep
