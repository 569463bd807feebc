#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "icesep/interval.hpp"
#include "icesep/model.hpp"
#include "icesep/octagon.hpp"
#include "icesep/polytope.hpp"

namespace icesep
{

enum class DomainKind
{
    interval,
    octagon,
    polytope,
};

std::string_view to_string(DomainKind kind);
std::optional<DomainKind> domain_from_string(std::string_view name);

// One abstract convex set; operations never mix kinds or dimensions.
using AbstractElement = std::variant<IntervalElem, OctagonElem, PolytopeElem>;

DomainKind kind_of(const AbstractElement& d);
std::size_t dim_of(const AbstractElement& d);

// The element whose integer-point set is exactly {s}.
AbstractElement singleton(const State& s, DomainKind kind);

// Least element of the domain containing both arguments.
AbstractElement join(const AbstractElement& a, const AbstractElement& b);

// Membership of p in the join of a and b, without materializing the join.
bool join_contains(const AbstractElement& a, const AbstractElement& b, const State& p);

bool member(const State& p, const AbstractElement& d);

// Set inclusion, decided symbolically per domain.
bool leq(const AbstractElement& a, const AbstractElement& b);

// Same integer-point set (mutual inclusion).
bool same_element(const AbstractElement& a, const AbstractElement& b);

// Normalized finite constraint set describing exactly the element's points.
// Infinite bounds are omitted; polytope output lists affine-hull equations
// first and then facets; interval and octagon output lists the finite
// template bounds (equalities stay implicit as inequality pairs).
std::vector<LinearConstraint> constraints(const AbstractElement& d);

// The element of the given domain matching a conjunction of atoms, when the
// conjunction is representable: each atom must fit the domain's constraint
// shape and the region must be non-empty (and, for polytopes, have integer
// vertices). Anything else yields nullopt and callers fall back to the
// basic separator.
std::optional<AbstractElement> from_conjunction(const Formula& f, DomainKind kind, std::size_t dim);

} // namespace icesep
