#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "icesep/model.hpp"

namespace icesep
{

// A non-empty convex polyhedron over the integers in generator (V-)
// representation: convex hull of integer points, widened by recession rays
// and lines. Separator elements built from samples are plain polytopes
// (points only); rays and lines arise from seeding with initial-state
// conjunctions that leave variables unconstrained.
//
// Generators are kept minimal: no point lies in the hull of the remaining
// generators, rays are extreme modulo the line space, lines form a reduced
// basis. The facet (H-)representation is derived on demand by the double
// description method over exact rationals and cached; the cache is filled
// before elements are shared across threads.
class PolytopeElem
{
public:
    static PolytopeElem from_point(const State& s);

    // Convert a conjunction of linear atoms. nullopt when the region is
    // empty or has non-integer vertices (not representable by integer
    // generators); callers fall back to the basic separator.
    static std::optional<PolytopeElem> from_constraints(std::size_t dim,
                                                        const std::vector<LinearConstraint>& atoms);

    std::size_t dim() const { return dim_; }
    const std::vector<State>& points() const { return points_; }
    const std::vector<std::vector<Int>>& rays() const { return rays_; }
    const std::vector<std::vector<Int>>& lines() const { return lines_; }

    // Exact rational feasibility of p = sum(lambda_i v_i) + cone terms,
    // lambda >= 0 summing to one.
    bool contains(const State& p) const;

    bool subset_of(const PolytopeElem& other) const;

    // Affine-hull equations first, then irredundant facets, both normalized;
    // facet normals are reduced modulo the affine hull.
    const std::vector<LinearConstraint>& facets() const;

private:
    explicit PolytopeElem(std::size_t dim) : dim_(dim) {}

    void minimize();
    void refresh_box();
    bool in_box(const State& p) const;

    std::size_t dim_ = 0;
    std::vector<State> points_;
    std::vector<std::vector<Int>> rays_;
    std::vector<std::vector<Int>> lines_;
    // Bounding box over the points, open along ray/line directions; a cheap
    // pre-filter for membership queries.
    std::vector<std::optional<Int>> box_lo_, box_hi_;
    mutable std::shared_ptr<const std::vector<LinearConstraint>> facet_cache_;

    friend PolytopeElem poly_join(const PolytopeElem&, const PolytopeElem&);
    friend bool poly_join_contains(const PolytopeElem&, const PolytopeElem&, const State&);
};

PolytopeElem poly_join(const PolytopeElem& a, const PolytopeElem& b);

// Membership of p in the join of a and b, decided on the union of the
// generators without materializing (or minimizing) the joined element.
bool poly_join_contains(const PolytopeElem& a, const PolytopeElem& b, const State& p);

} // namespace icesep
