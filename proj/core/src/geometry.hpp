#pragma once

// Internal exact-arithmetic geometry kernel used by the polytope domain:
// phase-1 simplex feasibility and double description cone enumeration.
// Not installed.

#include <vector>

#include "icesep/numbers.hpp"

namespace icesep::geometry
{

using Vec = std::vector<Int>;

Int dot(const Vec& a, const Vec& b);

// Divide by the gcd of the entries; false when the vector is zero.
bool normalize_primitive(Vec& v);

// Is {z >= 0 : sum_j z_j cols[j] = rhs} nonempty? Exact rational simplex
// with Bland's rule.
bool feasible_nonneg(const std::vector<Vec>& cols, const Vec& rhs);

struct ConeGens
{
    std::vector<Vec> rays;
    std::vector<Vec> lines;
};

// Generator description of {y in R^dim : e.y = 0 for e in eqs, c.y <= 0 for
// c in ineqs}. Rays and lines are primitive integer vectors; output is
// deterministic in the input order.
ConeGens dd_cone(std::size_t dim, const std::vector<Vec>& eqs, const std::vector<Vec>& ineqs);

// In-place reduced echelon form of integer rows spanning a subspace, with
// pivots chosen from the highest column down. Rows come out primitive, with
// positive pivot, sorted by descending pivot column. Zero rows are dropped.
void reduce_rows(std::vector<Vec>& rows);

// Eliminate the pivot columns of `rows` (as produced by reduce_rows) from v
// by adding row multiples; v is scaled by positive integers only.
void eliminate_pivots(const std::vector<Vec>& rows, Vec& v);

} // namespace icesep::geometry
