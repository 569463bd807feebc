#pragma once

#include <optional>
#include <vector>

#include "icesep/model.hpp"

namespace icesep
{

// A non-empty octagon in tightly closed, coherent canonical DBM form.
//
// The doubled-variable encoding follows the standard construction: index 2k
// stands for +x_k and index 2k+1 for -x_k, and entry(i, j) bounds v_j - v_i.
// Canonical form means: zero diagonal, shortest-path closed, coherent
// (entry(i, j) == entry(j^1, i^1)), and unary entries entry(i, i^1) even.
// The canonical form is unique, so element comparison is entrywise.
class OctagonElem
{
public:
    static OctagonElem from_point(const State& s);

    // nullopt when some atom is not expressible as +/-x +/-y <= c or the
    // conjunction has no integer solution.
    static std::optional<OctagonElem> from_constraints(std::size_t dim,
                                                       const std::vector<LinearConstraint>& atoms);

    std::size_t dim() const { return n_; }

    // Bound on v_j - v_i; nullopt is +inf.
    const std::optional<Int>& entry(std::size_t i, std::size_t j) const { return m_[i * 2 * n_ + j]; }

private:
    OctagonElem(std::size_t n, std::vector<std::optional<Int>> m) : n_(n), m_(std::move(m)) {}

    // Tight integer closure in place; false when the octagon is empty.
    bool close();

    std::size_t n_ = 0;
    std::vector<std::optional<Int>> m_; // 2n x 2n, row-major

    friend OctagonElem oct_join(const OctagonElem&, const OctagonElem&);
};

OctagonElem oct_join(const OctagonElem& a, const OctagonElem& b);
bool oct_member(const State& p, const OctagonElem& d);
bool oct_leq(const OctagonElem& a, const OctagonElem& b);
std::vector<LinearConstraint> oct_constraints(const OctagonElem& d);

} // namespace icesep
