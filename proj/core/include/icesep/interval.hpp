#pragma once

#include <optional>
#include <vector>

#include "icesep/model.hpp"

namespace icesep
{

// A non-empty box: per variable a lower bound (nullopt = -inf) and an upper
// bound (nullopt = +inf), with lo <= hi wherever both are finite.
class IntervalElem
{
public:
    static IntervalElem from_point(const State& s);

    // Per-variable bounds from single-variable atoms; nullopt when some atom
    // is not an interval constraint or the conjunction is unsatisfiable.
    static std::optional<IntervalElem> from_constraints(std::size_t dim,
                                                        const std::vector<LinearConstraint>& atoms);

    std::size_t dim() const { return lo_.size(); }
    const std::optional<Int>& lo(std::size_t i) const { return lo_[i]; }
    const std::optional<Int>& hi(std::size_t i) const { return hi_[i]; }

private:
    IntervalElem(std::vector<std::optional<Int>> lo, std::vector<std::optional<Int>> hi)
        : lo_(std::move(lo)), hi_(std::move(hi))
    {
    }

    std::vector<std::optional<Int>> lo_;
    std::vector<std::optional<Int>> hi_;

    friend IntervalElem iv_join(const IntervalElem&, const IntervalElem&);
};

IntervalElem iv_join(const IntervalElem& a, const IntervalElem& b);
bool iv_member(const State& p, const IntervalElem& d);
bool iv_leq(const IntervalElem& a, const IntervalElem& b);
std::vector<LinearConstraint> iv_constraints(const IntervalElem& d);

} // namespace icesep
