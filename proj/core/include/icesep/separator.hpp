#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "icesep/domain.hpp"
#include "icesep/model.hpp"

namespace icesep
{

// A finite set of abstract elements of one domain covering the positives,
// excluding the negatives, and consistent with the implications.
struct Separator
{
    std::vector<AbstractElement> elems;
};

struct SeparatorStats
{
    std::int64_t join_candidates = 0; // candidate joins evaluated against the negatives
    std::int64_t joins_applied = 0;   // joins actually materialized
    std::int64_t pops = 0;            // stack layers discarded while backtracking
};

// Optional instrumentation hook; events are "join", "expand" and "pop".
using TraceFn = std::function<void(std::string_view event, std::string_view payload)>;

// Compute a join-maximal separator from scratch. The seed elements (each of
// which must exclude every negative and contain only known-positive states)
// are placed before the basic singleton elements; elements are kept in
// insertion order, pairs are scanned (i, j) with i < j, and the scan restarts
// after each successful join, so the result is deterministic.
Separator construct_separator(const Sample& sample, DomainKind kind,
                              const std::vector<AbstractElement>& seed, SeparatorStats* stats = nullptr,
                              const TraceFn& trace = {});

// History of partial separators for the incremental variant. The bottom
// layer is empty and is never popped; an optional seed layer sits above it.
class SeparatorStack
{
public:
    SeparatorStack() { layers_.push_back({}); }
    explicit SeparatorStack(AbstractElement seed)
    {
        layers_.push_back({});
        layers_.push_back({std::move(seed)});
    }

    std::size_t depth() const { return layers_.size(); }
    const std::vector<AbstractElement>& layer(std::size_t i) const { return layers_[i]; }

private:
    std::vector<std::vector<AbstractElement>> layers_;

    friend Separator construct_separator_inc(const Sample&, DomainKind, SeparatorStack&,
                                             SeparatorStats*, const TraceFn&);
};

// Pop every layer whose head contains a current negative, then expand the
// surviving partial separator with the uncovered positives and
// implication-forced end-points: each new point is joined into the oldest
// element whose join stays clear of the negatives, or added as a singleton.
Separator construct_separator_inc(const Sample& sample, DomainKind kind, SeparatorStack& stack,
                                  SeparatorStats* stats = nullptr, const TraceFn& trace = {});

// Join-created elements carry their creation index and the two parents that
// were joined, so backtracking can jump straight to the layer preceding the
// earliest ancestor that contains the offending negative.
struct SepNode
{
    AbstractElement object;
    int index = 0;
    std::vector<std::shared_ptr<const SepNode>> parents;
};
using SepNodePtr = std::shared_ptr<const SepNode>;

class ForestStack
{
public:
    ForestStack() { layers_.push_back({{}, 0}); }
    explicit ForestStack(AbstractElement seed)
    {
        layers_.push_back({{}, 0});
        auto node = std::make_shared<SepNode>(SepNode{std::move(seed), 0, {}});
        layers_.push_back({{std::move(node)}, 0});
    }

    std::size_t depth() const { return layers_.size(); }
    const std::vector<SepNodePtr>& layer(std::size_t i) const { return layers_[i].forest; }
    int layer_index(std::size_t i) const { return layers_[i].index; }

private:
    struct IndexedForest
    {
        std::vector<SepNodePtr> forest;
        int index = 0;
    };
    std::vector<IndexedForest> layers_;
    int next_index_ = 1;

    friend Separator construct_separator_refined(const Sample&, DomainKind, ForestStack&,
                                                 SeparatorStats*, const TraceFn&);
};

Separator construct_separator_refined(const Sample& sample, DomainKind kind, ForestStack& stack,
                                      SeparatorStats* stats = nullptr, const TraceFn& trace = {});

// Literal evaluation of the separator definition; test oracle.
bool is_separator(const Separator& sep, const Sample& sample);

// Joining any two distinct elements would capture a negative; test oracle.
bool is_join_maximal(const Separator& sep, const Sample& sample);

} // namespace icesep
