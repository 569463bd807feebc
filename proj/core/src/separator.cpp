#include "icesep/separator.hpp"

#include <cassert>
#include <deque>
#include <set>
#include <sstream>

namespace icesep
{

namespace
{

void emit(const TraceFn& trace, std::string_view event, const std::string& payload)
{
    if (trace)
        trace(event, payload);
}

std::string describe(const State& s)
{
    return to_string(s);
}

bool covered(const std::vector<AbstractElement>& elems, const State& p)
{
    for (const AbstractElement& d : elems)
        if (member(p, d))
            return true;
    return false;
}

bool excludes_all(const AbstractElement& a, const AbstractElement& b, const std::set<State>& neg,
                  SeparatorStats* stats)
{
    if (stats)
        ++stats->join_candidates;
    for (const State& n : neg)
        if (join_contains(a, b, n))
            return false;
    return true;
}

std::vector<AbstractElement> collapse_duplicates(std::vector<AbstractElement> elems)
{
    std::vector<AbstractElement> out;
    for (AbstractElement& d : elems)
    {
        bool dup = false;
        for (const AbstractElement& seen : out)
            if (same_element(seen, d))
            {
                dup = true;
                break;
            }
        if (!dup)
            out.push_back(std::move(d));
    }
    return out;
}

} // namespace

Separator construct_separator(const Sample& sample, DomainKind kind,
                              const std::vector<AbstractElement>& seed, SeparatorStats* stats,
                              const TraceFn& trace)
{
    if (!consistent(sample))
        throw StructuralError("separator construction on an inconsistent sample");

    std::vector<AbstractElement> elems;
    std::vector<std::int64_t> ids;
    std::int64_t next_id = 0;
    for (const AbstractElement& d : seed)
    {
        for (const State& n : sample.neg)
            if (member(n, d))
                throw StructuralError("seed element contains a negative state");
        elems.push_back(d);
        ids.push_back(next_id++);
    }
    for (const State& p : sample.pos)
    {
        elems.push_back(singleton(p, kind));
        ids.push_back(next_id++);
    }

    // Add {q} for implications whose source became covered while the target
    // is not, to a fixpoint.
    auto complete_implications = [&]() {
        bool changed = true;
        while (changed)
        {
            changed = false;
            for (const auto& [from, to] : sample.impl)
            {
                if (!covered(elems, from) || covered(elems, to))
                    continue;
                assert(!sample.neg.count(to));
                emit(trace, "expand", describe(to));
                elems.push_back(singleton(to, kind));
                ids.push_back(next_id++);
                changed = true;
            }
        }
    };
    complete_implications();

    // Pairs that failed the negative check stay failed; remember them so a
    // restarted scan does not recompute their joins.
    std::set<std::pair<std::int64_t, std::int64_t>> failed;
    bool joined = true;
    while (joined)
    {
        joined = false;
        for (std::size_t i = 0; i < elems.size() && !joined; ++i)
            for (std::size_t j = i + 1; j < elems.size() && !joined; ++j)
            {
                if (failed.count({ids[i], ids[j]}))
                    continue;
                if (!excludes_all(elems[i], elems[j], sample.neg, stats))
                {
                    failed.emplace(ids[i], ids[j]);
                    continue;
                }
                AbstractElement merged = join(elems[i], elems[j]);
                if (stats)
                    ++stats->joins_applied;
                emit(trace, "join", std::to_string(ids[i]) + "+" + std::to_string(ids[j]));
                elems[i] = std::move(merged);
                ids[i] = next_id++;
                elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(j));
                ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(j));
                complete_implications();
                joined = true;
            }
    }
    return Separator{collapse_duplicates(std::move(elems))};
}

namespace
{

// Shared expansion step of the incremental variants, parameterized over how
// elements are read and replaced so the refined variant can maintain nodes.
template <typename GetElem, typename Replace, typename Append, typename Size>
void expand_partial(const Sample& sample, DomainKind kind, SeparatorStats* stats, const TraceFn& trace,
                    const GetElem& elem_at, const Replace& replace, const Append& append,
                    const Size& size)
{
    auto covered_by_all = [&](const State& p) {
        for (std::size_t i = 0; i < size(); ++i)
            if (member(p, elem_at(i)))
                return true;
        return false;
    };

    std::deque<State> add;
    std::set<State> enqueued;
    auto enqueue = [&](const State& s) {
        if (enqueued.insert(s).second)
            add.push_back(s);
    };
    for (const State& p : sample.pos)
        if (!covered_by_all(p))
            enqueue(p);
    for (const auto& [from, to] : sample.impl)
        if (covered_by_all(from) && !covered_by_all(to))
            enqueue(to);

    while (!add.empty())
    {
        State s = std::move(add.front());
        add.pop_front();
        AbstractElement sing = singleton(s, kind);

        std::size_t target = size();
        for (std::size_t i = 0; i < size(); ++i)
            if (excludes_all(elem_at(i), sing, sample.neg, stats))
            {
                target = i;
                break;
            }
        if (target != size())
        {
            AbstractElement merged = join(elem_at(target), sing);
            if (stats)
                ++stats->joins_applied;
            emit(trace, "join", describe(s));
            replace(target, std::move(merged), std::move(sing));
            const AbstractElement& o = elem_at(target);
            for (const auto& [from, to] : sample.impl)
                if (member(from, o) && !covered_by_all(to) && !enqueued.count(to))
                    enqueue(to);
        }
        else
        {
            emit(trace, "expand", describe(s));
            append(std::move(sing));
            for (const auto& [from, to] : sample.impl)
                if (from == s && !covered_by_all(to) && !enqueued.count(to))
                    enqueue(to);
        }
    }
}

} // namespace

Separator construct_separator_inc(const Sample& sample, DomainKind kind, SeparatorStack& stack,
                                  SeparatorStats* stats, const TraceFn& trace)
{
    if (!consistent(sample))
        throw StructuralError("separator construction on an inconsistent sample");

    auto& layers = stack.layers_;
    while (layers.size() > 1)
    {
        bool dirty = false;
        for (const State& n : sample.neg)
        {
            for (const AbstractElement& d : layers.back())
                if (member(n, d))
                {
                    dirty = true;
                    break;
                }
            if (dirty)
                break;
        }
        if (!dirty)
            break;
        layers.pop_back();
        if (stats)
            ++stats->pops;
        emit(trace, "pop", std::to_string(layers.size()));
    }

    std::vector<AbstractElement> elems = layers.back();
    expand_partial(
        sample, kind, stats, trace, [&](std::size_t i) -> const AbstractElement& { return elems[i]; },
        [&](std::size_t i, AbstractElement merged, AbstractElement) { elems[i] = std::move(merged); },
        [&](AbstractElement sing) { elems.push_back(std::move(sing)); },
        [&]() { return elems.size(); });

    layers.push_back(elems);
    return Separator{collapse_duplicates(std::move(elems))};
}

Separator construct_separator_refined(const Sample& sample, DomainKind kind, ForestStack& stack,
                                      SeparatorStats* stats, const TraceFn& trace)
{
    if (!consistent(sample))
        throw StructuralError("separator construction on an inconsistent sample");

    auto& layers = stack.layers_;
    const int i = stack.next_index_++;

    while (layers.size() > 1)
    {
        SepNodePtr offending;
        const State* witness = nullptr;
        for (const State& n : sample.neg)
        {
            for (const SepNodePtr& node : layers.back().forest)
                if (member(n, node->object))
                {
                    offending = node;
                    witness = &n;
                    break;
                }
            if (offending)
                break;
        }
        if (!offending)
            break;

        // Walk to the earliest ancestor still containing the negative.
        SepNodePtr tmp = offending;
        while (member(*witness, tmp->object))
        {
            SepNodePtr next;
            for (const SepNodePtr& parent : tmp->parents)
                if (member(*witness, parent->object))
                {
                    next = parent;
                    break;
                }
            if (!next)
                break;
            tmp = next;
        }
        while (layers.size() > 1 && layers.back().index >= tmp->index)
        {
            layers.pop_back();
            if (stats)
                ++stats->pops;
            emit(trace, "pop", std::to_string(layers.size()));
        }
    }

    std::vector<SepNodePtr> forest = layers.back().forest;
    expand_partial(
        sample, kind, stats, trace,
        [&](std::size_t k) -> const AbstractElement& { return forest[k]->object; },
        [&](std::size_t k, AbstractElement merged, AbstractElement sing) {
            auto leaf = std::make_shared<SepNode>(SepNode{std::move(sing), i, {}});
            forest[k] = std::make_shared<SepNode>(
                SepNode{std::move(merged), i, {forest[k], std::move(leaf)}});
        },
        [&](AbstractElement sing) {
            forest.push_back(std::make_shared<SepNode>(SepNode{std::move(sing), i, {}}));
        },
        [&]() { return forest.size(); });

    layers.push_back({forest, i});
    std::vector<AbstractElement> elems;
    elems.reserve(forest.size());
    for (const SepNodePtr& node : forest)
        elems.push_back(node->object);
    return Separator{collapse_duplicates(std::move(elems))};
}

bool is_separator(const Separator& sep, const Sample& sample)
{
    for (const State& p : sample.pos)
        if (!covered(sep.elems, p))
            return false;
    for (const State& n : sample.neg)
        for (const AbstractElement& d : sep.elems)
            if (member(n, d))
                return false;
    for (const auto& [from, to] : sample.impl)
        if (covered(sep.elems, from) && !covered(sep.elems, to))
            return false;
    return true;
}

bool is_join_maximal(const Separator& sep, const Sample& sample)
{
    for (std::size_t i = 0; i < sep.elems.size(); ++i)
        for (std::size_t j = i + 1; j < sep.elems.size(); ++j)
        {
            bool captures = false;
            for (const State& n : sample.neg)
                if (join_contains(sep.elems[i], sep.elems[j], n))
                {
                    captures = true;
                    break;
                }
            if (!captures)
                return false;
        }
    return true;
}

} // namespace icesep
