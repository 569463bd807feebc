#include "icesep/learner.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

namespace icesep
{

SufficiencyResult sufficient(const std::vector<Attribute>& attrs, const Sample& sample)
{
    std::vector<State> points = sample_points(sample);

    std::vector<std::vector<bool>> sig(points.size(), std::vector<bool>(attrs.size()));
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t a = 0; a < attrs.size(); ++a)
            sig[p][a] = satisfies(attrs[a].constraint, points[p]);

    Sample aug = sample;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (sig[i] == sig[j])
            {
                aug.impl.emplace(points[i], points[j]);
                aug.impl.emplace(points[j], points[i]);
            }

    // Implication closure from an empty classification map.
    std::map<State, bool> G; // true = positive
    auto positive = [&](const State& s) {
        auto it = G.find(s);
        return aug.pos.count(s) || (it != G.end() && it->second);
    };
    auto negative = [&](const State& s) {
        auto it = G.find(s);
        return aug.neg.count(s) || (it != G.end() && !it->second);
    };

    bool changed = true;
    while (changed)
    {
        changed = false;
        for (const auto& [from, to] : aug.impl)
        {
            if (positive(from) && !positive(to))
            {
                if (negative(to))
                    return {false, sample};
                G[to] = true;
                changed = true;
            }
            if (negative(to) && !negative(from))
            {
                if (positive(from))
                    return {false, sample};
                G[from] = false;
                changed = true;
            }
        }
    }
    for (const auto& [s, pos] : G)
        if (positive(s) && negative(s))
            return {false, sample};

    for (const auto& [s, pos] : G)
        (pos ? aug.pos : aug.neg).insert(s);
    return {true, std::move(aug)};
}

namespace
{

double entropy(std::size_t pos, std::size_t neg)
{
    if (pos == 0 || neg == 0)
        return 0.0;
    double total = static_cast<double>(pos + neg);
    double pp = static_cast<double>(pos) / total;
    double pn = static_cast<double>(neg) / total;
    return -pp * std::log(pp) - pn * std::log(pn);
}

} // namespace

double gain(const Attribute& attr, const Examples& examples,
            const std::set<std::pair<State, State>>& impls, double penalty)
{
    std::size_t pos_sat = 0, neg_sat = 0;
    for (const State& s : examples.pos)
        pos_sat += satisfies(attr.constraint, s) ? 1 : 0;
    for (const State& s : examples.neg)
        neg_sat += satisfies(attr.constraint, s) ? 1 : 0;
    std::size_t pos = examples.pos.size(), neg = examples.neg.size();
    std::size_t total = pos + neg;
    double g = entropy(pos, neg);
    if (total > 0)
    {
        std::size_t sat = pos_sat + neg_sat;
        std::size_t unsat = total - sat;
        g -= static_cast<double>(sat) / static_cast<double>(total) * entropy(pos_sat, neg_sat);
        g -= static_cast<double>(unsat) / static_cast<double>(total) *
             entropy(pos - pos_sat, neg - neg_sat);
    }

    std::set<State> here(examples.pos.begin(), examples.pos.end());
    here.insert(examples.neg.begin(), examples.neg.end());
    here.insert(examples.unclass.begin(), examples.unclass.end());
    std::size_t cut = 0;
    for (const auto& [from, to] : impls)
        if (here.count(from) && here.count(to) &&
            satisfies(attr.constraint, from) != satisfies(attr.constraint, to))
            ++cut;
    return g - penalty * std::log(2.0) * static_cast<double>(cut);
}

std::optional<std::size_t> choose(const std::vector<Attribute>& attrs,
                                  const std::vector<bool>& available, const Examples& examples,
                                  const std::set<std::pair<State, State>>& impls, double penalty)
{
    std::optional<std::size_t> best;
    double best_score = 0.0;
    for (std::size_t a = 0; a < attrs.size(); ++a)
    {
        if (!available[a])
            continue;
        // Only attributes that split the classified points make progress.
        std::size_t sat = 0, unsat = 0;
        for (const State& s : examples.pos)
            (satisfies(attrs[a].constraint, s) ? sat : unsat) += 1;
        for (const State& s : examples.neg)
            (satisfies(attrs[a].constraint, s) ? sat : unsat) += 1;
        if (sat == 0 || unsat == 0)
            continue;
        double score = gain(attrs[a], examples, impls, penalty);
        if (!best || score > best_score)
        {
            best = a;
            best_score = score;
        }
    }
    return best;
}

namespace
{

struct TreeBuilder
{
    const Sample& sample;
    const std::vector<Attribute>& attrs;
    double penalty;
    std::map<State, bool> G;

    bool positive(const State& s) const
    {
        auto it = G.find(s);
        return sample.pos.count(s) || (it != G.end() && it->second);
    }
    bool negative(const State& s) const
    {
        auto it = G.find(s);
        return sample.neg.count(s) || (it != G.end() && !it->second);
    }

    void mark(const State& s, bool pos)
    {
        if (pos ? negative(s) : positive(s))
            throw StructuralError("tree construction conflict: attribute pool was not sufficient");
        G[s] = pos;
    }

    void closure()
    {
        bool changed = true;
        while (changed)
        {
            changed = false;
            for (const auto& [from, to] : sample.impl)
            {
                if (positive(from) && !positive(to))
                {
                    mark(to, true);
                    changed = true;
                }
                if (negative(to) && !negative(from))
                {
                    mark(from, false);
                    changed = true;
                }
            }
        }
    }

    DecisionTree build(Examples ex, std::vector<bool> available)
    {
        // Adopt classifications decided while building sibling branches.
        std::vector<State> still;
        for (State& s : ex.unclass)
        {
            if (positive(s))
                ex.pos.push_back(std::move(s));
            else if (negative(s))
                ex.neg.push_back(std::move(s));
            else
                still.push_back(std::move(s));
        }
        ex.unclass = std::move(still);

        if (ex.neg.empty())
        {
            for (const State& s : ex.unclass)
                mark(s, true);
            closure();
            return DecisionTree::leaf(true);
        }
        if (ex.pos.empty())
        {
            for (const State& s : ex.unclass)
                mark(s, false);
            closure();
            return DecisionTree::leaf(false);
        }

        auto pick = choose(attrs, available, ex, sample.impl, penalty);
        if (!pick)
            throw StructuralError("no attribute splits the examples: pool was not sufficient");
        const LinearConstraint& test = attrs[*pick].constraint;
        available[*pick] = false;

        Examples yes, no;
        auto split = [&](std::vector<State>& src, std::vector<State> Examples::*field) {
            for (State& s : src)
                (satisfies(test, s) ? yes.*field : no.*field).push_back(std::move(s));
        };
        split(ex.pos, &Examples::pos);
        split(ex.neg, &Examples::neg);
        split(ex.unclass, &Examples::unclass);

        DecisionTree on_true = build(std::move(yes), available);
        DecisionTree on_false = build(std::move(no), std::move(available));
        return DecisionTree::inner(test, std::move(on_true), std::move(on_false));
    }
};

} // namespace

DecisionTree construct_tree(const Sample& extended, const std::vector<Attribute>& attrs, double penalty)
{
    TreeBuilder builder{extended, attrs, penalty, {}};
    builder.closure();

    Examples ex;
    ex.pos.assign(extended.pos.begin(), extended.pos.end());
    ex.neg.assign(extended.neg.begin(), extended.neg.end());
    for (const State& s : sample_points(extended))
        if (!extended.pos.count(s) && !extended.neg.count(s))
            ex.unclass.push_back(s);

    return builder.build(std::move(ex), std::vector<bool>(attrs.size(), true));
}

namespace
{

void collect_paths(const DecisionTree& t, std::vector<Formula>& prefix, std::vector<Formula>& paths)
{
    if (t.is_leaf())
    {
        if (t.positive())
        {
            if (prefix.size() == 1)
                paths.push_back(prefix.front());
            else
                paths.push_back(Formula::conj(prefix));
        }
        return;
    }
    prefix.push_back(Formula::atom(t.test()));
    collect_paths(t.on_true(), prefix, paths);
    prefix.back() = Formula::neg(Formula::atom(t.test()));
    collect_paths(t.on_false(), prefix, paths);
    prefix.pop_back();
}

} // namespace

Formula tree_to_formula(const DecisionTree& tree)
{
    std::vector<Formula> prefix, paths;
    collect_paths(tree, prefix, paths);
    if (paths.empty())
        return Formula::fls();
    if (paths.size() == 1)
        return paths.front();
    return Formula::disj(std::move(paths));
}

// ---------------------------------------------------------------------------
// Learner
// ---------------------------------------------------------------------------

namespace
{

void collect_atoms(const Formula& f, std::size_t dim, std::vector<LinearConstraint>& out)
{
    switch (f.kind())
    {
    case Formula::Kind::atom:
    {
        const LinearConstraint& c = f.constraint();
        if (c.coeffs.size() == dim)
        {
            out.push_back(c);
            return;
        }
        // Transition atom: keep it only when the primed part is untouched.
        for (std::size_t i = dim; i < c.coeffs.size(); ++i)
            if (c.coeffs[i] != 0)
                return;
        LinearConstraint cut = c;
        cut.coeffs.resize(dim);
        out.push_back(std::move(cut));
        return;
    }
    default:
        for (const Formula& g : f.args())
            collect_atoms(g, dim, out);
    }
}

void append_unique(std::vector<Attribute>& pool, LinearConstraint c)
{
    Attribute a{std::move(c)};
    if (std::find(pool.begin(), pool.end(), a) == pool.end())
        pool.push_back(std::move(a));
}

} // namespace

Learner::Learner(TranSys sys, LearnerConfig cfg)
    : sys_(std::move(sys)), cfg_(cfg), template_bound_(cfg.template_bound)
{
    init_elem_ = from_conjunction(sys_.init, cfg_.domain, sys_.dim());
    if (init_elem_)
    {
        inc_stack_ = SeparatorStack(*init_elem_);
        ref_stack_ = ForestStack(*init_elem_);
    }
    if (cfg_.spec_atoms)
    {
        std::vector<LinearConstraint> atoms;
        collect_atoms(sys_.init, sys_.dim(), atoms);
        collect_atoms(sys_.good, sys_.dim(), atoms);
        collect_atoms(sys_.trans, sys_.dim(), atoms);
        for (LinearConstraint& c : atoms)
            append_unique(harvested_, std::move(c));
        pool_ = harvested_;
    }
    if (cfg_.mode == AttributeMode::octagon_templates)
        regenerate_templates();
}

void Learner::regenerate_templates()
{
    pool_.clear();
    std::size_t n = sys_.dim();
    auto emit = [&](std::vector<Int> coeffs) {
        for (Int c = -template_bound_; c <= template_bound_; ++c)
            append_unique(pool_, LinearConstraint{coeffs, c, Rel::le});
    };
    for (std::size_t i = 0; i < n; ++i)
        for (int si : {1, -1})
        {
            std::vector<Int> coeffs(n, Int(0));
            coeffs[i] = si;
            emit(coeffs);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1})
                {
                    std::vector<Int> coeffs(n, Int(0));
                    coeffs[i] = si;
                    coeffs[j] = sj;
                    emit(coeffs);
                }
    for (const Attribute& a : harvested_)
        append_unique(pool_, a.constraint);
}

const std::vector<Attribute>& Learner::generate_attributes(const Sample& sample)
{
    if (cfg_.mode == AttributeMode::octagon_templates)
    {
        regenerate_templates();
        return pool_;
    }

    std::vector<AbstractElement> seed;
    if (init_elem_)
    {
        bool clean = true;
        for (const State& n : sample.neg)
            if (member(n, *init_elem_))
            {
                clean = false;
                break;
            }
        if (clean)
            seed.push_back(*init_elem_);
    }

    Separator sep;
    switch (cfg_.variant)
    {
    case SeparatorVariant::basic:
        sep = construct_separator(sample, cfg_.domain, seed, &stats_, trace_);
        break;
    case SeparatorVariant::incremental:
        sep = construct_separator_inc(sample, cfg_.domain, inc_stack_, &stats_, trace_);
        break;
    case SeparatorVariant::refined:
        sep = construct_separator_refined(sample, cfg_.domain, ref_stack_, &stats_, trace_);
        break;
    }
    if (observer_)
        observer_(sep);

    pool_.clear();
    for (const AbstractElement& d : sep.elems)
        for (LinearConstraint& c : constraints(d))
            append_unique(pool_, std::move(c));
    for (const Attribute& a : harvested_)
        append_unique(pool_, a.constraint);
    return pool_;
}

std::vector<Attribute> Learner::dedup_view(const std::vector<State>& points) const
{
    // Attributes that classify every sample point identically are redundant
    // for splitting; keep the first of each signature class.
    std::vector<Attribute> view;
    std::vector<std::vector<bool>> seen;
    for (const Attribute& a : pool_)
    {
        std::vector<bool> sig(points.size());
        for (std::size_t p = 0; p < points.size(); ++p)
            sig[p] = satisfies(a.constraint, points[p]);
        if (std::find(seen.begin(), seen.end(), sig) == seen.end())
        {
            seen.push_back(std::move(sig));
            view.push_back(a);
        }
    }
    return view;
}

Formula Learner::learn(const Sample& sample)
{
    if (!consistent(sample))
        throw StructuralError("learn() requires a consistent sample");

    std::vector<State> points = sample_points(sample);
    std::vector<Attribute> view = dedup_view(points);
    SufficiencyResult s = sufficient(view, sample);
    if (!s.ok)
    {
        generate_attributes(sample);
        view = dedup_view(points);
        s = sufficient(view, sample);
        // The enumerative baseline grows its constant bound until the pool
        // separates the sample; separator pools are sufficient by
        // construction.
        while (!s.ok && cfg_.mode == AttributeMode::octagon_templates)
        {
            if (template_bound_ > 4096)
                throw StructuralError("octagon-templates bound exceeded");
            ++template_bound_;
            regenerate_templates();
            view = dedup_view(points);
            s = sufficient(view, sample);
        }
        if (!s.ok)
            throw StructuralError("freshly generated attribute pool is not sufficient");
    }
    DecisionTree tree = construct_tree(s.extended, view, cfg_.penalty);
    return tree_to_formula(tree);
}

} // namespace icesep
