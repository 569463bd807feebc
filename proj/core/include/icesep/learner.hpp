#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "icesep/model.hpp"
#include "icesep/separator.hpp"

namespace icesep
{

// An atomic predicate over the program variables used as a decision-tree
// test. Equality attributes stay atomic (they are not split into two
// inequalities).
struct Attribute
{
    LinearConstraint constraint;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

// Binary decision tree: inner nodes test an attribute (left = satisfied),
// leaves carry a polarity. No attribute repeats on a root-to-leaf path.
class DecisionTree
{
public:
    static DecisionTree leaf(bool positive)
    {
        DecisionTree t;
        t.positive_ = positive;
        return t;
    }
    static DecisionTree inner(LinearConstraint test, DecisionTree on_true, DecisionTree on_false)
    {
        DecisionTree t;
        t.test_ = std::move(test);
        t.on_true_ = std::make_shared<DecisionTree>(std::move(on_true));
        t.on_false_ = std::make_shared<DecisionTree>(std::move(on_false));
        return t;
    }

    bool is_leaf() const { return !test_; }
    bool positive() const { return positive_; }
    const LinearConstraint& test() const { return *test_; }
    const DecisionTree& on_true() const { return *on_true_; }
    const DecisionTree& on_false() const { return *on_false_; }

    // Polarity of the leaf this state routes to.
    bool route(const State& s) const
    {
        const DecisionTree* t = this;
        while (!t->is_leaf())
            t = satisfies(t->test(), s) ? t->on_true_.get() : t->on_false_.get();
        return t->positive_;
    }

private:
    std::optional<LinearConstraint> test_;
    bool positive_ = false;
    std::shared_ptr<const DecisionTree> on_true_, on_false_;
};

struct SufficiencyResult
{
    bool ok = false;
    // On success: the input sample augmented with implications between
    // attribute-equivalent points and with closure-classified end-points
    // promoted into pos/neg. On failure: the input sample unchanged.
    Sample extended;
};

// Can the attribute pool classify the sample consistently? Points satisfying
// the same attributes are linked by implications both ways; the implication
// closure from an empty classification then either derives a conflict or
// extends the sample.
SufficiencyResult sufficient(const std::vector<Attribute>& attrs, const Sample& sample);

// The examples handled by one tree node.
struct Examples
{
    std::vector<State> pos;
    std::vector<State> neg;
    std::vector<State> unclass;
};

// Information gain of the split on the classified points (Shannon entropy,
// natural log), minus penalty * ln 2 per implication between points of this
// node that the attribute separates.
double gain(const Attribute& attr, const Examples& examples,
            const std::set<std::pair<State, State>>& impls, double penalty);

// Index of the best attribute among those that actually split the classified
// points of the node (at least one classified point on each side): highest
// gain, ties broken by pool order. nullopt when no attribute splits.
std::optional<std::size_t> choose(const std::vector<Attribute>& attrs,
                                  const std::vector<bool>& available, const Examples& examples,
                                  const std::set<std::pair<State, State>>& impls, double penalty);

// Build a tree consistent with the (sufficient) extended sample: positives
// reach + leaves, negatives - leaves, and no implication runs + to -.
// Unclassified implication end-points are marked through a global
// classification map as leaves are created. Throws StructuralError when the
// precondition is violated.
DecisionTree construct_tree(const Sample& extended, const std::vector<Attribute>& attrs,
                            double penalty = 1.0);

// Disjunction over the root-to-(+)-leaf paths of the conjunction of path
// literals. Leaf(+) is true, Leaf(-) is false.
Formula tree_to_formula(const DecisionTree& tree);

enum class SeparatorVariant
{
    basic,
    incremental,
    refined,
};

enum class AttributeMode
{
    separator,         // attributes from join-maximal separator constraints
    octagon_templates, // enumerative baseline with bounded constants
};

struct LearnerConfig
{
    DomainKind domain = DomainKind::polytope;
    SeparatorVariant variant = SeparatorVariant::incremental;
    AttributeMode mode = AttributeMode::separator;
    double penalty = 1.0;
    // Also harvest the atoms of Init, Good and the unprimed atoms of Trans
    // into the pool (persisting across regenerations).
    bool spec_atoms = false;
    // Initial constant bound of the octagon-templates baseline; grows by one
    // whenever the pool is insufficient.
    Int template_bound = 1;
};

// The ICE-DT learner. Holds the attribute pool across iterations and the
// separator history for the incremental variants; one learner per run.
class Learner
{
public:
    Learner(TranSys sys, LearnerConfig cfg);

    // Reuse the cached pool when it is still sufficient, otherwise
    // regenerate attributes from a fresh separator; then build a consistent
    // tree and return it as a formula.
    Formula learn(const Sample& sample);

    // Run the configured separator variant and replace the pool with its
    // constraints (plus the harvested atoms in spec_atoms mode).
    const std::vector<Attribute>& generate_attributes(const Sample& sample);

    const std::vector<Attribute>& pool() const { return pool_; }
    const SeparatorStats& stats() const { return stats_; }

    // Instrumentation: called with every separator the learner computes.
    void set_separator_observer(std::function<void(const Separator&)> observer)
    {
        observer_ = std::move(observer);
    }
    void set_trace(TraceFn trace) { trace_ = std::move(trace); }

private:
    std::vector<Attribute> dedup_view(const std::vector<State>& points) const;
    void regenerate_templates();

    TranSys sys_;
    LearnerConfig cfg_;
    std::vector<Attribute> pool_;
    std::vector<Attribute> harvested_;
    std::optional<AbstractElement> init_elem_;
    SeparatorStack inc_stack_;
    ForestStack ref_stack_;
    SeparatorStats stats_;
    Int template_bound_;
    std::function<void(const Separator&)> observer_;
    TraceFn trace_;
};

} // namespace icesep
