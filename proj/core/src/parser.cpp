#include "icesep/parser.hpp"

#include <map>

#include "sexpr.hpp"

namespace icesep
{

namespace
{

using sexpr::Node;

// Linear term over the current scope: coefficient per column plus a constant.
struct LinTerm
{
    std::vector<Int> coeffs;
    Int constant;
};

struct SystemParser
{
    std::vector<std::string> vars;
    std::map<std::string, std::size_t> index;

    [[noreturn]] static void fail(DiagKind kind, std::string message, SourceSpan span)
    {
        throw ParseException({kind, std::move(message), span});
    }

    std::size_t width(bool allow_primed) const { return allow_primed ? 2 * vars.size() : vars.size(); }

    std::size_t resolve(const Node& node, bool allow_primed) const
    {
        const std::string& name = node.token;
        bool primed = name.size() > 1 && name.back() == '\'';
        std::string base = primed ? name.substr(0, name.size() - 1) : name;
        auto it = index.find(base);
        if (it == index.end() || base.find('\'') != std::string::npos)
            fail(DiagKind::unbound_variable, "unbound variable '" + name + "'", node.span);
        if (primed && !allow_primed)
            fail(DiagKind::primed_outside_trans, "primed variable '" + name + "' outside (trans ...)", node.span);
        return primed ? vars.size() + it->second : it->second;
    }

    LinTerm parse_term(const Node& node, bool allow_primed)
    {
        LinTerm t{std::vector<Int>(width(allow_primed), Int(0)), Int(0)};
        if (!node.is_list)
        {
            if (auto k = sexpr::as_int(node))
            {
                t.constant = *k;
                return t;
            }
            t.coeffs[resolve(node, allow_primed)] = 1;
            return t;
        }
        if (node.items.empty() || node.items[0].is_list)
            fail(DiagKind::syntax, "expected +, - or * term", node.span);
        const std::string& op = node.items[0].token;
        auto arity = node.items.size() - 1;
        if (op == "+")
        {
            if (arity < 1)
                fail(DiagKind::syntax, "(+ ...) needs at least one argument", node.span);
            for (std::size_t i = 1; i < node.items.size(); ++i)
                accumulate(t, parse_term(node.items[i], allow_primed), 1);
            return t;
        }
        if (op == "-")
        {
            if (arity == 1)
            {
                accumulate(t, parse_term(node.items[1], allow_primed), -1);
                return t;
            }
            if (arity == 2)
            {
                accumulate(t, parse_term(node.items[1], allow_primed), 1);
                accumulate(t, parse_term(node.items[2], allow_primed), -1);
                return t;
            }
            fail(DiagKind::syntax, "(- ...) takes one or two arguments", node.span);
        }
        if (op == "*")
        {
            if (arity != 2)
                fail(DiagKind::syntax, "(* ...) takes two arguments", node.span);
            auto k1 = sexpr::as_int(node.items[1]);
            auto k2 = sexpr::as_int(node.items[2]);
            if (k1)
            {
                accumulate(t, parse_term(node.items[2], allow_primed), *k1);
                return t;
            }
            if (k2)
            {
                accumulate(t, parse_term(node.items[1], allow_primed), *k2);
                return t;
            }
            fail(DiagKind::nonlinear_term, "non-linear product: one factor must be an integer literal",
                 node.span);
        }
        fail(DiagKind::syntax, "unknown term operator '" + op + "'", node.items[0].span);
    }

    static void accumulate(LinTerm& into, const LinTerm& from, const Int& scale)
    {
        for (std::size_t i = 0; i < into.coeffs.size(); ++i)
            into.coeffs[i] += scale * from.coeffs[i];
        into.constant += scale * from.constant;
    }

    // (REL t1 t2): move everything left, normalize strict inequalities away.
    Formula parse_atom(const Node& node, bool allow_primed)
    {
        const std::string& rel = node.items[0].token;
        if (node.items.size() != 3)
            fail(DiagKind::syntax, "(" + rel + " ...) takes two terms", node.span);
        LinTerm lhs = parse_term(node.items[1], allow_primed);
        accumulate(lhs, parse_term(node.items[2], allow_primed), -1);
        std::vector<Int> coeffs = std::move(lhs.coeffs);
        Int bound = -lhs.constant;

        bool constant_atom = true;
        for (const Int& a : coeffs)
            if (a != 0)
                constant_atom = false;

        auto as_formula = [&](bool truth) { return truth ? Formula::tru() : Formula::fls(); };
        if (rel == "=")
        {
            if (constant_atom)
                return as_formula(bound == 0);
            auto c = make_eq(std::move(coeffs), std::move(bound));
            return c ? Formula::atom(std::move(*c)) : Formula::fls();
        }
        Int shift = 0;
        bool flip = false;
        if (rel == "<=")
            ;
        else if (rel == "<")
            shift = -1;
        else if (rel == ">=")
            flip = true;
        else if (rel == ">")
        {
            flip = true;
            shift = -1;
        }
        else
            fail(DiagKind::syntax, "unknown relation '" + rel + "'", node.items[0].span);
        if (flip)
        {
            for (Int& a : coeffs)
                a = -a;
            bound = -bound;
        }
        bound += shift;
        if (constant_atom)
            return as_formula(0 <= bound);
        return Formula::atom(make_le(std::move(coeffs), std::move(bound)));
    }

    Formula parse_formula(const Node& node, bool allow_primed)
    {
        if (!node.is_list)
        {
            if (node.is_symbol("true"))
                return Formula::tru();
            if (node.is_symbol("false"))
                return Formula::fls();
            fail(DiagKind::syntax, "expected a formula", node.span);
        }
        if (node.items.empty() || node.items[0].is_list)
            fail(DiagKind::syntax, "expected a formula", node.span);
        const std::string& op = node.items[0].token;
        if (op == "and" || op == "or")
        {
            if (node.items.size() < 2)
                fail(DiagKind::syntax, "(" + op + " ...) needs at least one argument", node.span);
            std::vector<Formula> args;
            for (std::size_t i = 1; i < node.items.size(); ++i)
                args.push_back(parse_formula(node.items[i], allow_primed));
            return op == "and" ? Formula::conj(std::move(args)) : Formula::disj(std::move(args));
        }
        if (op == "not")
        {
            if (node.items.size() != 2)
                fail(DiagKind::syntax, "(not ...) takes one argument", node.span);
            return Formula::neg(parse_formula(node.items[1], allow_primed));
        }
        if (op == "=>")
        {
            if (node.items.size() != 3)
                fail(DiagKind::syntax, "(=> ...) takes two arguments", node.span);
            Formula a = parse_formula(node.items[1], allow_primed);
            Formula b = parse_formula(node.items[2], allow_primed);
            std::vector<Formula> args;
            args.push_back(Formula::neg(std::move(a)));
            args.push_back(std::move(b));
            return Formula::disj(std::move(args));
        }
        if (op == "<=" || op == "<" || op == ">=" || op == ">" || op == "=")
            return parse_atom(node, allow_primed);
        fail(DiagKind::syntax, "unknown formula operator '" + op + "'", node.items[0].span);
    }
};

} // namespace

TranSys parse_system(std::string_view text)
{
    sexpr::Reader reader(text);
    SystemParser p;

    std::vector<Node> forms;
    while (!reader.at_end())
        forms.push_back(reader.read());

    std::size_t at = 0;
    auto section_head = [&](const Node& node) -> const std::string& {
        static const std::string empty;
        if (!node.is_list || node.items.empty() || node.items[0].is_list)
            return empty;
        return node.items[0].token;
    };

    while (at < forms.size() && section_head(forms[at]) == "declare-var")
    {
        const Node& d = forms[at];
        if (d.items.size() != 3 || d.items[1].is_list || !d.items[2].is_symbol("Int"))
            SystemParser::fail(DiagKind::syntax, "expected (declare-var NAME Int)", d.span);
        const std::string& name = d.items[1].token;
        if (name.find('\'') != std::string::npos || sexpr::as_int(d.items[1]))
            SystemParser::fail(DiagKind::syntax, "invalid variable name '" + name + "'", d.items[1].span);
        if (p.index.count(name))
            SystemParser::fail(DiagKind::syntax, "duplicate variable '" + name + "'", d.items[1].span);
        p.index.emplace(name, p.vars.size());
        p.vars.push_back(name);
        ++at;
    }
    if (p.vars.empty())
        SystemParser::fail(DiagKind::missing_section, "expected at least one (declare-var NAME Int)",
                           forms.empty() ? SourceSpan{} : forms[0].span);

    TranSys sys;
    sys.vars = p.vars;

    const char* expected[] = {"init", "trans", "good"};
    Formula* slots[] = {&sys.init, &sys.trans, &sys.good};
    for (int i = 0; i < 3; ++i)
    {
        if (at >= forms.size())
            SystemParser::fail(DiagKind::missing_section,
                               std::string("missing (") + expected[i] + " ...) section",
                               {text.size(), text.size()});
        const Node& section = forms[at];
        if (section_head(section) != expected[i])
            SystemParser::fail(DiagKind::missing_section,
                               std::string("expected (") + expected[i] + " ...) section", section.span);
        if (section.items.size() != 2)
            SystemParser::fail(DiagKind::syntax, std::string("(") + expected[i] + " ...) takes one formula",
                               section.span);
        *slots[i] = p.parse_formula(section.items[1], /*allow_primed=*/i == 1);
        ++at;
    }
    if (at != forms.size())
        SystemParser::fail(DiagKind::syntax, "unexpected trailing input", forms[at].span);
    return sys;
}

std::string to_string(DiagKind kind)
{
    switch (kind)
    {
    case DiagKind::lexical: return "lexical";
    case DiagKind::syntax: return "syntax";
    case DiagKind::unbound_variable: return "unbound-variable";
    case DiagKind::primed_outside_trans: return "primed-outside-trans";
    case DiagKind::nonlinear_term: return "nonlinear-term";
    case DiagKind::missing_section: return "missing-section";
    }
    return "unknown";
}

} // namespace icesep
