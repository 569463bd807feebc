#include "icesep/smt2.hpp"

#include <sstream>

#include "sexpr.hpp"

namespace icesep
{

std::string primed_name(const std::string& var)
{
    return var + "!p";
}

std::vector<std::string> with_primed_names(const std::vector<std::string>& vars)
{
    std::vector<std::string> names = vars;
    names.reserve(vars.size() * 2);
    for (const auto& v : vars)
        names.push_back(primed_name(v));
    return names;
}

namespace
{

void print_int(std::ostream& out, const Int& k)
{
    if (k < 0)
        out << "(- " << -k << ")";
    else
        out << k;
}

void print_atom(std::ostream& out, const LinearConstraint& c, const std::vector<std::string>& names)
{
    if (c.coeffs.size() > names.size())
        throw StructuralError("atom wider than the provided symbol list");
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] != 0)
            cols.push_back(i);

    auto print_term = [&](std::size_t i) {
        const Int& a = c.coeffs[i];
        if (a == 1)
            out << names[i];
        else if (a == -1)
            out << "(- " << names[i] << ")";
        else if (a > 0)
            out << "(* " << a << ' ' << names[i] << ")";
        else
            out << "(- (* " << -a << ' ' << names[i] << "))";
    };

    out << (c.rel == Rel::le ? "(<= " : "(= ");
    if (cols.size() == 1)
        print_term(cols[0]);
    else
    {
        out << "(+";
        for (std::size_t i : cols)
        {
            out << ' ';
            print_term(i);
        }
        out << ")";
    }
    out << ' ';
    print_int(out, c.bound);
    out << ')';
}

void print_formula(std::ostream& out, const Formula& f, const std::vector<std::string>& names)
{
    switch (f.kind())
    {
    case Formula::Kind::conj:
        if (f.args().empty())
        {
            out << "true";
            return;
        }
        out << "(and";
        for (const Formula& g : f.args())
        {
            out << ' ';
            print_formula(out, g, names);
        }
        out << ')';
        return;
    case Formula::Kind::disj:
        if (f.args().empty())
        {
            out << "false";
            return;
        }
        out << "(or";
        for (const Formula& g : f.args())
        {
            out << ' ';
            print_formula(out, g, names);
        }
        out << ')';
        return;
    case Formula::Kind::neg:
        out << "(not ";
        print_formula(out, f.args().front(), names);
        out << ')';
        return;
    case Formula::Kind::atom:
        print_atom(out, f.constraint(), names);
        return;
    }
}

} // namespace

std::string print_smt2(const Formula& f, const std::vector<std::string>& names)
{
    std::ostringstream out;
    print_formula(out, f, names);
    return out.str();
}

namespace
{

std::optional<Int> model_value(const sexpr::Node& node)
{
    if (auto k = sexpr::as_int(node))
        return k;
    // (- INT)
    if (node.is_list && node.items.size() == 2 && node.items[0].is_symbol("-"))
        if (auto k = sexpr::as_int(node.items[1]))
            return -*k;
    return std::nullopt;
}

} // namespace

State parse_model(std::string_view text, const std::vector<std::string>& vars)
{
    sexpr::Reader reader(text);
    if (reader.at_end())
        throw ParseException({DiagKind::syntax, "empty model response", {}});
    sexpr::Node top = reader.read();
    if (!top.is_list)
        throw ParseException({DiagKind::syntax, "expected a parenthesized model", top.span});

    State s(vars.size(), Int(0));
    std::size_t first = 0;
    // Tolerate the legacy "(model ...)" wrapper.
    if (!top.items.empty() && top.items[0].is_symbol("model"))
        first = 1;
    for (std::size_t i = first; i < top.items.size(); ++i)
    {
        const sexpr::Node& entry = top.items[i];
        if (!entry.is_list || entry.items.size() != 5 || !entry.items[0].is_symbol("define-fun"))
            continue;
        const sexpr::Node& name = entry.items[1];
        const sexpr::Node& args = entry.items[2];
        const sexpr::Node& sort = entry.items[3];
        if (name.is_list || !args.is_list || !args.items.empty() || !sort.is_symbol("Int"))
            continue;
        for (std::size_t v = 0; v < vars.size(); ++v)
        {
            if (vars[v] != name.token)
                continue;
            auto value = model_value(entry.items[4]);
            if (!value)
                throw ParseException(
                    {DiagKind::syntax, "non-integer model value for '" + name.token + "'", entry.items[4].span});
            s[v] = *value;
        }
    }
    return s;
}

} // namespace icesep
