#pragma once

// Internal S-expression reader shared by the system parser and the SMT-LIB
// model parser. Not installed.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icesep/numbers.hpp"
#include "icesep/parser.hpp"

namespace icesep::sexpr
{

struct Node
{
    // A node is either a list or an atom token (symbol or integer literal).
    bool is_list = false;
    std::string token;
    std::vector<Node> items;
    SourceSpan span;

    bool is_symbol(std::string_view s) const { return !is_list && token == s; }
};

inline bool is_symbol_char(char c)
{
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';';
}

class Reader
{
public:
    explicit Reader(std::string_view text) : text_(text) {}

    void skip_trivia()
    {
        while (pos_ < text_.size())
        {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)))
                ++pos_;
            else if (c == ';')
            {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
            }
            else
                break;
        }
    }

    bool at_end()
    {
        skip_trivia();
        return pos_ >= text_.size();
    }

    SourceSpan here() const { return {pos_, pos_ < text_.size() ? pos_ + 1 : pos_}; }

    Node read()
    {
        skip_trivia();
        if (pos_ >= text_.size())
            throw ParseException({DiagKind::syntax, "unexpected end of input", here()});
        std::size_t begin = pos_;
        char c = text_[pos_];
        if (c == ')')
            throw ParseException({DiagKind::syntax, "unexpected ')'", here()});
        if (c == '(')
        {
            ++pos_;
            Node node;
            node.is_list = true;
            while (true)
            {
                skip_trivia();
                if (pos_ >= text_.size())
                    throw ParseException({DiagKind::syntax, "unclosed '('", {begin, pos_}});
                if (text_[pos_] == ')')
                {
                    ++pos_;
                    break;
                }
                node.items.push_back(read());
            }
            node.span = {begin, pos_};
            return node;
        }
        if (!is_symbol_char(c))
            throw ParseException({DiagKind::lexical, std::string("stray character '") + c + "'", here()});
        while (pos_ < text_.size() && is_symbol_char(text_[pos_]))
            ++pos_;
        Node node;
        node.token = std::string(text_.substr(begin, pos_ - begin));
        node.span = {begin, pos_};
        return node;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Integer literal, with an optional leading minus sign.
inline std::optional<Int> as_int(const Node& node)
{
    if (node.is_list || node.token.empty())
        return std::nullopt;
    std::size_t i = node.token[0] == '-' ? 1 : 0;
    if (i == node.token.size())
        return std::nullopt;
    for (std::size_t k = i; k < node.token.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(node.token[k])))
            return std::nullopt;
    return Int(node.token);
}

} // namespace icesep::sexpr
