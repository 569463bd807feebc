#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "icesep/model.hpp"

namespace icesep
{

// Byte offsets into the input text, begin <= end.
struct SourceSpan
{
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class DiagKind
{
    lexical,
    syntax,
    unbound_variable,
    primed_outside_trans,
    nonlinear_term,
    missing_section,
};

struct Diagnostic
{
    DiagKind kind = DiagKind::syntax;
    std::string message;
    SourceSpan span;
};

struct ParseException : std::runtime_error
{
    explicit ParseException(Diagnostic d) : std::runtime_error(d.message), diagnostic(std::move(d)) {}
    Diagnostic diagnostic;
};

// Parse a transition-system file:
//
//   file  := decl+ init trans good
//   decl  := (declare-var NAME Int)
//   init  := (init FORM)             ; over declared vars
//   trans := (trans FORM)            ; over vars and primed vars NAME'
//   good  := (good FORM)
//   FORM  := (and FORM+) | (or FORM+) | (not FORM) | (=> FORM FORM)
//          | ATOM | true | false
//   ATOM  := (REL TERM TERM), REL in {<=, <, >=, >, =}
//   TERM  := INT | VAR | (+ TERM+) | (- TERM TERM) | (- TERM) | (* INT TERM)
//
// Strict inequalities are normalized to <= over the integers at parse time.
// Every malformed input raises ParseException with a located Diagnostic.
TranSys parse_system(std::string_view text);

std::string to_string(DiagKind kind);

} // namespace icesep
