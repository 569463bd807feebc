#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "icesep/model.hpp"

namespace icesep
{

// Name used for the primed copy of a variable in SMT-LIB exchanges.
// Apostrophes are not portable SMT-LIB symbols, so v' becomes "v!p".
std::string primed_name(const std::string& var);

// vars followed by their primed names; column layout of transition formulas.
std::vector<std::string> with_primed_names(const std::vector<std::string>& vars);

// Print as a parenthesized LIA term. `names` gives the symbol per column and
// must cover the widest atom of f (n names for state formulas, 2n for
// transition formulas). Negative literals are printed as (- k).
std::string print_smt2(const Formula& f, const std::vector<std::string>& names);

// Parse a get-model response with zero-arity integer define-fun entries into
// a state over `vars`; variables the model does not mention default to 0.
State parse_model(std::string_view text, const std::vector<std::string>& vars);

} // namespace icesep
