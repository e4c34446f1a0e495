#ifndef SERREDEPTH_PARSER_HPP
#define SERREDEPTH_PARSER_HPP

#include <string>
#include <vector>

#include "serredepth/monomial_ideal.hpp"

namespace serredepth {

struct ParsedIdeal {
    std::vector<std::string> vars;
    MonomialIdeal ideal;
    std::vector<std::string> warnings;
};

/// Splits a comma-separated variable list; rejects duplicates and names
/// that are not identifiers.
std::vector<std::string> parse_var_list(const std::string& text);

/// Parses "term (',' term)*" with "term := factor ('*' factor)*" and
/// "factor := var ('^' uint)?" against the declared variables; whitespace
/// is insignificant. An empty or blank string yields the zero ideal.
/// Syntax errors carry the offending position.
///
/// With an empty `vars` the variables must be named x1, x2, ... and the
/// variable count is the largest index mentioned.
ParsedIdeal parse_ideal(const std::string& text, const std::vector<std::string>& vars);

} // namespace serredepth

#endif
