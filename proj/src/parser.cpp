#include "serredepth/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "serredepth/errors.hpp"

namespace serredepth {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("syntax error at position " + std::to_string(pos + 1) + ": " + what);
    }

    bool at_end() {
        skip_space();
        return pos == text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string identifier() {
        skip_space();
        if (pos >= text.size() || !is_ident_start(text[pos])) fail("expected a variable name");
        std::size_t start = pos;
        while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }

    long long number() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a nonnegative integer exponent");
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail("exponent is too large");
            ++pos;
        }
        return value;
    }
};

// Names x<k> when no variable list is declared; returns 0 otherwise.
int implicit_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x') return 0;
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
        idx = idx * 10 + (name[i] - '0');
        if (idx > kMaxVars) return 0;
    }
    return idx;
}

} // namespace

std::vector<std::string> parse_var_list(const std::string& text) {
    std::vector<std::string> vars;
    std::set<std::string> seen;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string name = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto strip = [](std::string s) {
            auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
            while (!s.empty() && issp(s.front())) s.erase(s.begin());
            while (!s.empty() && issp(s.back())) s.pop_back();
            return s;
        };
        name = strip(name);
        if (name.empty()) throw input_error("empty variable name in the list");
        if (!is_ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), is_ident_char))
            throw input_error("'" + name + "' is not a valid variable name");
        if (!seen.insert(name).second) throw input_error("duplicate variable '" + name + "'");
        vars.push_back(name);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(vars.size()) > kMaxVars)
        throw input_error("at most " + std::to_string(kMaxVars) + " variables are supported");
    return vars;
}

ParsedIdeal parse_ideal(const std::string& text, const std::vector<std::string>& vars) {
    Lexer lex{text};

    // first pass when the variable universe is implicit: find the largest x<k>
    std::vector<std::string> names = vars;
    if (names.empty()) {
        Lexer scan{text};
        int max_index = 0;
        while (!scan.at_end()) {
            char c = scan.peek();
            if (is_ident_start(c)) {
                std::string id = scan.identifier();
                int idx = implicit_index(id);
                if (idx == 0)
                    throw input_error("variable '" + id +
                                      "' requires an explicit --vars declaration "
                                      "(implicit names are x1, x2, ...)");
                max_index = std::max(max_index, idx);
            } else {
                ++scan.pos;
            }
        }
        if (max_index == 0) {
            if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos)
                throw input_error("no variables found in the ideal expression");
            max_index = 1; // blank input: zero ideal in one variable
        }
        for (int i = 1; i <= max_index; ++i) names.push_back("x" + std::to_string(i));
    }

    std::map<std::string, int> index_of;
    for (std::size_t i = 0; i < names.size(); ++i) index_of[names[i]] = static_cast<int>(i);
    int n = static_cast<int>(names.size());

    ParsedIdeal result{names, MonomialIdeal::zero(n), {}};
    if (lex.at_end()) return result;

    std::vector<Exponent> gens;
    while (true) {
        Exponent term(static_cast<std::size_t>(n), 0);
        std::string rendered;
        while (true) {
            lex.skip_space();
            std::size_t at = lex.pos;
            std::string id = lex.identifier();
            auto it = index_of.find(id);
            if (it == index_of.end()) {
                lex.pos = at;
                lex.fail("unknown variable '" + id + "'");
            }
            long long e = 1;
            if (lex.peek() == '^') {
                ++lex.pos;
                e = lex.number();
            }
            term[static_cast<std::size_t>(it->second)] += static_cast<int>(e);
            rendered += (rendered.empty() ? "" : "*") + id + (e == 1 ? "" : "^" + std::to_string(e));
            if (lex.peek() != '*') break;
            ++lex.pos;
        }
        if (exponent_support(term) == 0)
            result.warnings.push_back("term '" + rendered +
                                      "' equals 1; the ideal is the unit ideal");
        gens.push_back(std::move(term));
        char c = lex.peek();
        if (c == '\0') break;
        if (c != ',') lex.fail("expected ',' or '*'");
        ++lex.pos;
    }
    result.ideal = MonomialIdeal::from_generators(n, std::move(gens));
    return result;
}

} // namespace serredepth
