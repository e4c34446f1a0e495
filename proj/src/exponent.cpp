#include "serredepth/exponent.hpp"

#include <algorithm>

namespace serredepth {

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent exponent_sum(const Exponent& a, const Exponent& b) {
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Exponent positive_part(const Exponent& a) {
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], 0);
    return c;
}

Exponent negate(const Exponent& a) {
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

Subset exponent_support(const Exponent& a) {
    Subset s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s |= Subset{1} << i;
    return s;
}

bool lex_less(const Exponent& a, const Exponent& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> subset_members(Subset s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i : subset_members(s)) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

} // namespace serredepth
