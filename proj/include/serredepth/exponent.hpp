#ifndef SERREDEPTH_EXPONENT_HPP
#define SERREDEPTH_EXPONENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace serredepth {

/// An integer vector of length n. Nonnegative instances encode monomials,
/// signed instances encode Z^n-degrees.
using Exponent = std::vector<int>;

/// A subset of the index set {0,...,n-1}, bit i set iff i is a member.
using Subset = std::uint32_t;

/// Largest supported variable/vertex count. Every enumeration in this
/// library walks subset lattices, so the cap is generous rather than tight.
inline constexpr int kMaxVars = 24;

/// Sentinel for the Krull dimension of the zero module.
inline constexpr int kMinusInfinity = -(1 << 30);

inline int popcount(Subset s) { return __builtin_popcount(s); }

inline Subset full_subset(int n) { return (n >= 32) ? ~Subset{0} : ((Subset{1} << n) - 1); }

inline bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }

/// a divides x^b, i.e. a <= b coordinatewise.
bool divides(const Exponent& a, const Exponent& b);

/// Coordinatewise sum (monomial product).
Exponent exponent_sum(const Exponent& a, const Exponent& b);

/// Coordinatewise max(a, 0).
Exponent positive_part(const Exponent& a);

Exponent negate(const Exponent& a);

/// Indices with nonzero entry.
Subset exponent_support(const Exponent& a);

bool lex_less(const Exponent& a, const Exponent& b);

/// Members of a subset in increasing order.
std::vector<int> subset_members(Subset s);

/// Render a subset as 1-based indices, e.g. "{1,3}".
std::string subset_to_string(Subset s);

} // namespace serredepth

#endif
