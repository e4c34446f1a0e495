#ifndef SERREDEPTH_MONOMIAL_IDEAL_HPP
#define SERREDEPTH_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "serredepth/exponent.hpp"

namespace serredepth {

/// A monomial ideal in a fixed number of variables, stored as its unique
/// minimal generating set (a divisibility antichain), lexicographically
/// sorted so every downstream output is reproducible.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator (0,...,0).
class MonomialIdeal {
public:
    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);

    /// Builds the ideal generated by `raw`, reduced to minimal generators.
    /// Throws input_error on a negative entry, a length mismatch, or an
    /// unsupported variable count.
    static MonomialIdeal from_generators(int n, std::vector<Exponent> raw);

    int var_count() const { return n_; }
    const std::vector<Exponent>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && exponent_support(gens_[0]) == 0; }
    bool is_proper() const { return !is_unit(); }

    bool operator==(const MonomialIdeal& other) const = default;

    /// Canonical rendering, e.g. "(x1^2, x1*x2)" with default names.
    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    MonomialIdeal(int n, std::vector<Exponent> gens) : n_(n), gens_(std::move(gens)) {}

    int n_ = 0;
    std::vector<Exponent> gens_;
};

/// The complement face F of a monomial prime P_F = (x_i : i not in F),
/// so that |F| = dim(S/P_F).
struct PrimeFace {
    Subset face = 0;

    bool operator==(const PrimeFace&) const = default;
    bool operator<(const PrimeFace& other) const { return face < other.face; }
};

/// True iff x^m lies in I, i.e. some generator divides x^m.
bool contains(const MonomialIdeal& I, const Exponent& m);

/// Coordinatewise max of generator degrees; all zeros for the zero ideal.
Exponent bounding_multidegree(const MonomialIdeal& I);

/// Monomial localization I_H: substitute x_i = 1 for i in H. The result
/// lives in the same n coordinates with the H-coordinates identically 0.
MonomialIdeal localize(const MonomialIdeal& I, Subset H);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

/// k-th power, k >= 1. Throws input_error for k <= 0.
MonomialIdeal power(const MonomialIdeal& I, int k);

/// Krull dimension of S/I: the largest |F| over subsets F such that no
/// generator is supported inside F. Unit ideal gives kMinusInfinity,
/// the zero ideal gives n.
int dim_quotient(const MonomialIdeal& I);

/// Restriction to the smaller ring on the variables outside `dropped`.
/// Every generator must have zero exponents on the dropped coordinates.
MonomialIdeal drop_variables(const MonomialIdeal& I, Subset dropped);

/// Irredundant decomposition of a proper nonzero ideal into irreducible
/// monomial ideals (each generated by pure variable powers). Components
/// are sorted by (support size, generator list).
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I);

/// Associated primes of S/I as complement faces, from an irredundant
/// irreducible decomposition. Requires I proper and nonzero.
std::vector<PrimeFace> assoc_primes(const MonomialIdeal& I);

struct ComponentClassification {
    bool unmixed = false;
    bool equidimensional = false;
    bool has_embedded = false;
    std::vector<PrimeFace> min_primes;
};

ComponentClassification classify_components(const MonomialIdeal& I);

/// Renders x^e with the given variable names (1-based defaults when empty).
std::string monomial_to_string(const Exponent& e, const std::vector<std::string>& var_names = {});

} // namespace serredepth

#endif
