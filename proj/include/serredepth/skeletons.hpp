#ifndef SERREDEPTH_SKELETONS_HPP
#define SERREDEPTH_SKELETONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "serredepth/cohomology.hpp"
#include "serredepth/exponent.hpp"
#include "serredepth/field.hpp"
#include "serredepth/monomial_ideal.hpp"

namespace serredepth {

/// Number of coordinates where a matches g. Requires a >= 0.
int rho(const Exponent& g, const Exponent& a);

/// The i-th skeleton of I with respect to g: I plus every monomial
/// matching g in more than i coordinates, generated by the products
/// prod_{s in T} x_s^{g_s} over the (i+1)-subsets T. Requires I proper,
/// g >= bounding_multidegree(I) and 0 <= i <= dim(S/I).
///
/// When g has z zero coordinates the skeletons with i < z degenerate to
/// the unit ideal; for proper skeletons dim(S/Sigma_i) = i.
MonomialIdeal skeleton_ideal(const MonomialIdeal& I, const Exponent& g, int i);

/// Outcome of the per-index membership test behind the skeleton
/// characterization: does S/Sigma_i pass at its own dimension?
struct SkeletonCheck {
    int index = 0;
    bool passed = false;
    bool vacuous = false;       // Sigma_i was the unit ideal (zero quotient)
    int serre_depth_value = 0;  // meaningful when not vacuous
};

/// Serre depth read off the skeleton filtration: the largest i such that
/// serre_depth(S/Sigma_i, r) = i (a zero quotient passes vacuously).
/// Verifies on the way that every index below the result also passes and
/// throws internal_error with a witness otherwise.
int serre_depth_via_skeletons(const MonomialIdeal& I, const Exponent& g, int r,
                              const FieldSpec& field, const ProfileOptions& options = {});

struct SkeletonVerifyPerR {
    int r = 0;
    int cohomological = 0; // serre_depth(S/I, r)
    int via_skeletons = 0;
    bool equal = false;
    bool furthermore_ok = false;
    bool chain_monotone = false;
    std::vector<int> chain; // serre depth of S/Sigma_0 .. S/Sigma_d (kMinusInfinity = zero quotient)
    std::vector<SkeletonCheck> checks;
};

struct SkeletonVerifyReport {
    bool passed = false;
    int dimension = 0;
    std::vector<SkeletonVerifyPerR> per_r;
    /// The two readings of (S_1) disagree on S/I itself; informational.
    bool s1_mode_divergence = false;
    std::vector<std::string> failures; // human-readable witnesses

    std::string summary() const;
};

/// Cross-validates the skeleton characterization against the cohomological
/// computation for every r in 1..max(1, dim), including the chain
/// monotonicity over the filtration. Failures are reported with witnesses,
/// never swallowed.
SkeletonVerifyReport verify_skeleton_theorem(const MonomialIdeal& I, const Exponent& g,
                                             const FieldSpec& field,
                                             const ProfileOptions& options = {});

} // namespace serredepth

#endif
