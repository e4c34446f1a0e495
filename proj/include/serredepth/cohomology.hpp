#ifndef SERREDEPTH_COHOMOLOGY_HPP
#define SERREDEPTH_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "serredepth/degree_classes.hpp"
#include "serredepth/exponent.hpp"
#include "serredepth/field.hpp"
#include "serredepth/monomial_ideal.hpp"

namespace serredepth {

struct ProfileOptions {
    /// Worker count for the degree-class sweep; 0 means all available.
    /// Results are identical for every value.
    int jobs = 0;

    /// Ceiling on the degree-class count; exceeding it raises budget_error.
    std::uint64_t budget = 10'000'000;

    /// Force the serial reference sweep (used by tests and the benchmark).
    bool serial = false;
};

/// For each cohomological index j in 0..n, the Krull dimension of the
/// Matlis dual of H^j_m(S/I): kMinusInfinity when the module vanishes,
/// otherwise a value in 0..n. A witness degree class attaining each
/// finite value is kept for reporting.
class CohomologyProfile {
public:
    CohomologyProfile(int n, std::vector<int> dual_dims,
                      std::vector<std::optional<DegreeClassPattern>> witnesses)
        : n_(n), dual_dims_(std::move(dual_dims)), witnesses_(std::move(witnesses)) {}

    int var_count() const { return n_; }

    int dual_dim(int j) const { return dual_dims_.at(static_cast<std::size_t>(j)); }
    bool nonzero(int j) const { return dual_dim(j) != kMinusInfinity; }

    const std::optional<DegreeClassPattern>& witness(int j) const {
        return witnesses_.at(static_cast<std::size_t>(j));
    }

private:
    int n_;
    std::vector<int> dual_dims_;                            // index j = 0..n
    std::vector<std::optional<DegreeClassPattern>> witnesses_;
};

/// Dimension of the degree-a piece of the Matlis dual of H^j_m(S/I),
/// evaluated directly from the homology of the Takayama complex at -a.
/// This is the per-degree route; it makes no use of the class partition.
int dual_piece_dim(const MonomialIdeal& I, const Exponent& a, int j, const FieldSpec& field);

/// Full sweep over the degree classes. Requires I proper.
CohomologyProfile cohomology_profile(const MonomialIdeal& I, const FieldSpec& field,
                                     const ProfileOptions& options = {});

int depth_from_profile(const CohomologyProfile& profile);
int serre_depth_from_profile(const CohomologyProfile& profile, int r);

/// Serre depth of the ideal I as a module, read off the quotient profile
/// via the degree shift between H^j(I) and H^{j-1}(S/I).
int serre_depth_ideal_module_from_profile(const CohomologyProfile& profile, int r);

int depth(const MonomialIdeal& I, const FieldSpec& field, const ProfileOptions& options = {});
int serre_depth(const MonomialIdeal& I, int r, const FieldSpec& field,
                const ProfileOptions& options = {});
int serre_depth_ideal_module(const MonomialIdeal& I, int r, const FieldSpec& field,
                             const ProfileOptions& options = {});

/// Serre depths for r = 1..max(1, dim(S/I)) from a single profile.
std::vector<int> depth_strata_point(const MonomialIdeal& I, const FieldSpec& field,
                                    const ProfileOptions& options = {});
std::vector<int> depth_strata_from_profile(const CohomologyProfile& profile, int quotient_dim);

/// Two readings of the condition (S_1); they agree for r >= 2.
///   kTheorem   serre depth equals dimension (equidimensional + no
///              embedded primes),
///   kLiteralS1 no embedded associated primes.
enum class SerreMode { kTheorem, kLiteralS1 };

bool is_serre_condition(const MonomialIdeal& I, int r, const FieldSpec& field, SerreMode mode,
                        const ProfileOptions& options = {});

/// Definitional check over the monomial primes: at every monomial
/// localization, depth >= min(r, dim). Used as a cross-check oracle.
bool direct_serre_check(const MonomialIdeal& I, int r, const FieldSpec& field,
                        const ProfileOptions& options = {});

} // namespace serredepth

#endif
