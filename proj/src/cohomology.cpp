#include "serredepth/cohomology.hpp"

#include <algorithm>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "serredepth/errors.hpp"
#include "serredepth/homology.hpp"
#include "serredepth/simplicial_complex.hpp"

namespace serredepth {

int dual_piece_dim(const MonomialIdeal& I, const Exponent& a, int j, const FieldSpec& field) {
    if (!I.is_proper()) throw input_error("dual pieces require a proper ideal");
    if (j < 0 || j > I.var_count()) throw input_error("cohomological index out of range");
    int h_count = 0;
    for (int v : a)
        if (v > 0) ++h_count;
    int degree = j - h_count - 1;
    if (degree < -1 || degree > I.var_count() - 1) return 0;
    SimplicialComplex delta = takayama_complex(I, negate(a));
    return reduced_homology_dims(delta, field).dim(degree);
}

namespace {

// Per-j accumulator for the class sweep. Merging is associative and
// commutative, so the reduction is deterministic for any worker count.
//
// A nonzero class contributes the count of its kPos coordinates F: the
// piece equals a degree piece of H^{j-|F|} of the quotient localized at
// P_F and restricted to the smaller ring, so it certifies P_F in the
// support of the dual. Coordinates that are merely negative do not
// certify anything beyond that: the pieces in those directions need not
// extend to a cone. A nonzero class with no kPos coordinate therefore
// contributes dimension 0 (a finite-length dual).
struct JAccumulator {
    int best_pos_count = -1;
    std::uint64_t best_index = UINT64_MAX;

    void absorb_class(std::uint64_t index, int pos_count) {
        if (pos_count > best_pos_count ||
            (pos_count == best_pos_count && index < best_index)) {
            best_pos_count = pos_count;
            best_index = index;
        }
    }

    void merge(const JAccumulator& other) {
        if (other.best_pos_count > best_pos_count ||
            (other.best_pos_count == best_pos_count && other.best_index < best_index)) {
            best_pos_count = other.best_pos_count;
            best_index = other.best_index;
        }
    }
};

struct SweepState {
    std::vector<JAccumulator> per_j;

    explicit SweepState(int n) : per_j(static_cast<std::size_t>(n) + 1) {}

    void merge(const SweepState& other) {
        for (std::size_t j = 0; j < per_j.size(); ++j) per_j[j].merge(other.per_j[j]);
    }
};

// Evaluates one degree class at its representative: the Takayama grading
// is capped at the bounding multidegree, which cannot change the complex
// because no generator exponent exceeds it.
void evaluate_class(const MonomialIdeal& I, const FieldSpec& field, const Exponent& gprime,
                    const Exponent& gdeg, std::uint64_t index, SweepState& state,
                    std::map<Exponent, HomologyDims>& takayama_memo) {
    int n = I.var_count();
    DegreeClassPattern pattern = pattern_from_index(gprime, index);
    Exponent rep = pattern.representative(gprime);

    Exponent grading(static_cast<std::size_t>(n));
    int pos_count = 0;
    for (int i = 0; i < n; ++i) {
        if (rep[i] > 0) {
            grading[i] = -1;
            ++pos_count;
        } else {
            grading[i] = std::min(-rep[i], gdeg[i]);
        }
    }

    auto it = takayama_memo.find(grading);
    if (it == takayama_memo.end()) {
        HomologyDims dims = reduced_homology_dims(takayama_complex(I, grading), field);
        it = takayama_memo.emplace(grading, std::move(dims)).first;
    }
    const HomologyDims& hom = it->second;

    for (int j = 0; j <= n; ++j) {
        int degree = j - pos_count - 1;
        if (degree < -1 || degree > n - 1) continue;
        if (hom.dim(degree) > 0)
            state.per_j[static_cast<std::size_t>(j)].absorb_class(index, pos_count);
    }
}

CohomologyProfile finish_profile(const MonomialIdeal& I, const SweepState& state,
                                 const Exponent& gprime) {
    int n = I.var_count();
    std::vector<int> dual_dims(static_cast<std::size_t>(n) + 1, kMinusInfinity);
    std::vector<std::optional<DegreeClassPattern>> witnesses(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const JAccumulator& acc = state.per_j[static_cast<std::size_t>(j)];
        if (acc.best_pos_count >= 0) {
            dual_dims[static_cast<std::size_t>(j)] = acc.best_pos_count;
            witnesses[static_cast<std::size_t>(j)] = pattern_from_index(gprime, acc.best_index);
        }
    }
    return CohomologyProfile(n, std::move(dual_dims), std::move(witnesses));
}

} // namespace

CohomologyProfile cohomology_profile(const MonomialIdeal& I, const FieldSpec& field,
                                     const ProfileOptions& options) {
    if (!I.is_proper()) throw input_error("cohomology profile requires a proper ideal");
    std::uint64_t count = degree_class_count(I);
    if (count > options.budget)
        throw budget_error("degree-class count " + std::to_string(count) +
                           " exceeds the budget of " + std::to_string(options.budget));

    Exponent gprime = capped_degrees(I);
    Exponent gdeg = bounding_multidegree(I);
    int n = I.var_count();

#ifdef _OPENMP
    if (!options.serial) {
        int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
        threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(
                                                        count, std::uint64_t{1} << 16))));
        std::vector<SweepState> locals(static_cast<std::size_t>(threads), SweepState(n));
#pragma omp parallel num_threads(threads)
        {
            int tid = omp_get_thread_num();
            std::map<Exponent, HomologyDims> memo;
#pragma omp for schedule(dynamic, 64)
            for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx)
                evaluate_class(I, field, gprime, gdeg, static_cast<std::uint64_t>(idx),
                               locals[static_cast<std::size_t>(tid)], memo);
        }
        SweepState state(n);
        for (const SweepState& local : locals) state.merge(local);
        return finish_profile(I, state, gprime);
    }
#endif

    // serial reference sweep
    SweepState state(n);
    std::map<Exponent, HomologyDims> memo;
    for (std::uint64_t idx = 0; idx < count; ++idx)
        evaluate_class(I, field, gprime, gdeg, idx, state, memo);
    return finish_profile(I, state, gprime);
}

int depth_from_profile(const CohomologyProfile& profile) {
    for (int j = 0; j <= profile.var_count(); ++j)
        if (profile.nonzero(j)) return j;
    throw internal_error("no nonvanishing local cohomology found for a proper ideal");
}

int serre_depth_from_profile(const CohomologyProfile& profile, int r) {
    if (r < 1) throw input_error("Serre depth index r must be positive");
    for (int j = 0; j <= profile.var_count(); ++j)
        if (profile.nonzero(j) && profile.dual_dim(j) >= j - r + 1) return j;
    throw internal_error("Serre depth condition never satisfied; top cohomology dual "
                         "should have full dimension");
}

int serre_depth_ideal_module_from_profile(const CohomologyProfile& profile, int r) {
    if (r < 1) throw input_error("Serre depth index r must be positive");
    int n = profile.var_count();
    for (int j = 1; j <= n - 1; ++j)
        if (profile.nonzero(j - 1) && profile.dual_dim(j - 1) >= j - r + 1) return j;
    return n; // the dual of H^n(I) always has dimension n
}

int depth(const MonomialIdeal& I, const FieldSpec& field, const ProfileOptions& options) {
    return depth_from_profile(cohomology_profile(I, field, options));
}

int serre_depth(const MonomialIdeal& I, int r, const FieldSpec& field,
                const ProfileOptions& options) {
    return serre_depth_from_profile(cohomology_profile(I, field, options), r);
}

int serre_depth_ideal_module(const MonomialIdeal& I, int r, const FieldSpec& field,
                             const ProfileOptions& options) {
    if (I.is_zero() || I.is_unit())
        throw input_error("the ideal-module Serre depth requires a proper nonzero ideal");
    return serre_depth_ideal_module_from_profile(cohomology_profile(I, field, options), r);
}

std::vector<int> depth_strata_from_profile(const CohomologyProfile& profile, int quotient_dim) {
    int d = std::max(1, quotient_dim);
    std::vector<int> strata;
    strata.reserve(static_cast<std::size_t>(d));
    for (int r = 1; r <= d; ++r) strata.push_back(serre_depth_from_profile(profile, r));
    return strata;
}

std::vector<int> depth_strata_point(const MonomialIdeal& I, const FieldSpec& field,
                                    const ProfileOptions& options) {
    return depth_strata_from_profile(cohomology_profile(I, field, options), dim_quotient(I));
}

bool is_serre_condition(const MonomialIdeal& I, int r, const FieldSpec& field, SerreMode mode,
                        const ProfileOptions& options) {
    if (!I.is_proper()) throw input_error("Serre condition requires a proper ideal");
    if (r < 1) throw input_error("Serre condition index r must be positive");
    if (r == 1 && mode == SerreMode::kLiteralS1) {
        if (I.is_zero()) return true; // the ambient ring has no embedded primes
        return !classify_components(I).has_embedded;
    }
    return serre_depth(I, r, field, options) == dim_quotient(I);
}

bool direct_serre_check(const MonomialIdeal& I, int r, const FieldSpec& field,
                        const ProfileOptions& options) {
    if (!I.is_proper()) throw input_error("Serre condition requires a proper ideal");
    if (r < 1) throw input_error("Serre condition index r must be positive");
    int n = I.var_count();
    Subset full = full_subset(n);
    for (Subset face = 0;; ++face) {
        MonomialIdeal localized = localize(I, face);
        // P_face supports S/I iff the localization stays proper; at the full
        // face the localized quotient is the residue field, depth = dim = 0.
        if (localized.is_proper() && face != full) {
            MonomialIdeal restricted = drop_variables(localized, face);
            CohomologyProfile profile = cohomology_profile(restricted, field, options);
            int local_depth = depth_from_profile(profile);
            int local_dim = dim_quotient(restricted);
            if (local_depth < std::min(r, local_dim)) return false;
        }
        if (face == full) break;
    }
    return true;
}

} // namespace serredepth
