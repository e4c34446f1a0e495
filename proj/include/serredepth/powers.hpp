#ifndef SERREDEPTH_POWERS_HPP
#define SERREDEPTH_POWERS_HPP

#include <optional>
#include <vector>

#include "serredepth/cohomology.hpp"
#include "serredepth/field.hpp"
#include "serredepth/monomial_ideal.hpp"

namespace serredepth {

struct PowerRow {
    int k = 0;
    int dim = 0;
    int depth = 0;
    std::vector<int> strata; // Serre depths for r = 1..max(1, dim(S/I))

    bool operator==(const PowerRow&) const = default;
};

struct PowerTable {
    int strata_length = 0;
    std::vector<PowerRow> rows;
};

/// Dimension, depth and depth strata of S/I^k for k = 1..k_max. Powers are
/// built incrementally with minimization at every step. A row whose
/// degree-class count exceeds options.budget aborts with budget_error
/// rather than hanging; that outcome is distinct from "unstable".
PowerTable power_table(const MonomialIdeal& I, int k_max, const FieldSpec& field,
                       const ProfileOptions& options = {});

/// Empirical stabilization verdict: the eventual constancy is a theorem,
/// but no effective bound is available, so only window constancy is
/// reported. onset is the first k of the maximal constant suffix.
struct StabilizationReport {
    bool stable = false;
    std::optional<int> onset;
    std::optional<std::vector<int>> limit;
    int window = 0;
};

StabilizationReport stabilization_report(const PowerTable& table, int window);

struct StrataProperties {
    bool monotone_rows = false;    // dim >= S_1 >= ... >= S_d >= 0
    bool zero_propagation = false; // any zero entry forces the whole row to zero
    bool suffix_constant = false;  // the final two rows agree (vacuous for one row)

    bool all() const { return monotone_rows && zero_propagation && suffix_constant; }
};

StrataProperties strata_properties_check(const PowerTable& table);

} // namespace serredepth

#endif
