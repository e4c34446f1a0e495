#include "serredepth/powers.hpp"

#include <string>

#include "serredepth/errors.hpp"

namespace serredepth {

PowerTable power_table(const MonomialIdeal& I, int k_max, const FieldSpec& field,
                       const ProfileOptions& options) {
    if (I.is_zero() || I.is_unit())
        throw input_error("power table requires a proper nonzero ideal");
    if (k_max < 1) throw input_error("k_max must be positive");

    PowerTable table;
    table.strata_length = std::max(1, dim_quotient(I));

    MonomialIdeal current = I;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) current = multiply(current, I);
        std::uint64_t count = degree_class_count(current);
        if (count > options.budget)
            throw budget_error("power " + std::to_string(k) + " needs " + std::to_string(count) +
                               " degree classes, over the budget of " +
                               std::to_string(options.budget));
        PowerRow row;
        row.k = k;
        row.dim = dim_quotient(current);
        CohomologyProfile profile = cohomology_profile(current, field, options);
        row.depth = depth_from_profile(profile);
        for (int r = 1; r <= table.strata_length; ++r)
            row.strata.push_back(serre_depth_from_profile(profile, r));
        table.rows.push_back(std::move(row));
    }
    return table;
}

StabilizationReport stabilization_report(const PowerTable& table, int window) {
    if (table.rows.empty()) throw input_error("stabilization report requires a nonempty table");
    if (window < 2) throw input_error("stabilization window must be at least 2");
    if (window > static_cast<int>(table.rows.size()))
        throw input_error("stabilization window exceeds the number of rows");

    StabilizationReport report;
    report.window = window;
    const auto& rows = table.rows;
    std::size_t last = rows.size() - 1;

    report.stable = true;
    for (std::size_t i = rows.size() - static_cast<std::size_t>(window); i < last; ++i)
        if (rows[i].strata != rows[last].strata) report.stable = false;

    if (report.stable) {
        std::size_t start = last;
        while (start > 0 && rows[start - 1].strata == rows[last].strata) --start;
        report.onset = rows[start].k;
        report.limit = rows[last].strata;
    }
    return report;
}

StrataProperties strata_properties_check(const PowerTable& table) {
    StrataProperties props;
    props.monotone_rows = true;
    props.zero_propagation = true;
    for (const PowerRow& row : table.rows) {
        int prev = row.dim;
        bool any_zero = false, all_zero = true;
        for (int s : row.strata) {
            if (s > prev || s < 0) props.monotone_rows = false;
            prev = s;
            any_zero = any_zero || s == 0;
            all_zero = all_zero && s == 0;
        }
        if (any_zero && !all_zero) props.zero_propagation = false;
    }
    props.suffix_constant =
        table.rows.size() < 2 ||
        table.rows[table.rows.size() - 2].strata == table.rows.back().strata;
    return props;
}

} // namespace serredepth
