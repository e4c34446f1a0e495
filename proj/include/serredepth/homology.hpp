#ifndef SERREDEPTH_HOMOLOGY_HPP
#define SERREDEPTH_HOMOLOGY_HPP

#include <vector>

#include "serredepth/field.hpp"
#include "serredepth/simplicial_complex.hpp"

namespace serredepth {

/// Reduced homology dimensions of the augmented chain complex. Degrees run
/// from -1 upward; dim(j) is 0 outside the stored range.
struct HomologyDims {
    /// by_card[c] = dim of the reduced homology in degree c-1.
    std::vector<int> by_card;

    int dim(int j) const {
        int c = j + 1;
        if (c < 0 || c >= static_cast<int>(by_card.size())) return 0;
        return by_card[static_cast<std::size_t>(c)];
    }

    bool all_zero() const {
        for (int d : by_card)
            if (d != 0) return false;
        return true;
    }
};

/// Exact reduced homology over Q (characteristic 0, fraction-free integer
/// elimination) or GF(p). Results are memoized process-wide, keyed by the
/// canonical facet list and the characteristic; the cache is safe to hit
/// from concurrent workers.
HomologyDims reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field);

/// Same computation, bypassing the cache.
HomologyDims reduced_homology_dims_uncached(const SimplicialComplex& complex,
                                            const FieldSpec& field);

/// Drops every memoized homology result (benchmarks, memory control).
void clear_homology_cache();

/// Exact rank of an integer matrix over Q or GF(p). Exposed for tests.
int matrix_rank(const std::vector<std::vector<long long>>& m, const FieldSpec& field);

} // namespace serredepth

#endif
