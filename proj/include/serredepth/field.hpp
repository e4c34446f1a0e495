#ifndef SERREDEPTH_FIELD_HPP
#define SERREDEPTH_FIELD_HPP

#include <cstdint>

namespace serredepth {

/// Coefficient field: the rationals (characteristic 0) or GF(p) for a
/// prime p < 2^31.
struct FieldSpec {
    std::int64_t characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }

    /// Throws input_error if p is not a prime below 2^31.
    static FieldSpec prime_field(std::int64_t p);

    bool operator==(const FieldSpec&) const = default;
};

} // namespace serredepth

#endif
