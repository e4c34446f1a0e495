#ifndef SERREDEPTH_DEGREE_CLASSES_HPP
#define SERREDEPTH_DEGREE_CLASSES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "serredepth/exponent.hpp"
#include "serredepth/monomial_ideal.hpp"

namespace serredepth {

/// Per-coordinate symbolic class of a Z^n-degree a:
///   kPos      a(i) >= 1            (unbounded),
///   kFin      a(i) = -v exactly, 0 <= v <= g'_i - 1,
///   kNegCap   a(i) <= -g'_i        (unbounded),
/// where g'_i = max(g_i, 1) and g is the bounding multidegree of the ideal.
/// The graded pieces of the local-cohomology duals are constant on each of
/// the resulting finitely many regions: the face infrastructure of the
/// degree only sees the sign of each coordinate and the value of -a
/// capped at g, because no generator exponent exceeds g.
enum class CoordClass : std::uint8_t { kPos, kFin, kNegCap };

struct CoordTag {
    CoordClass cls = CoordClass::kFin;
    int fin_value = 0; // v, meaning a(i) = -v; used only for kFin

    bool operator==(const CoordTag&) const = default;
};

class DegreeClassPattern {
public:
    explicit DegreeClassPattern(std::vector<CoordTag> tags) : tags_(std::move(tags)) {}

    const std::vector<CoordTag>& tags() const { return tags_; }

    /// One member of the class: +1 for kPos, -v for kFin, -g'_i for kNegCap.
    Exponent representative(const Exponent& gprime) const;

    /// Coordinates where every member is nonzero: kPos, kNegCap, and kFin
    /// with v >= 1.
    Subset support() const;

    /// True iff the class is infinite (has a kPos or kNegCap coordinate).
    bool unbounded() const;

    std::string to_string() const;

    bool operator==(const DegreeClassPattern&) const = default;

private:
    std::vector<CoordTag> tags_;
};

/// g' = componentwise max(bounding multidegree, 1).
Exponent capped_degrees(const MonomialIdeal& I);

/// Number of degree classes, prod(g'_i + 2), saturating at UINT64_MAX.
std::uint64_t degree_class_count(const MonomialIdeal& I);

/// Decode a class from its odometer index (coordinate 0 varies fastest):
/// digit 0 is kPos, digits 1..g'_i are kFin(-(digit-1)), digit g'_i+1 is
/// kNegCap.
DegreeClassPattern pattern_from_index(const Exponent& gprime, std::uint64_t index);

/// All degree classes of I in index order. Requires I proper.
std::vector<DegreeClassPattern> enumerate_degree_classes(const MonomialIdeal& I);

/// The unique class containing the degree a.
DegreeClassPattern degree_class_of(const MonomialIdeal& I, const Exponent& a);

} // namespace serredepth

#endif
