#include "serredepth/degree_classes.hpp"

#include <algorithm>
#include <limits>

#include "serredepth/errors.hpp"

namespace serredepth {

Exponent DegreeClassPattern::representative(const Exponent& gprime) const {
    Exponent a(tags_.size());
    for (std::size_t i = 0; i < tags_.size(); ++i) {
        switch (tags_[i].cls) {
        case CoordClass::kPos: a[i] = 1; break;
        case CoordClass::kFin: a[i] = -tags_[i].fin_value; break;
        case CoordClass::kNegCap: a[i] = -gprime[i]; break;
        }
    }
    return a;
}

Subset DegreeClassPattern::support() const {
    Subset s = 0;
    for (std::size_t i = 0; i < tags_.size(); ++i)
        if (tags_[i].cls != CoordClass::kFin || tags_[i].fin_value >= 1) s |= Subset{1} << i;
    return s;
}

bool DegreeClassPattern::unbounded() const {
    for (const CoordTag& t : tags_)
        if (t.cls != CoordClass::kFin) return true;
    return false;
}

std::string DegreeClassPattern::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < tags_.size(); ++i) {
        if (i > 0) out += ",";
        switch (tags_[i].cls) {
        case CoordClass::kPos: out += "POS"; break;
        case CoordClass::kFin: out += "FIN(" + std::to_string(-tags_[i].fin_value) + ")"; break;
        case CoordClass::kNegCap: out += "NEGCAP"; break;
        }
    }
    return out;
}

Exponent capped_degrees(const MonomialIdeal& I) {
    Exponent g = bounding_multidegree(I);
    for (int& v : g) v = std::max(v, 1);
    return g;
}

std::uint64_t degree_class_count(const MonomialIdeal& I) {
    std::uint64_t count = 1;
    for (int gp : capped_degrees(I)) {
        auto radix = static_cast<std::uint64_t>(gp) + 2;
        if (count > std::numeric_limits<std::uint64_t>::max() / radix)
            return std::numeric_limits<std::uint64_t>::max();
        count *= radix;
    }
    return count;
}

DegreeClassPattern pattern_from_index(const Exponent& gprime, std::uint64_t index) {
    std::vector<CoordTag> tags(gprime.size());
    for (std::size_t i = 0; i < gprime.size(); ++i) {
        auto radix = static_cast<std::uint64_t>(gprime[i]) + 2;
        auto digit = static_cast<int>(index % radix);
        index /= radix;
        if (digit == 0)
            tags[i] = {CoordClass::kPos, 0};
        else if (digit <= gprime[i])
            tags[i] = {CoordClass::kFin, digit - 1};
        else
            tags[i] = {CoordClass::kNegCap, 0};
    }
    return DegreeClassPattern(std::move(tags));
}

std::vector<DegreeClassPattern> enumerate_degree_classes(const MonomialIdeal& I) {
    if (!I.is_proper()) throw input_error("degree classes require a proper ideal");
    Exponent gprime = capped_degrees(I);
    std::uint64_t count = degree_class_count(I);
    if (count > 100'000'000ULL)
        throw input_error("refusing to materialize " + std::to_string(count) +
                          " degree classes; sweep them by index instead");
    std::vector<DegreeClassPattern> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx)
        out.push_back(pattern_from_index(gprime, idx));
    return out;
}

DegreeClassPattern degree_class_of(const MonomialIdeal& I, const Exponent& a) {
    if (static_cast<int>(a.size()) != I.var_count())
        throw input_error("degree vector length does not match the variable count");
    Exponent gprime = capped_degrees(I);
    std::vector<CoordTag> tags(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= 1)
            tags[i] = {CoordClass::kPos, 0};
        else if (-a[i] <= gprime[i] - 1)
            tags[i] = {CoordClass::kFin, -a[i]};
        else
            tags[i] = {CoordClass::kNegCap, 0};
    }
    return DegreeClassPattern(std::move(tags));
}

} // namespace serredepth
