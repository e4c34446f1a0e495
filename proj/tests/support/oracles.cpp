#include "support/oracles.hpp"

#include <algorithm>

#include "serredepth/homology.hpp"

namespace serredepth::testing {

bool ideals_equal_on_box(const MonomialIdeal& a, const MonomialIdeal& b, const Exponent& bound) {
    bool equal = true;
    for_each_point(Exponent(bound.size(), 0), bound, [&](const Exponent& p) {
        if (contains(a, p) != contains(b, p)) equal = false;
    });
    return equal;
}

bool equals_intersection_on_box(const MonomialIdeal& I,
                                const std::vector<MonomialIdeal>& components,
                                const Exponent& bound) {
    bool equal = true;
    for_each_point(Exponent(bound.size(), 0), bound, [&](const Exponent& p) {
        bool in_all = true;
        for (const MonomialIdeal& c : components)
            if (!contains(c, p)) { in_all = false; break; }
        if (in_all != contains(I, p)) equal = false;
    });
    return equal;
}

bool contains_power_multiset(const MonomialIdeal& I, int k, const Exponent& m) {
    const auto& gens = I.generators();
    auto rec = [&](auto&& self, std::size_t from, int left, const Exponent& remaining) -> bool {
        if (left == 0) return true;
        for (std::size_t g = from; g < gens.size(); ++g) {
            if (!divides(gens[g], remaining)) continue;
            Exponent next = remaining;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] -= gens[g][i];
            if (self(self, g, left - 1, next)) return true;
        }
        return false;
    };
    return rec(rec, 0, k, m);
}

bool in_rho_ideal(const Exponent& g, int i, const Exponent& point) {
    // x^point is divisible by some x^a with rho_g(a) > i iff point itself
    // can be shrunk onto such an a; equivalently point dominates a vector
    // agreeing with g on more than i coordinates
    int matchable = 0;
    for (std::size_t s = 0; s < g.size(); ++s)
        if (point[s] >= g[s]) ++matchable;
    return matchable > i;
}

SimplicialComplex link_complex(const SimplicialComplex& complex, Subset face) {
    std::vector<Subset> facets;
    for (Subset f : complex.facets())
        if ((f & face) == face) facets.push_back(f & ~face);
    return SimplicialComplex::from_facets(complex.vertex_count(), std::move(facets));
}

int link_depth_oracle(const SimplicialComplex& complex, const FieldSpec& field) {
    int best = complex.vertex_count() + 1;
    for (Subset face : complex.all_faces()) {
        HomologyDims dims = reduced_homology_dims(link_complex(complex, face), field);
        for (int t = -1; t < complex.vertex_count(); ++t)
            if (dims.dim(t) != 0) best = std::min(best, popcount(face) + 1 + t);
    }
    return best;
}

long long reduced_euler_from_faces(const SimplicialComplex& complex) {
    long long chi = 0;
    for (Subset f : complex.all_faces()) chi += (popcount(f) % 2 == 0) ? -1 : 1;
    return chi;
}

MonomialIdeal random_ideal(std::mt19937& rng, int n, int max_exp, int max_gens) {
    std::uniform_int_distribution<int> gen_count(1, max_gens);
    std::uniform_int_distribution<int> entry(0, max_exp);
    while (true) {
        std::vector<Exponent> gens;
        int count = gen_count(rng);
        for (int g = 0; g < count; ++g) {
            Exponent e(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = entry(rng);
            gens.push_back(std::move(e));
        }
        MonomialIdeal I = MonomialIdeal::from_generators(n, std::move(gens));
        if (!I.is_zero() && I.is_proper()) return I;
    }
}

SimplicialComplex random_complex(std::mt19937& rng, int n, bool avoid_full_simplex) {
    std::uniform_int_distribution<int> facet_count(1, std::max(2, n));
    std::uniform_int_distribution<Subset> subset(0, full_subset(n));
    while (true) {
        std::vector<Subset> facets;
        int count = facet_count(rng);
        for (int f = 0; f < count; ++f) facets.push_back(subset(rng));
        SimplicialComplex complex = SimplicialComplex::from_facets(n, std::move(facets));
        if (avoid_full_simplex && complex.has_face(full_subset(n))) continue;
        return complex;
    }
}

} // namespace serredepth::testing
