#include "serredepth/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "serredepth/errors.hpp"

namespace serredepth {

namespace {

void sort_by_card(std::vector<Subset>& faces) {
    std::sort(faces.begin(), faces.end(), [](Subset a, Subset b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
}

// Keep the inclusion-maximal sets.
std::vector<Subset> maximal_sets(std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Subset> out;
    for (Subset f : sets) {
        bool dominated = false;
        for (Subset g : sets)
            if (g != f && (f & g) == f) { dominated = true; break; }
        if (!dominated) out.push_back(f);
    }
    sort_by_card(out);
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) {
    if (n < 1 || n > kMaxVars) throw input_error("vertex count out of range");
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Subset> facets) {
    if (n < 1 || n > kMaxVars) throw input_error("vertex count out of range");
    Subset full = full_subset(n);
    for (Subset f : facets)
        if ((f & ~full) != 0) throw input_error("facet has a vertex out of range");
    return SimplicialComplex(n, maximal_sets(std::move(facets)));
}

bool SimplicialComplex::has_face(Subset f) const {
    for (Subset g : facets_)
        if ((f & g) == f) return true;
    return false;
}

std::vector<Subset> SimplicialComplex::all_faces() const {
    std::set<Subset> seen;
    for (Subset f : facets_) {
        // enumerate subsets of the facet
        Subset sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<Subset> faces(seen.begin(), seen.end());
    sort_by_card(faces);
    return faces;
}

int SimplicialComplex::max_face_card() const {
    int m = -1;
    for (Subset f : facets_) m = std::max(m, popcount(f));
    return m;
}

SimplicialComplex skeleton_complex(const SimplicialComplex& complex, int i) {
    if (complex.is_void()) throw input_error("skeleton of the VOID complex is undefined");
    if (i < 0) throw input_error("skeleton index must be nonnegative");
    std::vector<Subset> candidates;
    for (Subset f : complex.facets()) {
        if (popcount(f) <= i) {
            candidates.push_back(f);
            continue;
        }
        // all i-subsets of the facet
        std::vector<int> verts = subset_members(f);
        std::vector<int> pick(static_cast<std::size_t>(i));
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == i) {
                Subset s = 0;
                for (int k = 0; k < i; ++k) s |= Subset{1} << pick[static_cast<std::size_t>(k)];
                candidates.push_back(s);
                return;
            }
            for (int t = start; t < static_cast<int>(verts.size()); ++t) {
                pick[static_cast<std::size_t>(depth)] = verts[static_cast<std::size_t>(t)];
                self(self, t + 1, depth + 1);
            }
        };
        if (i == 0)
            candidates.push_back(0);
        else
            rec(rec, 0, 0);
    }
    return SimplicialComplex::from_facets(complex.vertex_count(), std::move(candidates));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    std::vector<Exponent> gens;
    std::vector<Subset> masks;
    for (Subset s = 0; s <= full_subset(n); ++s) {
        if (complex.has_face(s)) continue;
        bool minimal = true;
        for (int v : subset_members(s))
            if (!complex.has_face(s & ~(Subset{1} << v))) { minimal = false; break; }
        if (!minimal) continue;
        Exponent e(n, 0);
        for (int v : subset_members(s)) e[v] = 1;
        gens.push_back(std::move(e));
        if (s == 0) break; // the empty set is a non-face: the whole ring
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& I) {
    if (!I.is_proper()) throw input_error("complex_of requires a proper ideal");
    for (const Exponent& u : I.generators())
        for (int e : u)
            if (e > 1) throw input_error("complex_of requires a squarefree ideal");
    int n = I.var_count();
    std::vector<Subset> faces;
    for (Subset s = 0; s <= full_subset(n); ++s) {
        Exponent e(n, 0);
        for (int v : subset_members(s)) e[v] = 1;
        if (!contains(I, e)) faces.push_back(s);
        if (s == full_subset(n)) break;
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

SimplicialComplex takayama_complex(const MonomialIdeal& I, const Exponent& a) {
    int n = I.var_count();
    if (static_cast<int>(a.size()) != n)
        throw input_error("degree vector length does not match the variable count");
    if (I.is_unit()) throw input_error("takayama_complex requires a proper ideal");

    Subset g_mask = 0;
    for (int i = 0; i < n; ++i)
        if (a[i] < 0) g_mask |= Subset{1} << i;
    Subset vertex_mask = full_subset(n) & ~g_mask;
    Exponent aplus = positive_part(a);

    // For a generator u, the blocker is the set of coordinates outside G
    // where u exceeds a^+. F is a face iff every blocker escapes F, i.e.
    // x^{a+} stays outside I_{F u G}. An empty blocker kills every F.
    std::vector<Subset> blockers;
    for (const Exponent& u : I.generators()) {
        Subset b = 0;
        for (int i = 0; i < n; ++i)
            if (!subset_contains(g_mask, i) && u[i] > aplus[i]) b |= Subset{1} << i;
        if (b == 0) return SimplicialComplex::void_complex(n);
        blockers.push_back(b);
    }
    if (blockers.empty()) // zero ideal: the full simplex on the vertex set
        return SimplicialComplex::from_facets(n, {vertex_mask});

    std::vector<Subset> faces;
    Subset sub = vertex_mask;
    while (true) {
        bool face = true;
        for (Subset b : blockers)
            if ((b & ~sub) == 0) { face = false; break; }
        if (face) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & vertex_mask;
    }
    // downward closure holds by construction: shrinking F only frees blockers
    return SimplicialComplex::from_facets(n, std::move(faces));
}

} // namespace serredepth
