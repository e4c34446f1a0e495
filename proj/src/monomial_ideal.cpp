#include "serredepth/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "serredepth/errors.hpp"

namespace serredepth {

namespace {

void check_var_count(int n) {
    if (n < 1 || n > kMaxVars)
        throw input_error("variable count must be between 1 and " + std::to_string(kMaxVars) +
                          ", got " + std::to_string(n));
}

// Reduce to the divisibility antichain, lexicographically sorted.
std::vector<Exponent> minimize(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Smallest number of indices meeting every support; kMinusInfinity when a
// support is empty (the unit ideal), so that dim_quotient = n - cover.
int min_support_cover(std::vector<Subset> supports) {
    supports.erase(std::remove(supports.begin(), supports.end(), Subset{0}), supports.end());
    std::sort(supports.begin(), supports.end(),
              [](Subset a, Subset b) { return popcount(a) < popcount(b); });
    // drop supersets: covering a subset covers the superset too
    std::vector<Subset> mins;
    for (Subset s : supports) {
        bool covered = false;
        for (Subset t : mins)
            if ((t & s) == t) { covered = true; break; }
        if (!covered) mins.push_back(s);
    }
    int best = static_cast<int>(mins.size());
    auto rec = [&](auto&& self, std::size_t idx, Subset chosen, int used) -> void {
        if (used >= best) return;
        while (idx < mins.size() && (mins[idx] & chosen) != 0) ++idx;
        if (idx == mins.size()) { best = used; return; }
        for (int v : subset_members(mins[idx]))
            self(self, idx + 1, chosen | (Subset{1} << v), used + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

} // namespace

MonomialIdeal MonomialIdeal::zero(int n) {
    check_var_count(n);
    return MonomialIdeal(n, {});
}

MonomialIdeal MonomialIdeal::unit(int n) {
    check_var_count(n);
    return MonomialIdeal(n, {Exponent(n, 0)});
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Exponent> raw) {
    check_var_count(n);
    for (const Exponent& g : raw) {
        if (static_cast<int>(g.size()) != n)
            throw input_error("generator length " + std::to_string(g.size()) +
                              " does not match variable count " + std::to_string(n));
        for (int e : g)
            if (e < 0) throw input_error("monomial generators must have nonnegative exponents");
    }
    return MonomialIdeal(n, minimize(std::move(raw)));
}

std::string monomial_to_string(const Exponent& e, const std::vector<std::string>& var_names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_names.empty() ? "x" + std::to_string(i + 1) : var_names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) out += ", ";
        out += monomial_to_string(gens_[i], var_names);
    }
    return out + ")";
}

bool contains(const MonomialIdeal& I, const Exponent& m) {
    for (const Exponent& g : I.generators())
        if (divides(g, m)) return true;
    return false;
}

Exponent bounding_multidegree(const MonomialIdeal& I) {
    Exponent g(I.var_count(), 0);
    for (const Exponent& u : I.generators())
        for (int i = 0; i < I.var_count(); ++i) g[i] = std::max(g[i], u[i]);
    return g;
}

MonomialIdeal localize(const MonomialIdeal& I, Subset H) {
    std::vector<Exponent> gens;
    gens.reserve(I.generators().size());
    for (Exponent u : I.generators()) {
        for (int i : subset_members(H)) u[i] = 0;
        gens.push_back(std::move(u));
    }
    return MonomialIdeal::from_generators(I.var_count(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.var_count() != J.var_count())
        throw input_error("cannot multiply ideals with different variable counts");
    std::vector<Exponent> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const Exponent& u : I.generators())
        for (const Exponent& v : J.generators()) gens.push_back(exponent_sum(u, v));
    return MonomialIdeal::from_generators(I.var_count(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
    if (k <= 0) throw input_error("power exponent must be positive, got " + std::to_string(k));
    MonomialIdeal result = I;
    for (int i = 1; i < k; ++i) result = multiply(result, I);
    return result;
}

int dim_quotient(const MonomialIdeal& I) {
    if (I.is_zero()) return I.var_count();
    std::vector<Subset> supports;
    supports.reserve(I.generators().size());
    for (const Exponent& u : I.generators()) {
        Subset s = exponent_support(u);
        if (s == 0) return kMinusInfinity; // unit ideal
        supports.push_back(s);
    }
    return I.var_count() - min_support_cover(std::move(supports));
}

MonomialIdeal drop_variables(const MonomialIdeal& I, Subset dropped) {
    int n = I.var_count();
    int kept = n - popcount(dropped);
    if (kept < 1) throw input_error("cannot drop all variables");
    std::vector<Exponent> gens;
    for (const Exponent& u : I.generators()) {
        Exponent v;
        v.reserve(kept);
        for (int i = 0; i < n; ++i) {
            if (subset_contains(dropped, i)) {
                if (u[i] != 0)
                    throw input_error("drop_variables: generator has a nonzero dropped exponent");
            } else {
                v.push_back(u[i]);
            }
        }
        gens.push_back(std::move(v));
    }
    return MonomialIdeal::from_generators(kept, std::move(gens));
}

namespace {

void split_recursive(const MonomialIdeal& I, std::set<std::vector<Exponent>>& out, int n,
                     std::set<std::vector<Exponent>>& seen) {
    if (!seen.insert(I.generators()).second) return; // already expanded
    const auto& gens = I.generators();
    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
        Subset supp = exponent_support(gens[idx]);
        if (popcount(supp) <= 1) continue;
        // split off one pure power: (J, ab) = (J, a) cap (J, b) for coprime a, b
        int i = subset_members(supp)[0];
        Exponent pure(n, 0);
        pure[i] = gens[idx][i];
        Exponent rest = gens[idx];
        rest[i] = 0;
        for (const Exponent& piece : {pure, rest}) {
            std::vector<Exponent> next = gens;
            next[idx] = piece;
            split_recursive(MonomialIdeal::from_generators(n, std::move(next)), out, n, seen);
        }
        return;
    }
    out.insert(I.generators());
}

// Membership agreement on the box [0, bound]^n decides containment between
// monomial ideals whose generators all fit below `bound`.
bool contained_on_box(const std::vector<const MonomialIdeal*>& outer, const MonomialIdeal& inner,
                      const Exponent& bound) {
    int n = static_cast<int>(bound.size());
    Exponent point(n, 0);
    while (true) {
        bool in_all = true;
        for (const MonomialIdeal* J : outer)
            if (!contains(*J, point)) { in_all = false; break; }
        if (in_all && !contains(inner, point)) return false;
        int i = 0;
        while (i < n && point[i] == bound[i]) point[i++] = 0;
        if (i == n) return true;
        ++point[i];
    }
}

} // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw input_error("irreducible decomposition requires a proper nonzero ideal");
    int n = I.var_count();

    std::set<std::vector<Exponent>> raw;
    std::set<std::vector<Exponent>> seen;
    split_recursive(I, raw, n, seen);

    std::vector<MonomialIdeal> comps;
    for (const auto& gens : raw) comps.push_back(MonomialIdeal::from_generators(n, gens));

    // containment tests run on the box bounded by the componentwise max of
    // all component exponents, plus one
    Exponent bound(n, 0);
    for (const MonomialIdeal& c : comps)
        for (const Exponent& u : c.generators())
            for (int i = 0; i < n; ++i) bound[i] = std::max(bound[i], u[i]);
    for (int i = 0; i < n; ++i) ++bound[i];

    // drop components containing the intersection of the others, one at a time
    bool changed = true;
    while (changed && comps.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::vector<const MonomialIdeal*> others;
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (j != i) others.push_back(&comps[j]);
            if (contained_on_box(others, comps[i], bound)) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    std::sort(comps.begin(), comps.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
        Subset sa = 0, sb = 0;
        for (const Exponent& u : a.generators()) sa |= exponent_support(u);
        for (const Exponent& u : b.generators()) sb |= exponent_support(u);
        if (popcount(sa) != popcount(sb)) return popcount(sa) < popcount(sb);
        if (sa != sb) return sa < sb;
        return a.generators() < b.generators();
    });
    return comps;
}

std::vector<PrimeFace> assoc_primes(const MonomialIdeal& I) {
    std::set<Subset> faces;
    Subset full = full_subset(I.var_count());
    for (const MonomialIdeal& c : irreducible_decomposition(I)) {
        Subset vars = 0;
        for (const Exponent& u : c.generators()) vars |= exponent_support(u);
        faces.insert(full & ~vars);
    }
    std::vector<PrimeFace> out;
    for (Subset f : faces) out.push_back(PrimeFace{f});
    std::sort(out.begin(), out.end());
    return out;
}

ComponentClassification classify_components(const MonomialIdeal& I) {
    ComponentClassification result;
    std::vector<PrimeFace> ass = assoc_primes(I);

    // P_F is inclusion-minimal among the associated primes iff F is maximal
    for (const PrimeFace& p : ass) {
        bool maximal = true;
        for (const PrimeFace& q : ass)
            if (q.face != p.face && (q.face & p.face) == p.face) { maximal = false; break; }
        if (maximal) result.min_primes.push_back(p);
    }

    int d = dim_quotient(I);
    result.equidimensional = true;
    for (const PrimeFace& p : result.min_primes)
        if (popcount(p.face) != popcount(result.min_primes.front().face))
            result.equidimensional = false;
    result.unmixed = true;
    for (const PrimeFace& p : ass)
        if (popcount(p.face) != d) result.unmixed = false;
    result.has_embedded = ass.size() != result.min_primes.size();
    return result;
}

} // namespace serredepth
