#include "serredepth/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include <gmpxx.h>

#include "serredepth/errors.hpp"

namespace serredepth {

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
        throw input_error("field characteristic must be 0 or a prime below 2^31");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw input_error(std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

namespace {

struct overflow_signal {};

// int64 arithmetic that bails out on overflow so the caller can retry
// with arbitrary precision.
struct CheckedInt {
    long long v = 0;

    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return {r};
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return {r};
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return {a.v / b.v}; }
    bool is_zero() const { return v == 0; }
};

struct BigInt {
    mpz_class v;

    friend BigInt operator*(const BigInt& a, const BigInt& b) { return {a.v * b.v}; }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return {a.v - b.v}; }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q;
        mpz_divexact(q.v.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
        return q;
    }
    bool is_zero() const { return v == 0; }
};

// Bareiss fraction-free elimination; every intermediate entry is a minor of
// the input, and the divisions are exact.
template <typename T>
int bareiss_rank(std::vector<std::vector<T>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    T prev{};
    bool have_prev = false;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                T num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                m[i][j] = have_prev ? num / prev : num;
            }
            m[i][col] = T{};
        }
        prev = m[rank][col];
        have_prev = true;
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_mod_p(const std::vector<std::vector<long long>>& input, std::int64_t p) {
    if (input.empty() || input[0].empty()) return 0;
    std::size_t rows = input.size(), cols = input[0].size();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    auto up = static_cast<std::uint64_t>(p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long long x = input[i][j] % p;
            if (x < 0) x += p;
            m[i][j] = static_cast<std::uint64_t>(x);
        }
    auto powmod = [up](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t acc = 1;
        while (exp) {
            if (exp & 1) acc = acc * base % up;
            base = base * base % up;
            exp >>= 1;
        }
        return acc;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        std::uint64_t inv = powmod(m[rank][col], up - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            std::uint64_t factor = m[i][col] * inv % up;
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = factor * m[rank][j] % up;
                m[i][j] = (m[i][j] + up - sub) % up;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace

int matrix_rank(const std::vector<std::vector<long long>>& m, const FieldSpec& field) {
    if (field.characteristic != 0) return rank_mod_p(m, field.characteristic);
    try {
        std::vector<std::vector<CheckedInt>> c(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            c[i].resize(m[i].size());
            for (std::size_t j = 0; j < m[i].size(); ++j) c[i][j] = CheckedInt{m[i][j]};
        }
        return bareiss_rank(std::move(c));
    } catch (const overflow_signal&) {
        std::vector<std::vector<BigInt>> b(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            b[i].resize(m[i].size());
            for (std::size_t j = 0; j < m[i].size(); ++j)
                b[i][j] = BigInt{mpz_class(std::to_string(m[i][j]))};
        }
        return bareiss_rank(std::move(b));
    }
}

namespace {

// Remap the used vertices to a dense range so that isomorphic complexes on
// different vertex subsets share one cache entry.
std::vector<Subset> compressed_facets(const SimplicialComplex& complex) {
    Subset used = 0;
    for (Subset f : complex.facets()) used |= f;
    std::vector<int> verts = subset_members(used);
    std::vector<Subset> out;
    out.reserve(complex.facets().size());
    for (Subset f : complex.facets()) {
        Subset g = 0;
        for (std::size_t k = 0; k < verts.size(); ++k)
            if (subset_contains(f, verts[k])) g |= Subset{1} << k;
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

HomologyDims compute_dims(const SimplicialComplex& complex, const FieldSpec& field) {
    HomologyDims result;
    if (complex.is_void()) return result;
    if (complex.is_irrelevant()) {
        result.by_card = {1};
        return result;
    }

    std::vector<Subset> faces = complex.all_faces();
    int cmax = complex.max_face_card();

    // faces bucketed by cardinality, with positions for row lookups
    std::vector<std::vector<Subset>> by_card(static_cast<std::size_t>(cmax) + 1);
    std::map<Subset, int> position;
    for (Subset f : faces) by_card[static_cast<std::size_t>(popcount(f))].push_back(f);
    // all_faces is sorted by (card, mask), so each bucket is sorted

    std::vector<int> ranks(static_cast<std::size_t>(cmax) + 2, 0);
    for (int c = 1; c <= cmax; ++c) {
        const auto& domain = by_card[static_cast<std::size_t>(c)];
        const auto& codomain = by_card[static_cast<std::size_t>(c - 1)];
        position.clear();
        for (std::size_t i = 0; i < codomain.size(); ++i)
            position[codomain[i]] = static_cast<int>(i);
        std::vector<std::vector<long long>> boundary(
            codomain.size(), std::vector<long long>(domain.size(), 0));
        for (std::size_t j = 0; j < domain.size(); ++j) {
            std::vector<int> verts = subset_members(domain[j]);
            for (std::size_t t = 0; t < verts.size(); ++t) {
                Subset sub = domain[j] & ~(Subset{1} << verts[t]);
                boundary[static_cast<std::size_t>(position.at(sub))][j] = (t % 2 == 0) ? 1 : -1;
            }
        }
        ranks[static_cast<std::size_t>(c)] = matrix_rank(boundary, field);
    }

    result.by_card.assign(static_cast<std::size_t>(cmax) + 1, 0);
    for (int c = 0; c <= cmax; ++c) {
        int faces_c = static_cast<int>(by_card[static_cast<std::size_t>(c)].size());
        result.by_card[static_cast<std::size_t>(c)] =
            faces_c - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    }

    // Euler-Poincare consistency, checked on every computed complex
    long long euler_faces = 0, euler_hom = 0;
    for (int c = 0; c <= cmax; ++c) {
        int sign = (c % 2 == 0) ? -1 : 1; // (-1)^{c-1}
        euler_faces += sign * static_cast<long long>(by_card[static_cast<std::size_t>(c)].size());
        euler_hom += sign * result.by_card[static_cast<std::size_t>(c)];
    }
    if (euler_faces != euler_hom)
        throw internal_error("Euler characteristic mismatch: faces give " +
                             std::to_string(euler_faces) + ", homology gives " +
                             std::to_string(euler_hom));
    return result;
}

struct CacheKey {
    std::vector<Subset> facets;
    std::int64_t characteristic;

    bool operator<(const CacheKey& other) const {
        if (characteristic != other.characteristic) return characteristic < other.characteristic;
        return facets < other.facets;
    }
};

std::shared_mutex cache_mutex;
std::map<CacheKey, HomologyDims> cache; // NOLINT: process-lifetime cache

} // namespace

HomologyDims reduced_homology_dims_uncached(const SimplicialComplex& complex,
                                            const FieldSpec& field) {
    return compute_dims(complex, field);
}

void clear_homology_cache() {
    std::unique_lock lock(cache_mutex);
    cache.clear();
}

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
    CacheKey key{compressed_facets(complex), field.characteristic};
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Subset used = 0;
    for (Subset f : key.facets) used |= f;
    SimplicialComplex canonical =
        complex.is_void() ? SimplicialComplex::void_complex(1)
                          : SimplicialComplex::from_facets(std::max(1, popcount(used)), key.facets);
    HomologyDims dims = compute_dims(canonical, field);
    {
        std::unique_lock lock(cache_mutex);
        cache.emplace(key, dims); // concurrent duplicates carry equal values
    }
    return dims;
}

} // namespace serredepth
