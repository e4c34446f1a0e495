#include <doctest.h>

#include <random>
#include <vector>

#include "serredepth/homology.hpp"
#include "support/oracles.hpp"

using namespace serredepth;
using namespace serredepth::testing;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Subset mask(std::initializer_list<int> verts) {
    Subset s = 0;
    for (int v : verts) s |= Subset{1} << (v - 1);
    return s;
}

// all k-element subsets of {0,...,m-1}
std::vector<Subset> k_subsets(int m, int k) {
    std::vector<Subset> out;
    for (Subset s = 0; s < (Subset{1} << m); ++s)
        if (popcount(s) == k) out.push_back(s);
    return out;
}

} // namespace

TEST_CASE("reduced homology of the standard small complexes") {
    SUBCASE("hollow triangle: one 1-cycle, connected") {
        SimplicialComplex c =
            SimplicialComplex::from_facets(3, {mask({1, 2}), mask({1, 3}), mask({2, 3})});
        HomologyDims h = reduced_homology_dims(c, kQ);
        CHECK(h.dim(-1) == 0);
        CHECK(h.dim(0) == 0);
        CHECK(h.dim(1) == 1);
    }
    SUBCASE("irrelevant complex: only degree -1") {
        HomologyDims h = reduced_homology_dims(SimplicialComplex::from_facets(2, {0}), kQ);
        CHECK(h.dim(-1) == 1);
        CHECK(h.dim(0) == 0);
    }
    SUBCASE("three isolated vertices: components minus one") {
        SimplicialComplex c =
            SimplicialComplex::from_facets(3, {mask({1}), mask({2}), mask({3})});
        HomologyDims h = reduced_homology_dims(c, kQ);
        CHECK(h.dim(0) == 2);
        CHECK(h.dim(1) == 0);
    }
    SUBCASE("void complex: everything vanishes") {
        HomologyDims h = reduced_homology_dims(SimplicialComplex::void_complex(3), kQ);
        CHECK(h.all_zero());
    }
    SUBCASE("full simplex is acyclic") {
        for (int m = 1; m <= 6; ++m) {
            HomologyDims h = reduced_homology_dims(
                SimplicialComplex::from_facets(m, {full_subset(m)}), kQ);
            CHECK(h.all_zero());
        }
    }
}

TEST_CASE("boundary of the k-simplex is a (k-1)-sphere") {
    for (int k = 1; k <= 5; ++k) {
        int m = k + 1;
        SimplicialComplex c = SimplicialComplex::from_facets(m, k_subsets(m, k));
        HomologyDims h = reduced_homology_dims(c, kQ);
        for (int j = -1; j < m; ++j) CHECK(h.dim(j) == (j == k - 1 ? 1 : 0));
    }
}

TEST_CASE("characteristic independence on at most 4 vertices, exhaustively") {
    // every complex on [4]: all antichains of subsets as facet lists
    const FieldSpec f2 = FieldSpec::prime_field(2);
    int checked = 0;
    for (std::uint32_t family = 0; family < (1u << 16); ++family) {
        std::vector<Subset> facets;
        for (int s = 0; s < 16; ++s)
            if ((family >> s) & 1u) facets.push_back(static_cast<Subset>(s));
        bool antichain = true;
        for (Subset a : facets)
            for (Subset b : facets)
                if (a != b && (a & b) == a) antichain = false;
        if (!antichain) continue;
        SimplicialComplex c = SimplicialComplex::from_facets(4, facets);
        HomologyDims h0 = reduced_homology_dims(c, kQ);
        HomologyDims h2 = reduced_homology_dims(c, f2);
        for (int j = -1; j < 4; ++j) CHECK(h0.dim(j) == h2.dim(j));
        ++checked;
    }
    CHECK(checked > 100); // all antichains on the 4-vertex subset lattice
}

TEST_CASE("projective plane shows torsion at characteristic 2") {
    std::vector<Subset> facets = {mask({1, 2, 3}), mask({1, 2, 4}), mask({1, 3, 5}),
                                  mask({1, 4, 6}), mask({1, 5, 6}), mask({2, 3, 6}),
                                  mask({2, 4, 5}), mask({2, 5, 6}), mask({3, 4, 5}),
                                  mask({3, 4, 6})};
    SimplicialComplex rp2 = SimplicialComplex::from_facets(6, facets);
    REQUIRE(rp2.all_faces().size() == std::size_t{1} + 6 + 15 + 10);

    HomologyDims h0 = reduced_homology_dims(rp2, kQ);
    CHECK(h0.dim(0) == 0);
    CHECK(h0.dim(1) == 0);
    CHECK(h0.dim(2) == 0);

    HomologyDims h2 = reduced_homology_dims(rp2, FieldSpec::prime_field(2));
    CHECK(h2.dim(0) == 0);
    CHECK(h2.dim(1) == 1);
    CHECK(h2.dim(2) == 1);

    HomologyDims h3 = reduced_homology_dims(rp2, FieldSpec::prime_field(3));
    CHECK(h3.dim(1) == 0);
    CHECK(h3.dim(2) == 0);
}

TEST_CASE("euler characteristic matches the face count on random complexes") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex c = random_complex(rng, 5, /*avoid_full_simplex=*/false);
        HomologyDims h = reduced_homology_dims(c, kQ);
        // both sides compute sum_j (-1)^j dim H~_j, the faces side via
        // sum_F (-1)^{|F|-1} over all faces including the empty one
        long long from_hom = 0;
        for (int j = -1; j < 5; ++j) from_hom += (j % 2 == 0 ? 1 : -1) * h.dim(j);
        CHECK(from_hom == reduced_euler_from_faces(c));
    }
}

TEST_CASE("matrix_rank: exact ranks with and without the bignum fallback") {
    std::vector<std::vector<long long>> m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(matrix_rank(m, kQ) == 2);
    CHECK(matrix_rank(m, FieldSpec::prime_field(5)) == 2);

    // rank drops mod 2 but not over Q
    std::vector<std::vector<long long>> parity = {{1, 1}, {1, -1}};
    CHECK(matrix_rank(parity, kQ) == 2);
    CHECK(matrix_rank(parity, FieldSpec::prime_field(2)) == 1);

    // entries near 2^40 overflow the int64 path on the first elimination
    // step and land in the bignum fallback; the rank is 2 by construction
    std::vector<std::vector<long long>> huge(4, std::vector<long long>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) huge[i][j] = (1LL << 40) + static_cast<long long>(i) * j;
    CHECK(matrix_rank(huge, kQ) == 2);

    CHECK(matrix_rank({}, kQ) == 0);
}
