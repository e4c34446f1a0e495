#ifndef SERREDEPTH_SIMPLICIAL_COMPLEX_HPP
#define SERREDEPTH_SIMPLICIAL_COMPLEX_HPP

#include <vector>

#include "serredepth/exponent.hpp"
#include "serredepth/monomial_ideal.hpp"

namespace serredepth {

/// A downward-closed family of subsets of {0,...,n-1}, stored by its
/// inclusion-maximal faces. Two degenerate regimes are distinguished
/// explicitly because they carry different homology:
///   VOID        no faces at all (facet list empty),
///   IRRELEVANT  exactly the empty face (facet list = {0}).
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int n);

    /// Downward closure of the given facets. An empty list gives the VOID
    /// complex; a list containing only the empty set gives IRRELEVANT.
    /// Throws input_error on a vertex outside {0,...,n-1}.
    static SimplicialComplex from_facets(int n, std::vector<Subset> facets);

    int vertex_count() const { return n_; }
    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    /// Maximal faces, sorted by (cardinality, mask). Empty iff VOID.
    const std::vector<Subset>& facets() const { return facets_; }

    bool has_face(Subset f) const;

    /// Every face including the empty one, sorted by (cardinality, mask).
    /// Empty iff VOID.
    std::vector<Subset> all_faces() const;

    /// Largest face cardinality; 0 for IRRELEVANT, -1 for VOID.
    int max_face_card() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex(int n, std::vector<Subset> facets)
        : n_(n), facets_(std::move(facets)) {}

    int n_ = 0;
    std::vector<Subset> facets_;
};

/// Faces of cardinality at most i. Requires a non-VOID input.
SimplicialComplex skeleton_complex(const SimplicialComplex& complex, int i);

/// The squarefree ideal generated by the minimal non-faces.
MonomialIdeal stanley_reisner(const SimplicialComplex& complex);

/// Inverse of stanley_reisner for a squarefree proper ideal.
SimplicialComplex complex_of(const MonomialIdeal& I);

/// The complex whose reduced homology gives the Z^n-graded pieces of the
/// local cohomology of S/I: vertex set {0,..,n-1} minus G_a = {i : a(i)<0},
/// with F a face iff x^{max(a,0)} lies outside the localization of I at
/// the variables F union G_a. Requires I proper; the zero ideal is allowed
/// and yields the full simplex on the complement of G_a.
SimplicialComplex takayama_complex(const MonomialIdeal& I, const Exponent& a);

} // namespace serredepth

#endif
