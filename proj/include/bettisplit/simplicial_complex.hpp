#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bettisplit/vertex_set.hpp"

namespace bettisplit {

struct ComplexBuildReport {
    int dropped_nonmaximal = 0;
    int merged_duplicates = 0;
};

// A simplicial complex presented by its facet list.  Facets are pairwise
// incomparable; construction discards dominated sets and merges duplicates,
// reporting how many were dropped.  Facet order is first appearance, which
// fixes the scan order of find_leaf.  Immutable.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::string> names, std::vector<VertexSet> facets,
                      ComplexBuildReport* report = nullptr);

    // Names by first appearance across the facet lists.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets,
                                         ComplexBuildReport* report = nullptr);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    bool empty() const { return facets_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    int index_of(std::string_view name) const;
    // Index of an exact facet; throws precondition_error if not a facet.
    int facet_index(const VertexSet& f) const;

    std::string render_face(const VertexSet& f) const; // {a, b, c}

    SimplicialComplex remove_facet(const VertexSet& f) const;

    // Facets reachable from f by chains of pairwise-intersecting facets.
    SimplicialComplex conn_component_of_facet(const VertexSet& f) const;

    // Inclusion-minimal nonempty differences G \ f over the facets G != f of
    // f's connected component; the result's vertex list is exactly what its
    // facets cover (singletons included).
    SimplicialComplex reduced_conn(const VertexSet& f) const;

    // Facets outside f's connected component; may be empty.
    SimplicialComplex omega(const VertexSet& f) const;

    bool is_leaf(const VertexSet& f) const;
    std::optional<VertexSet> find_leaf() const; // scans facets in input order

    // Definitional check: every nonempty connected subcomplex has a leaf.
    bool is_simplicial_forest(int facet_cap = 18) const;
    // Witness for the failure case: facet indices of a leafless connected
    // subcomplex, if any.
    std::optional<std::vector<int>> find_leafless_subcomplex(int facet_cap = 18) const;

    // Common facet cardinality d when pure ((d-1)-dimensional), else nullopt.
    std::optional<int> pure_dimension() const;
    // All (d-1)-subsets of facets of a pure complex, sorted canonically.
    std::vector<VertexSet> codim1_faces() const;
    // Number of facets containing the (d-2)-dimensional face g.
    int face_degree(const VertexSet& g) const;

    bool operator==(const SimplicialComplex& o) const {
        return names_ == o.names_ && facets_ == o.facets_;
    }

    std::string canonical_key() const;

private:
    SimplicialComplex with_facet_subset(const std::vector<int>& keep) const;

    std::vector<std::string> names_;
    std::vector<VertexSet> facets_;
};

} // namespace bettisplit
