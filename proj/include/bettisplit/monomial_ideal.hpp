#pragma once

#include <string>
#include <vector>

#include "bettisplit/vertex_set.hpp"

namespace bettisplit {

class Graph;
class SimplicialComplex;

// A squarefree monomial ideal given by its minimal generating set.
// Generators are supports over an ambient variable list; construction
// minimalizes and sorts them (degree, then lex), so equal ideals compare
// equal.  The zero ideal has no generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<std::string> ambient)
        : names_(std::move(ambient)) {}
    MonomialIdeal(std::vector<std::string> ambient, std::vector<VertexSet> generators);

    static MonomialIdeal principal(std::vector<std::string> ambient, const VertexSet& support);

    bool is_zero() const { return gens_.empty(); }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<VertexSet>& generators() const { return gens_; }
    const std::vector<std::string>& names() const { return names_; }
    int ambient_size() const { return static_cast<int>(names_.size()); }

    // Membership of a squarefree monomial: some generator divides it.
    bool contains(const VertexSet& monomial) const;

    // lcm-pairwise intersection; both ideals must share the ambient list.
    MonomialIdeal intersect(const MonomialIdeal& other) const;
    MonomialIdeal add(const MonomialIdeal& other) const;
    // Multiply every generator by the (squarefree) monomial m.
    MonomialIdeal scale(const VertexSet& m) const;

    bool operator==(const MonomialIdeal& o) const {
        return names_ == o.names_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string render_monomial(const VertexSet& m) const; // names joined by '*'
    std::string render() const;                            // one generator per line

private:
    void require_same_ambient(const MonomialIdeal& o) const;

    std::vector<std::string> names_;
    std::vector<VertexSet> gens_;
};

// Drops every support divisible by another; result is order-independent.
std::vector<VertexSet> minimalize(std::vector<VertexSet> gens);

MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal facet_ideal(const SimplicialComplex& delta);

} // namespace bettisplit
