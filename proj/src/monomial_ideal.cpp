#include "bettisplit/monomial_ideal.hpp"

#include <algorithm>

#include "bettisplit/errors.hpp"
#include "bettisplit/graph.hpp"
#include "bettisplit/simplicial_complex.hpp"

namespace bettisplit {

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
    std::sort(gens.begin(), gens.end(), degree_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<VertexSet> out;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& kept : out) {
            if (g.contains(kept)) { // kept divides g
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(g);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> ambient, std::vector<VertexSet> generators)
    : names_(std::move(ambient)) {
    VertexSet universe = VertexSet::first_n(static_cast<int>(names_.size()));
    for (const auto& g : generators) {
        if (!universe.contains(g))
            throw precondition_error("generator support exceeds the ambient variable set");
        if (g.empty())
            throw precondition_error("the unit monomial cannot be a generator");
    }
    gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::principal(std::vector<std::string> ambient, const VertexSet& support) {
    return MonomialIdeal(std::move(ambient), {support});
}

bool MonomialIdeal::contains(const VertexSet& monomial) const {
    for (const auto& g : gens_)
        if (monomial.contains(g)) return true;
    return false;
}

void MonomialIdeal::require_same_ambient(const MonomialIdeal& o) const {
    if (names_ != o.names_)
        throw precondition_error("ideal operation requires a common ambient variable list");
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    require_same_ambient(other);
    std::vector<VertexSet> lcms;
    lcms.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) lcms.push_back(a | b);
    return MonomialIdeal(names_, std::move(lcms));
}

MonomialIdeal MonomialIdeal::add(const MonomialIdeal& other) const {
    require_same_ambient(other);
    std::vector<VertexSet> all = gens_;
    all.insert(all.end(), other.gens_.begin(), other.gens_.end());
    return MonomialIdeal(names_, std::move(all));
}

MonomialIdeal MonomialIdeal::scale(const VertexSet& m) const {
    std::vector<VertexSet> scaled;
    scaled.reserve(gens_.size());
    for (const auto& g : gens_) scaled.push_back(g | m);
    return MonomialIdeal(names_, std::move(scaled));
}

std::string MonomialIdeal::render_monomial(const VertexSet& m) const {
    std::string out;
    m.for_each([&](int v) {
        if (!out.empty()) out += '*';
        out += names_[v];
    });
    return out.empty() ? "1" : out;
}

std::string MonomialIdeal::render() const {
    if (is_zero()) return "0\n";
    std::string out;
    for (const auto& g : gens_) {
        out += render_monomial(g);
        out += '\n';
    }
    return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<VertexSet> gens;
    for (const auto& [u, v] : g.edges()) {
        VertexSet s;
        s.set(u);
        s.set(v);
        gens.push_back(s);
    }
    return MonomialIdeal(g.names(), std::move(gens));
}

MonomialIdeal facet_ideal(const SimplicialComplex& delta) {
    return MonomialIdeal(delta.names(), delta.facets());
}

} // namespace bettisplit
