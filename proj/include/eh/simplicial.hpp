#ifndef EH_SIMPLICIAL_HPP
#define EH_SIMPLICIAL_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eh/complex.hpp"
#include "eh/reduction.hpp"

namespace eh {

/// A possibly degenerate simplex in Eilenberg–Zilber canonical form:
/// η_{i_k} … η_{i_1} (base) with i_k > … > i_1 and a nondegenerate base.
struct SimplexWord {
    std::vector<int> etas;  // strictly decreasing, outermost first
    std::string base;
    int base_dim = 0;

    int dim() const { return base_dim + static_cast<int>(etas.size()); }
    bool degenerate() const { return !etas.empty(); }
    bool operator==(const SimplexWord&) const = default;
    bool operator<(const SimplexWord& o) const;
    std::string str() const;
};

SimplexWord plain_word(int dim, const std::string& id);

/// η_j ∘ w, renormalized (η_i η_j = η_{j+1} η_i for i ≤ j).
SimplexWord apply_eta(int j, SimplexWord w);

/// Word as a vertex-multiplicity sequence: position p of the result is
/// the base position the p-th vertex collapses to.  Length dim()+1.
std::vector<int> word_to_seq(const SimplexWord& w);

class SimplicialSet;
using SpacePtr = std::shared_ptr<const SimplicialSet>;

/// A finite simplicial set: nondegenerate simplices per dimension with
/// face maps landing in possibly degenerate simplices.
class SimplicialSet {
public:
    const std::string& name() const { return name_; }
    int top_dim() const { return top_dim_; }
    const std::vector<std::string>& simplices(int dim) const;
    int count(int dim) const { return static_cast<int>(simplices(dim).size()); }
    bool has_simplex(int dim, const std::string& id) const;

    /// Face table entry ∂_i of a nondegenerate simplex.
    const SimplexWord& face(int dim, const std::string& id, int i) const;

    std::string describe() const;

private:
    friend class SpaceBuilder;
    std::string name_;
    int top_dim_ = -1;
    std::vector<std::vector<std::string>> simplices_;
    std::vector<std::map<std::string, int>> index_;
    std::vector<std::vector<std::vector<SimplexWord>>> faces_;  // [dim][idx][i], dim >= 1
};

class SpaceBuilder {
public:
    explicit SpaceBuilder(std::string name) : name_(std::move(name)) {}
    SpaceBuilder& add_simplex(int dim, const std::string& id);
    SpaceBuilder& set_face(int dim, const std::string& id, int i, SimplexWord w);
    /// Validates presence and dimensions of all faces; simplicial
    /// identities are checked separately by verify_simplicial.
    SpacePtr build();

private:
    std::string name_;
    std::map<int, std::vector<std::string>> simplices_;
    std::map<std::tuple<int, std::string, int>, SimplexWord> faces_;
};

/// ∂_i applied to a possibly degenerate simplex, in canonical form,
/// using ∂_iη_j = η_{j−1}∂_i (i<j), ∂_iη_j = id (i ∈ {j, j+1}),
/// ∂_iη_j = η_j∂_{i−1} (i>j+1).
SimplexWord canonical_face(const SimplicialSet& X, int i, const SimplexWord& w);

/// Enumerates every canonical simplex word of the given dimension over
/// a space, nondegenerate bases in order, degeneracy lists in a fixed
/// order.
void for_each_word(const SimplicialSet& X, int dim, const std::function<void(const SimplexWord&)>& emit);

/// All simplicial identities ∂_i∂_j = ∂_{j−1}∂_i (i<j) on every
/// nondegenerate simplex.
VerifyReport verify_simplicial(const SimplicialSet& X);

/// Normalized chains: basis the nondegenerate simplices, differential
/// the alternating face sum with degenerate faces dropped.
ComplexPtr normalized_chain_complex(const SimplicialSet& X);

/// A dimension-preserving simplicial map, stored on nondegenerate
/// simplices; face commutation is verified at construction.
class SimplicialMorphism {
public:
    static SimplicialMorphism make(SpacePtr source, SpacePtr target,
                                   const std::function<SimplexWord(int, const std::string&)>& rule,
                                   const std::string& name = "");
    static SimplicialMorphism identity(SpacePtr x);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    const std::string& name() const { return name_; }

    const SimplexWord& map(int dim, const std::string& id) const;
    /// Extension to degenerate simplices: map the base, reapply the etas.
    SimplexWord apply(const SimplexWord& w) const;

    /// Induced chain map on normalized complexes (degenerate images die).
    GradedMorphism induced_chain_map(const ComplexPtr& src_complex, const ComplexPtr& dst_complex) const;

private:
    SimplicialMorphism() = default;
    SpacePtr source_;
    SpacePtr target_;
    std::string name_;
    std::vector<std::map<std::string, SimplexWord>> map_;
};

/* ---- standard spaces ---- */

SpacePtr space_point();
SpacePtr space_empty();
/// Minimal model: one vertex, one nondegenerate n-simplex whose faces
/// all collapse to the basepoint (two vertices when n = 0).
SpacePtr space_sphere(int n);
/// k-gon: k vertices, k edges in a cycle (k >= 1).
SpacePtr space_circle(int k);
/// Standard n-simplex; ids are vertex strings like "02".
SpacePtr space_delta(int n);
/// circle(k) -> circle(1), every edge onto the unique edge.
SimplicialMorphism degree_map(int k);
/// Collapse of X onto a chosen vertex of Z.
SimplicialMorphism constant_morphism(SpacePtr X, SpacePtr Z, const std::string& vertex);

}  // namespace eh

#endif
