#ifndef EH_MORPHISM_HPP
#define EH_MORPHISM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eh/complex.hpp"

namespace eh {

/// A degree-k graded linear map between chain complexes, stored as a
/// materialized table over the source basis.  `is_chain_map` records the
/// commutation d ∘ φ = (−1)^k φ ∘ d; constructors verify it whenever the
/// flag is asserted.
class GradedMorphism {
public:
    /// Materializes `rule` over every source generator.  The rule must
    /// return a chain of degree n + k over the target (zero is fine).
    static GradedMorphism make(ComplexPtr source, ComplexPtr target, int degree,
                               const std::function<Chain(const Generator&)>& rule,
                               bool is_chain_map, const std::string& name = "");

    static GradedMorphism identity(ComplexPtr c);
    static GradedMorphism zero(ComplexPtr source, ComplexPtr target, int degree);

    const ComplexPtr& source() const { return source_; }
    const ComplexPtr& target() const { return target_; }
    int degree() const { return degree_; }
    bool is_chain_map() const { return chain_map_; }
    const std::string& name() const { return name_; }

    const Chain& operator()(int degree, const std::string& id) const;
    Chain operator()(const Generator& g) const { return (*this)(g.degree, g.id); }

    /// Linear extension to chains over the source.
    Chain apply(const Chain& c) const;

    GradedMorphism operator+(const GradedMorphism& other) const;
    GradedMorphism operator-() const;
    bool operator==(const GradedMorphism& other) const;

    /// First source generator where the chain-map relation fails, if any.
    std::optional<Generator> chain_map_witness() const;

    GradedMorphism renamed(const std::string& name) const;

private:
    GradedMorphism() = default;
    ComplexPtr source_;
    ComplexPtr target_;
    int degree_ = 0;
    bool chain_map_ = false;
    std::string name_;
    std::vector<std::vector<Chain>> table_;  // [n - source.lo()][basis index]
};

/// outer ∘ inner; degrees add, the chain-map flag survives only if both
/// factors carry it.
GradedMorphism compose_morphisms(const GradedMorphism& outer, const GradedMorphism& inner);

/// apply_morphism(m, c) — free-function spelling of m.apply(c) with the
/// complex-membership check.
Chain apply_morphism(const GradedMorphism& m, const Chain& c);

}  // namespace eh

#endif
