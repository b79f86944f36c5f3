#pragma once

// Presets, defining relations and relation checks for the spaces X_{G,I}.
//
// For a product of easy quantum groups with diagonal index set over J, X_{G,I}
// is cut out by
//
//   Σ_{i1..ik} δ_π(i1..ik) x_{i1}^{e1} ... x_{ik}^{ek} = |J|^{|π_1 v ... v π_s| - k/2}
//
// for every colored word and every tuple π ∈ D_1(k) x ... x D_s(k), where
// δ_π(i) = Π_r δ_{π_r}(i^r). The row relations P x^{⊗k} = P^I lie in the span
// of these, so they are not generated separately.

#include "easyspace/integrator.hpp"
#include "easyspace/space_spec.hpp"

#include <string>
#include <vector>

namespace easyspace {

SpaceSpec free_complex_sphere(unsigned N);
SpaceSpec free_real_sphere(unsigned N);
/// category must be O or U.
SpaceSpec classical_sphere(CategoryId category, unsigned N);
/// G x G with J = {1..N}: the quantum group itself as a homogeneous space.
SpaceSpec group_as_space(CategoryId category, unsigned N);
/// G_N x G_M with J = {1..M}: the first M columns of G_N. Requires M <= N.
SpaceSpec column_space(CategoryId category, unsigned N, unsigned M);

/// Dispatch by name: free-complex-sphere, free-real-sphere, classical-sphere,
/// group-as-space, column-space. Parameters are the ':'-separated fields
/// following the name, e.g. {"O+", "4", "2"} for column-space.
SpaceSpec preset(std::string_view name, const std::vector<std::string>& parameters);
bool is_preset_name(std::string_view name);

struct Relation {
    ColoredWord word;
    /// One partition per factor.
    std::vector<SetPartition> partitions;
    /// |π_1 v ... v π_s|. Unscaled right-hand side is M^{join_blocks - k/2};
    /// in rescaled coordinates it is M^{join_blocks}.
    std::size_t join_blocks = 0;

    Rational rescaled_rhs(unsigned M) const;
    /// e.g. "oo : 12 -> M^(1-2/2)"
    std::string to_string() const;
};

/// One relation per word of length 0..max_k and partition tuple in Π_r D_r(word).
/// Words follow the same color rule as test_monomials().
std::vector<Relation> relation_set(const SpaceSpec& space, std::size_t max_k);

/// A test monomial h_{j1}^{f1} ... h_{jd}^{fd}.
struct Monomial {
    ColoredWord word;
    std::vector<Coordinate> indices;

    std::string to_string() const;
};

/// Every monomial of degree <= max_degree in the space's coordinates. Spaces
/// whose factors all ignore colors use only all-white words, as x* = x there.
std::vector<Monomial> test_monomials(const SpaceSpec& space, std::size_t max_degree);

struct RelationCheck {
    std::size_t relation = 0; ///< position in VerifyReport::relations
    std::size_t monomial = 0; ///< position in VerifyReport::monomials
    bool pass = false;
    /// Rescaled ∫ (LHS · m) and RHS · ∫ m. Kept for every check.
    Rational lhs;
    Rational rhs;
};

struct VerifyReport {
    SpaceSpec space;
    std::size_t max_k = 0;
    std::size_t test_degree = 0;
    std::vector<Relation> relations;
    std::vector<Monomial> monomials;
    std::vector<RelationCheck> checks;

    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
};

/// For each relation and each test monomial m, checks exactly that
/// ∫_X (LHS · m) = RHS · ∫_X m, in rescaled coordinates.
VerifyReport verify_relations(const SpaceSpec& space, std::size_t max_k, std::size_t test_degree);

/// ∫_X (LHS · m) literally, as Σ_i δ_π(i) · space_moment(word·m.word, i·m.indices).
/// Exponential in k; meant for cross-checking verify_relations on small spaces.
Rational relation_moment_by_expansion(const SpaceSpec& space, const Relation& relation, const Monomial& m);

} // namespace easyspace
