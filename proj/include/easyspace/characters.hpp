#pragma once

// Truncated characters χ_T = Σ_{i<=T} x_{i...i} of the spaces X_{G,I}, exact
// at finite N and in the N → ∞ limit, plus the limit-law moment sequences
// compared under the Bercovici-Pata correspondence.
//
// All values are moments of the rescaled variable √M χ_T. A plain power χ_T^k
// is the all-white word; black legs stand for χ_T^*.

#include "easyspace/integrator.hpp"
#include "easyspace/space_spec.hpp"

#include <functional>
#include <string>
#include <vector>

namespace easyspace {

struct CharacterQuery {
    SpaceSpec space;
    unsigned T = 1;
    ColoredWord word;
};

/// Σ_{π,σ} T^{|π_1 v..v π_s|} M^{|σ_1 v..v σ_s|} Π_r W_r(π_r, σ_r).
Rational char_moment_exact(const CharacterQuery& query);

/// Σ_{π ∈ D_1(word) ∩ ... ∩ D_s(word)} t^{|π|}: the N → ∞ limit with t = TM/N.
Rational char_moment_asymptotic(std::span<const CategoryId> categories, const ColoredWord& word, const Rational& t);

enum class LimitLawKind { Poisson, FreePoisson, Gaussian, Semicircle, ClassicalMatching, FreeMatching };

struct LimitLaw {
    LimitLawKind kind{};
    Rational t{1};
};

std::string to_string(LimitLawKind kind);
/// "poisson", "free-poisson", "gaussian", "semicircle", "classical-matching", "free-matching"
LimitLawKind parse_limit_law(std::string_view name);
CategoryId law_category(LimitLawKind kind);
/// The word whose moment is reported at order k: all-white, or o b o b ... for matching laws.
ColoredWord law_word(LimitLawKind kind, std::size_t k);

/// m_1 ... m_max_k.
std::vector<Rational> limit_law_moments(const LimitLaw& law, std::size_t max_k);

struct BpRow {
    std::size_t k = 0;
    Rational classical;
    Rational free;
};

/// Classical category (S, O or U) against its liberation, moments 1..max_k.
/// Unitary categories use the alternating word.
std::vector<BpRow> bp_compare(CategoryId classical_category, const Rational& t, std::size_t max_k);

struct ConvergenceRow {
    unsigned N = 0;
    unsigned T = 0;
    Rational t;
    Rational exact;
    Rational asymptotic;
    Rational difference; ///< exact - asymptotic
};

/// How T is chosen for each member of a family.
struct TRule {
    enum class Kind { Full, Fixed } kind = Kind::Full; ///< Full: T = min_r N_r
    unsigned fixed = 1;

    unsigned truncation(const SpaceSpec& space) const;
};

/// One row per N: exact and asymptotic rescaled moments, with t = TM/N_total.
std::vector<ConvergenceRow> convergence_profile(const std::function<SpaceSpec(unsigned)>& family,
                                                std::span<const unsigned> sizes, const ColoredWord& word,
                                                const TRule& rule);

/// True when |difference| strictly decreases along the rows.
bool differences_shrink(std::span<const ConvergenceRow> rows);

} // namespace easyspace
