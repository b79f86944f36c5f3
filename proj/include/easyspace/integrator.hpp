#pragma once

// Haar integrals of colored monomials over easy quantum groups, products of
// them, and the affine homogeneous spaces X_{G,I}.
//
// Group moments:   ∫ u_{i1 j1}^{e1} ... u_{ik jk}^{ek} = Σ_{π,σ} δ_π(i) δ_σ(j) W(π,σ)
// Space moments are reported for the rescaled coordinates h_i = √M x_i, so
// every value is rational:
//   ∫_X h_{i1}^{e1} ... h_{ik}^{ek} = Σ_{π,σ} δ_π(i) M^{|σ|} W(π,σ)
// and for a product with diagonal index set over J the weight M^{|σ|} becomes
// |J|^{|σ_1 v ... v σ_s|} with W replaced by the product of factor entries.
// The unscaled moment is the rescaled one times M^{-k/2}.

#include "easyspace/exact_linalg.hpp"
#include "easyspace/space_spec.hpp"

#include <map>
#include <span>
#include <vector>

namespace easyspace {

struct MomentQuery {
    ColoredWord word;
    std::vector<int> rows;
    std::vector<int> cols;
};

Rational group_moment(const GroupSpec& group, const MomentQuery& query);

/// One query per factor, all with the same word. Index tuples are per factor.
Rational product_group_moment(std::span<const GroupSpec> groups, std::span<const MomentQuery> queries);

/// σ ↦ M^{|σ|} over D(word): the number of b ∈ I^k with δ_σ(b) = 1.
std::map<SetPartition, Rational> k_vector(CategoryId category, const ColoredWord& word, unsigned M);

/// Rescaled moment ∫_X h_{c1}^{e1} ... h_{ck}^{ek}; one coordinate per leg.
Rational space_moment(const SpaceSpec& space, const ColoredWord& word, std::span<const Coordinate> indices);

/// Single-factor convenience overload.
Rational space_moment(const SpaceSpec& space, const ColoredWord& word, std::span<const int> indices);

/// Unscaled rendering: value · M^{-k/2}.
double unscaled_value(const Rational& rescaled, unsigned M, std::size_t k);

/// Per-word contraction of the Weingarten matrices of every factor with the
/// index-set weights:
///
///   V(τ_1..τ_s) = Σ_{σ_1..σ_s} Π_r W_r(τ_r, σ_r) · M^{|σ_1 v ... v σ_s|}
///
/// over the basis partitions of each factor. A space moment is then
/// Σ_τ Π_r δ_{τ_r}(i^r) V(τ). Built once per word and reused for bulk
/// evaluations (relation checks, character sums).
class SpaceWeights {
public:
    SpaceWeights(const SpaceSpec& space, const ColoredWord& word);

    const ColoredWord& word() const { return word_; }
    std::size_t factor_count() const { return factors_.size(); }
    /// Basis partitions of factor r (the τ_r range).
    const std::vector<SetPartition>& partitions(std::size_t r) const { return factors_[r]; }
    /// Flat tensor, last factor fastest.
    const std::vector<Rational>& values() const { return values_; }
    std::size_t stride(std::size_t r) const { return strides_[r]; }

    /// Σ_τ Π_r δ_{τ_r}(i^r) V(τ): same value as space_moment().
    Rational moment(std::span<const Coordinate> indices) const;

    /// Σ_τ Π_r weight_r(τ_r) V(τ) for arbitrary per-factor weights.
    template <typename PerFactorWeight>
    Rational contract(PerFactorWeight&& weight) const;

private:
    ColoredWord word_;
    std::vector<std::vector<SetPartition>> factors_;
    std::vector<std::size_t> strides_;
    std::vector<Rational> values_;
};

/// Memoized SpaceWeights for a fixed space, keyed by word. Not thread-safe
/// for insertion; call prepare() before sharing across threads.
class SpaceWeightsTable {
public:
    explicit SpaceWeightsTable(SpaceSpec space) : space_(std::move(space)) {}
    const SpaceWeights& get(const ColoredWord& word);
    const SpaceWeights& at(const ColoredWord& word) const;
    void prepare(const ColoredWord& word) { get(word); }
    const SpaceSpec& space() const { return space_; }

private:
    ColoredWord key(const ColoredWord& word) const;

    SpaceSpec space_;
    std::map<ColoredWord, SpaceWeights> table_;
};

template <typename PerFactorWeight>
Rational SpaceWeights::contract(PerFactorWeight&& weight) const
{
    const std::size_t s = factors_.size();
    // Per-factor weights, then an odometer over the nonzero ones.
    std::vector<std::vector<std::pair<std::size_t, Integer>>> nonzero(s);
    for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t t = 0; t < factors_[r].size(); ++t) {
            Integer w = weight(r, factors_[r][t]);
            if (w != 0)
                nonzero[r].emplace_back(t, std::move(w));
        }
        if (nonzero[r].empty())
            return Rational(0);
    }
    Rational total = 0;
    std::vector<std::size_t> pos(s, 0);
    Rational term;
    while (true) {
        std::size_t flat = 0;
        Integer product = 1;
        for (std::size_t r = 0; r < s; ++r) {
            flat += nonzero[r][pos[r]].first * strides_[r];
            product *= nonzero[r][pos[r]].second;
        }
        if (values_[flat] != 0) {
            term = values_[flat] * product;
            total += term;
        }
        std::size_t r = s;
        while (r > 0) {
            --r;
            if (++pos[r] < nonzero[r].size())
                break;
            pos[r] = 0;
            if (r == 0)
                return total;
        }
    }
}

} // namespace easyspace
