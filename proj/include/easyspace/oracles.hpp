#pragma once

// Ground truth that does not go through partitions or Weingarten matrices:
// exhaustive averaging over S_N, Monte Carlo Haar sampling of O_N and U_N,
// and closed forms / recurrences for partition counts.

#include "easyspace/integrator.hpp"
#include "easyspace/space_spec.hpp"

#include <cstdint>
#include <vector>

namespace easyspace {

/// Exhaustive S_N oracles enumerate N! permutations.
inline constexpr unsigned max_exhaustive_N = 8;

/// (1/N!) Σ_g Π_r g_{i_r j_r} over permutation matrices (colors are irrelevant).
Rational sn_exhaustive_moment(unsigned N, const MomentQuery& query);

/// Exhaustive average of Π_r h_{i_r}, h_i = Σ_{b∈I} g_{ib}.
Rational sn_exhaustive_space_moment(unsigned N, const IndexSet& I, const ColoredWord& word,
                                    std::span<const int> indices);

/// Exhaustive moments of the main character tr(g) = #fixed points, orders 1..max_k.
std::vector<Rational> sn_exhaustive_character_moments(unsigned N, std::size_t max_k);

struct SampleReport {
    double estimate = 0;       ///< real part of the sample mean
    double standard_error = 0; ///< of the real part
    double imag_estimate = 0;  ///< zero for the orthogonal group
    double imag_standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

enum class HaarKind { Orthogonal, Unitary };

struct HaarOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    /// Multiply Q by the signs (phases) of diag(R). Without it Q is not Haar
    /// distributed; switching it off exists for the regression test only.
    bool phase_correction = true;
};

/// Number of samples per deterministic block; block b draws from a stream
/// seeded by (seed, b), so results do not depend on the thread count.
inline constexpr std::uint64_t haar_block_size = 8192;
inline constexpr std::uint64_t haar_min_samples = 10'000;

/// Monte Carlo estimate of ∫ u_{i1 j1}^{e1} ... (black legs conjugated).
SampleReport haar_mc_moment(HaarKind kind, unsigned N, const MomentQuery& query, const HaarOptions& options);

/// Several monomials estimated from the same samples.
std::vector<SampleReport> haar_mc_moments(HaarKind kind, unsigned N, std::span<const MomentQuery> queries,
                                          const HaarOptions& options);

/// Bell number via the Bell triangle.
Integer bell_number(unsigned n);
/// Catalan number via binom(2n, n) / (n + 1).
Integer catalan_number(unsigned n);
/// (2m-1)!! = number of pairings of 2m points; 1 for m = 0.
Integer double_factorial_odd(unsigned m);
/// Moments m_1..m_max_k of Poisson(t) from m_{k+1} = t Σ_j C(k, j) m_j, m_0 = 1.
std::vector<Rational> poisson_moments(const Rational& t, unsigned max_k);

} // namespace easyspace
