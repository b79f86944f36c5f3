#pragma once

// Brute-force references for the tests. Nothing here calls the library's
// enumeration, join, delta or elimination code; only the value types are shared.

#include "easyspace/exact_linalg.hpp"
#include "easyspace/partitions.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace brute {

using namespace easyspace;

using Blocks = std::vector<std::vector<int>>;

// Every set partition of {0..k-1}, built by inserting each point into an
// existing block or a new one.
inline void all_blocks_rec(int point, int k, Blocks& cur, std::vector<Blocks>& out)
{
    if (point == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(point);
        all_blocks_rec(point + 1, k, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({point});
    all_blocks_rec(point + 1, k, cur, out);
    cur.pop_back();
}

inline std::vector<Blocks> all_set_partitions(int k)
{
    std::vector<Blocks> out;
    Blocks cur;
    all_blocks_rec(0, k, cur, out);
    return out;
}

inline bool crossing(const Blocks& p)
{
    // a < b < c < d with a, c in one block and b, d in another.
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (x == y)
                continue;
            for (int a : p[x])
                for (int c : p[x])
                    for (int b : p[y])
                        for (int d : p[y])
                            if (a < b && b < c && c < d)
                                return true;
        }
    return false;
}

inline bool pairing(const Blocks& p)
{
    return std::all_of(p.begin(), p.end(), [](const auto& b) { return b.size() == 2; });
}

inline bool matching(const Blocks& p, const ColoredWord& w)
{
    return pairing(p) && std::all_of(p.begin(), p.end(), [&](const auto& b) { return w[b[0]] != w[b[1]]; });
}

inline bool member(CategoryId c, const ColoredWord& w, const Blocks& p)
{
    const bool nc = !crossing(p);
    switch (c) {
    case CategoryId::S: return true;
    case CategoryId::O: return pairing(p);
    case CategoryId::U: return matching(p, w);
    case CategoryId::SPlus: return nc;
    case CategoryId::OPlus: return nc && pairing(p);
    case CategoryId::UPlus: return nc && matching(p, w);
    }
    return false;
}

/// D(word), sorted by restricted-growth labels.
inline std::vector<SetPartition> partitions(CategoryId c, const ColoredWord& w)
{
    std::vector<SetPartition> out;
    for (const auto& p : all_set_partitions(static_cast<int>(w.size())))
        if (member(c, w, p))
            out.push_back(SetPartition::from_blocks(w.size(), p));
    std::sort(out.begin(), out.end());
    return out;
}

/// All tuples in [1..N]^k, first coordinate slowest.
inline std::vector<std::vector<int>> tuples(int N, std::size_t k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 1);
    while (true) {
        out.push_back(cur);
        std::size_t r = k;
        while (r > 0) {
            --r;
            if (++cur[r] <= N)
                break;
            cur[r] = 1;
            if (r == 0)
                return out;
        }
        if (k == 0)
            return out;
    }
}

inline bool constant_on_blocks(const Blocks& p, const std::vector<int>& i)
{
    for (const auto& b : p)
        for (int leg : b)
            if (i[leg] != i[b[0]])
                return false;
    return true;
}

/// ξ_π as a 0/1 vector over [N]^k.
inline std::vector<int> xi(const SetPartition& p, int N)
{
    const auto blocks = p.blocks();
    std::vector<int> v;
    for (const auto& i : tuples(N, p.size()))
        v.push_back(constant_on_blocks(blocks, i) ? 1 : 0);
    return v;
}

/// <ξ_p, ξ_q> by explicit vectors.
inline Integer inner(const std::vector<int>& a, const std::vector<int>& b)
{
    long s = 0;
    for (std::size_t n = 0; n < a.size(); ++n)
        s += a[n] * b[n];
    return s;
}

/// Number of b in I^k constant on the blocks of σ.
inline Integer k_count(const SetPartition& sigma, const std::vector<int>& I)
{
    const auto blocks = sigma.blocks();
    long count = 0;
    for (const auto& t : tuples(static_cast<int>(I.size()), sigma.size())) {
        std::vector<int> b;
        for (int x : t)
            b.push_back(I[x - 1]);
        if (constant_on_blocks(blocks, b))
            ++count;
    }
    return count;
}

struct ProjectionResult {
    bool idempotent = true;
    bool self_adjoint = true;
    bool fixes_xi = true;
};

/// Materializes P = Σ W(π,σ) ξ_π ξ_σ* over [N]^k (scaled by a common
/// denominator to stay in integers) and checks P² = P, P* = P, P ξ_ρ = ξ_ρ.
inline ProjectionResult projection_laws(const WeingartenMatrix& w, int N)
{
    ProjectionResult res;
    const auto& index = w.source.index;
    const std::size_t n = index.size();
    if (n == 0)
        return res;
    std::vector<std::vector<int>> xis;
    for (const auto& p : index)
        xis.push_back(xi(p, N));
    const std::size_t dim = xis[0].size();

    Integer D = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), w.entries(a, b).get_den_mpz_t());
    std::vector<Integer> A(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            A[a * n + b] = w.entries(a, b).get_num() * (D / w.entries(a, b).get_den());

    // B = Ξ A Ξ^T (= D·P)
    std::vector<Integer> XA(dim * n, 0);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t a = 0; a < n; ++a)
            if (xis[a][r])
                for (std::size_t b = 0; b < n; ++b)
                    XA[r * n + b] += A[a * n + b];
    std::vector<Integer> B(dim * dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t b = 0; b < n; ++b)
                if (xis[b][c])
                    B[r * dim + c] += XA[r * n + b];

    for (std::size_t r = 0; r < dim && res.self_adjoint; ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (B[r * dim + c] != B[c * dim + r]) {
                res.self_adjoint = false;
                break;
            }

    // B·B == D·B
    Integer acc;
    for (std::size_t r = 0; r < dim && res.idempotent; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            acc = 0;
            for (std::size_t m = 0; m < dim; ++m)
                if (B[r * dim + m] != 0 && B[m * dim + c] != 0)
                    mpz_addmul(acc.get_mpz_t(), B[r * dim + m].get_mpz_t(), B[m * dim + c].get_mpz_t());
            if (acc != D * B[r * dim + c]) {
                res.idempotent = false;
                break;
            }
        }

    for (std::size_t rho = 0; rho < n && res.fixes_xi; ++rho)
        for (std::size_t r = 0; r < dim; ++r) {
            acc = 0;
            for (std::size_t c = 0; c < dim; ++c)
                if (xis[rho][c])
                    acc += B[r * dim + c];
            if (acc != D * xis[rho][r]) {
                res.fixes_xi = false;
                break;
            }
        }
    return res;
}

/// Every word of length k for color-sensitive categories, else just the all-white word.
inline std::vector<ColoredWord> words_for(CategoryId c, std::size_t k)
{
    if (!uses_colors(c))
        return {ColoredWord::all_white(k)};
    return ColoredWord::all_of_length(k);
}

} // namespace brute
