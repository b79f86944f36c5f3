#include "easyspace/integrator.hpp"
#include "easyspace/oracles.hpp"
#include "easyspace/spaces.hpp"
#include "support/brute.hpp"

#include <doctest.h>

#include <cmath>

using namespace easyspace;

namespace {

Rational moment(const char* group, const char* word, std::vector<int> rows, std::vector<int> cols)
{
    return group_moment(GroupSpec::parse(group), {ColoredWord::parse(word), std::move(rows), std::move(cols)});
}

} // namespace

TEST_CASE("group moment examples")
{
    for (unsigned N = 1; N <= 6; ++N) {
        const Rational n = N;
        CHECK(group_moment({CategoryId::S, N}, {ColoredWord::parse("o"), {1}, {1}}) == 1 / n);
        CHECK(group_moment({CategoryId::U, N}, {ColoredWord::parse("ob"), {1, 1}, {1, 1}}) == 1 / n);
        if (N >= 2)
            CHECK(group_moment({CategoryId::OPlus, N}, {ColoredWord::parse("oooo"), {1, 1, 1, 1}, {1, 1, 1, 1}}) ==
                  2 / (n * (n + 1)));
    }
    CHECK(moment("O+:4", "", {}, {}) == 1);
    CHECK(moment("O:4", "oooo", {1, 1, 1, 1}, {1, 1, 1, 1}) == Rational(1, 8));
    CHECK(moment("U:3", "oo", {1, 1}, {1, 1}) == 0);
    CHECK_THROWS_AS(moment("O:3", "oo", {1, 4}, {1, 1}), PreconditionError);
    CHECK_THROWS_AS(moment("O:3", "oo", {1}, {1, 1}), PreconditionError);
}

TEST_CASE("product group moments factorize")
{
    const std::vector<GroupSpec> groups{GroupSpec::parse("O:3"), GroupSpec::parse("O:4")};
    const auto w = ColoredWord::parse("oo");
    const std::vector<MomentQuery> q{{w, {1, 1}, {1, 1}}, {w, {1, 1}, {1, 1}}};
    CHECK(product_group_moment(groups, q) == Rational(1, 12));

    CHECK(product_group_moment(std::span(groups).first(1), std::span(q).first(1)) == Rational(1, 3));

    const std::vector<GroupSpec> mixed{GroupSpec::parse("S+:4"), GroupSpec::parse("U:3")};
    const auto w4 = ColoredWord::parse("obob");
    for (const auto& r1 : brute::tuples(2, 4))
        for (const auto& c2 : brute::tuples(2, 4)) {
            const std::vector<MomentQuery> qs{{w4, r1, {1, 2, 1, 2}}, {w4, {1, 2, 2, 1}, c2}};
            CHECK(product_group_moment(mixed, qs) == group_moment(mixed[0], qs[0]) * group_moment(mixed[1], qs[1]));
        }
    const std::vector<MomentQuery> bad{{w, {1, 1}, {1, 1}}, {ColoredWord::parse("ob"), {1, 1}, {1, 1}}};
    CHECK_THROWS_AS(product_group_moment(groups, bad), PreconditionError);
}

TEST_CASE("k_vector equals brute-force counts over I^k")
{
    const auto w = ColoredWord::all_white(4);
    const auto kv = k_vector(CategoryId::S, w, 2);
    for (const auto& [sigma, value] : kv)
        CHECK(value == Rational(brute::k_count(sigma, {1, 2})));
    CHECK(kv.at(SetPartition::one_block(4)) == 2);
    CHECK(k_vector(CategoryId::S, w, 3).at(SetPartition::parse("12|34")) == 9);
    for (auto c : all_categories)
        for (const auto& word : brute::words_for(c, 3))
            for (const auto& [sigma, value] : k_vector(c, word, 3))
                CHECK(value == Rational(brute::k_count(sigma, {2, 5, 7})));
}

TEST_CASE("unitarity in expectation for every category, N <= 6")
{
    const auto w = ColoredWord::parse("ob");
    for (auto c : all_categories)
        for (unsigned N = 1; N <= 6; ++N)
            for (int i = 1; i <= static_cast<int>(N); ++i)
                for (int i2 = 1; i2 <= static_cast<int>(N); ++i2) {
                    Rational sum = 0;
                    for (int j = 1; j <= static_cast<int>(N); ++j)
                        sum += group_moment({c, N}, {w, {i, i2}, {j, j}});
                    CHECK(sum == (i == i2 ? 1 : 0));
                }
}

TEST_CASE("S and S+ moments are invariant under injective relabeling")
{
    const unsigned N = 5;
    const std::vector<int> perm_rows{3, 5, 1, 2, 4}, perm_cols{2, 1, 5, 4, 3};
    for (auto c : {CategoryId::S, CategoryId::SPlus})
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto w = ColoredWord::all_white(k);
            for (const auto& rows : brute::tuples(3, k))
                for (const auto& cols : brute::tuples(3, k)) {
                    std::vector<int> r2, c2;
                    for (int x : rows)
                        r2.push_back(perm_rows[x - 1]);
                    for (int x : cols)
                        c2.push_back(perm_cols[x - 1]);
                    REQUIRE(group_moment({c, N}, {w, rows, cols}) == group_moment({c, N}, {w, r2, c2}));
                }
        }
}

TEST_CASE("agreement with the exhaustive S_N oracle on a sample")
{
    for (unsigned N : {3u, 4u})
        for (std::size_t k = 0; k <= 4; ++k) {
            const auto w = ColoredWord::all_white(k);
            for (const auto& rows : brute::tuples(2, k))
                for (const auto& cols : brute::tuples(3, k)) {
                    const MomentQuery q{w, rows, cols};
                    REQUIRE(group_moment({CategoryId::S, N}, q) == sn_exhaustive_moment(N, q));
                }
        }
}

TEST_CASE("space moment examples")
{
    for (unsigned N = 2; N <= 5; ++N) {
        const auto sphere = free_real_sphere(N);
        for (int i = 1; i <= static_cast<int>(N); ++i) {
            const std::vector<int> idx{i, i};
            CHECK(space_moment(sphere, ColoredWord::parse("oo"), idx) == Rational(1, N));
        }
        // Σ_i x_i x_i* = 1 on the free complex sphere (M = 1, so rescaled = unscaled)
        Rational sum = 0;
        for (int i = 1; i <= static_cast<int>(N); ++i) {
            const std::vector<int> idx{i, i};
            sum += space_moment(free_complex_sphere(N), ColoredWord::parse("ob"), idx);
        }
        CHECK(sum == 1);
    }

    // Σ_ij h_i h_j h_i* h_j* = M² on the classical complex sphere and on U with larger I
    for (const auto& space : {classical_sphere(CategoryId::U, 4), SpaceSpec::parse("U:4/I=1,3")}) {
        Rational sum = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                const std::vector<int> idx{i, j, i, j};
                sum += space_moment(space, ColoredWord::parse("oobb"), idx);
            }
        const Rational M = space.M();
        CHECK(sum == M * M);
        CHECK(unscaled_value(sum, space.M(), 4) == doctest::Approx(1.0));
    }

    const auto sp = SpaceSpec::parse("O+:5/I=1,2");
    CHECK(space_moment(sp, ColoredWord(), std::span<const int>()) == 1);
    const std::vector<int> out_of_range{6};
    CHECK_THROWS_AS(space_moment(sp, ColoredWord::parse("o"), out_of_range), PreconditionError);
}

TEST_CASE("space moments are Σ_b of group moments (direct definition)")
{
    // h_i = Σ_{b∈I} u_{ib}: expand and sum group moments over b ∈ I^k.
    for (auto c : all_categories)
        for (unsigned N : {2u, 3u, 4u})
            for (const auto& I : {IndexSet::parse("1"), IndexSet::parse("1,2")}) {
                if (static_cast<unsigned>(I.max()) > N)
                    continue;
                const auto space = SpaceSpec::subset({c, N}, I);
                for (std::size_t k = 0; k <= 3; ++k)
                    for (const auto& w : brute::words_for(c, k))
                        for (const auto& rows : brute::tuples(static_cast<int>(std::min(N, 3u)), k)) {
                            Rational direct = 0;
                            for (const auto& b : brute::tuples(static_cast<int>(I.size()), k)) {
                                std::vector<int> cols;
                                for (int x : b)
                                    cols.push_back(I.members()[x - 1]);
                                direct += group_moment({c, N}, {w, rows, cols});
                            }
                            REQUIRE(space_moment(space, w, rows) == direct);
                        }
            }
}

TEST_CASE("product space moments equal the expansion over diagonal column tuples")
{
    // h_{(i,a)} = Σ_{c∈J} u_{ic} v_{ac}
    const std::vector<GroupSpec> groups{GroupSpec::parse("O+:3"), GroupSpec::parse("S:2")};
    const auto space = SpaceSpec::diagonal(groups, IndexSet::parse("1,2"));
    for (std::size_t k = 0; k <= 3; ++k) {
        const auto w = ColoredWord::all_white(k);
        for (const auto& first : brute::tuples(3, k))
            for (const auto& second : brute::tuples(2, k)) {
                std::vector<Coordinate> coords;
                for (std::size_t r = 0; r < k; ++r)
                    coords.push_back({first[r], second[r]});
                Rational direct = 0;
                for (const auto& cs : brute::tuples(2, k)) {
                    const std::vector<MomentQuery> q{{w, first, cs}, {w, second, cs}};
                    direct += product_group_moment(groups, q);
                }
                REQUIRE(space_moment(space, w, coords) == direct);
                SpaceWeights weights(space, w);
                REQUIRE(weights.moment(coords) == direct);
            }
    }
}

TEST_CASE("normalization: Σ_i ∫ h_i h_i* = M for every category, N <= 6, all small I")
{
    for (auto c : all_categories)
        for (unsigned N = 1; N <= 6; ++N)
            for (const auto& members : std::vector<std::vector<int>>{{1}, {1, 2}, {2, 3, 5}, {1, 2, 3, 4, 5, 6}}) {
                if (static_cast<unsigned>(members.back()) > N)
                    continue;
                const auto space = SpaceSpec::subset({c, N}, IndexSet(members));
                const auto w = uses_colors(c) ? ColoredWord::parse("ob") : ColoredWord::parse("oo");
                Rational sum = 0;
                for (int i = 1; i <= static_cast<int>(N); ++i) {
                    const std::vector<int> idx{i, i};
                    sum += space_moment(space, w, idx);
                }
                CHECK(sum == Rational(static_cast<long>(members.size())));
            }
}

TEST_CASE("SpaceWeightsTable normalizes colorless words")
{
    SpaceWeightsTable table(SpaceSpec::parse("O:3/I=1"));
    const auto& a = table.get(ColoredWord::parse("ob"));
    const auto& b = table.get(ColoredWord::parse("oo"));
    CHECK(&a == &b);
    CHECK_THROWS(table.at(ColoredWord::parse("ooo")));
}
