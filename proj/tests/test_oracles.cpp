#include "easyspace/integrator.hpp"
#include "easyspace/oracles.hpp"
#include "easyspace/parallel.hpp"
#include "support/brute.hpp"

#include <doctest.h>

#include <cmath>

using namespace easyspace;

TEST_CASE("exhaustive S_N oracle examples")
{
    CHECK(sn_exhaustive_moment(3, {ColoredWord::parse("o"), {1}, {1}}) == Rational(1, 3));
    CHECK(sn_exhaustive_moment(4, {ColoredWord::parse("oo"), {1, 2}, {1, 2}}) == Rational(1, 12));
    CHECK(sn_exhaustive_moment(3, {ColoredWord::parse("o"), {1}, {2}}) == Rational(1, 3));
    CHECK(sn_exhaustive_moment(3, {ColoredWord::parse("oo"), {1, 1}, {1, 2}}) == 0);
    CHECK(sn_exhaustive_moment(5, {ColoredWord(), {}, {}}) == 1);
    CHECK_THROWS_AS(sn_exhaustive_moment(9, {ColoredWord::parse("o"), {1}, {1}}), PreconditionError);

    const std::vector<int> one{1}, pair{1, 1};
    CHECK(sn_exhaustive_space_moment(3, IndexSet::parse("1"), ColoredWord::parse("o"), one) == Rational(1, 3));
    CHECK(sn_exhaustive_space_moment(3, IndexSet::parse("1,2,3"), ColoredWord::parse("o"), one) == 1);
    const auto v = sn_exhaustive_space_moment(4, IndexSet::parse("1,2"), ColoredWord::parse("oo"), pair);
    CHECK(v == Rational(1, 2));
    CHECK(v == space_moment(SpaceSpec::parse("S:4/I=1,2"), ColoredWord::parse("oo"), pair));
}

TEST_CASE("fixed-point moments of S_N")
{
    // E[fix^k] = Bell(k) once N >= k
    const auto m = sn_exhaustive_character_moments(6, 6);
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(m[k - 1] == Rational(bell_number(k)));
    CHECK(sn_exhaustive_character_moments(2, 3)[2] == 4); // (8 + 0) / 2
}

TEST_CASE("counting oracles")
{
    CHECK(bell_number(0) == 1);
    CHECK(bell_number(4) == 15);
    CHECK(bell_number(6) == 203);
    CHECK(catalan_number(4) == 14);
    CHECK(catalan_number(0) == 1);
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(3) == 15);
    const auto p = poisson_moments(1, 4);
    CHECK(p == std::vector<Rational>{1, 2, 5, 15});
    // brute set partition counts
    for (int k = 0; k <= 7; ++k)
        CHECK(bell_number(k) == Integer(static_cast<long>(brute::all_set_partitions(k).size())));
}

TEST_CASE("Monte Carlo closed forms at N = 4")
{
    const unsigned N = 4;
    HaarOptions opt;
    opt.samples = 200'000;
    opt.seed = 11;
    const std::vector<MomentQuery> oq{{ColoredWord::parse("oo"), {1, 1}, {1, 1}},
                                      {ColoredWord::parse("oooo"), {1, 1, 1, 1}, {1, 1, 1, 1}},
                                      {ColoredWord::parse("oo"), {1, 2}, {1, 2}}};
    const auto o = haar_mc_moments(HaarKind::Orthogonal, N, oq, opt);
    for (std::size_t i = 0; i < oq.size(); ++i) {
        const double exact = to_double(group_moment({CategoryId::O, N}, oq[i]));
        CHECK(std::abs(o[i].estimate - exact) < 4 * o[i].standard_error);
        CHECK(o[i].imag_estimate == 0.0);
    }
    const std::vector<MomentQuery> uq{{ColoredWord::parse("ob"), {1, 1}, {1, 1}},
                                      {ColoredWord::parse("obob"), {1, 1, 1, 1}, {1, 1, 1, 1}},
                                      {ColoredWord::parse("oobb"), {1, 2, 1, 2}, {1, 2, 2, 1}}};
    const auto u = haar_mc_moments(HaarKind::Unitary, N, uq, opt);
    for (std::size_t i = 0; i < uq.size(); ++i) {
        const double exact = to_double(group_moment({CategoryId::U, N}, uq[i]));
        CHECK(std::abs(u[i].estimate - exact) < 4 * u[i].standard_error);
        CHECK(std::abs(u[i].imag_estimate) < 4 * u[i].imag_standard_error + 1e-12);
    }
}

TEST_CASE("Monte Carlo is deterministic and independent of the thread count")
{
    HaarOptions opt;
    opt.samples = 3 * haar_block_size + 17;
    opt.seed = 5;
    const MomentQuery q{ColoredWord::parse("obob"), {1, 2, 1, 2}, {1, 1, 2, 2}};
    const unsigned before = thread_count();
    set_thread_count(1);
    const auto a = haar_mc_moment(HaarKind::Unitary, 3, q, opt);
    set_thread_count(4);
    const auto b = haar_mc_moment(HaarKind::Unitary, 3, q, opt);
    set_thread_count(before);
    CHECK(a.estimate == b.estimate);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.imag_estimate == b.imag_estimate);
    CHECK(a.samples == opt.samples);
    CHECK(a.seed == 5);
    opt.seed = 6;
    CHECK(haar_mc_moment(HaarKind::Unitary, 3, q, opt).estimate != a.estimate);
}

TEST_CASE("Monte Carlo rejects bad input")
{
    HaarOptions opt;
    opt.samples = 100;
    CHECK_THROWS_AS(haar_mc_moment(HaarKind::Orthogonal, 3, {ColoredWord::parse("o"), {1}, {1}}, opt),
                    PreconditionError);
    opt.samples = haar_min_samples;
    CHECK_THROWS_AS(haar_mc_moment(HaarKind::Orthogonal, 3, {ColoredWord::parse("o"), {4}, {1}}, opt),
                    PreconditionError);
}

TEST_CASE("regression: the sign/phase correction is what makes QR samples Haar")
{
    HaarOptions opt;
    opt.samples = 100'000;
    opt.seed = 2;
    const MomentQuery first{ColoredWord::parse("o"), {1}, {1}};
    for (auto kind : {HaarKind::Orthogonal, HaarKind::Unitary}) {
        const auto good = haar_mc_moment(kind, 4, first, opt);
        CHECK(std::abs(good.estimate) < 4 * good.standard_error);
        HaarOptions raw = opt;
        raw.phase_correction = false;
        const auto bad = haar_mc_moment(kind, 4, first, raw);
        CHECK(std::abs(bad.estimate) > 10 * bad.standard_error);
    }
}
