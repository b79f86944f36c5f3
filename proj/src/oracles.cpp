#include "easyspace/oracles.hpp"

#include "easyspace/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

namespace easyspace {

namespace {

void check_exhaustive(unsigned N)
{
    if (N < 1 || N > max_exhaustive_N)
        throw PreconditionError("exhaustive S_N oracles need 1 <= N <= " + std::to_string(max_exhaustive_N));
}

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// perm[j] = image of column j: the permutation matrix has g_{perm[j], j} = 1.
template <typename Visit>
void for_each_permutation(unsigned N, Visit&& visit)
{
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0;
    double carry = 0;

    void add(double x)
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

struct Moments {
    CompensatedSum re, re2, im, im2;
};

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

ComplexMatrix sample_haar(HaarKind kind, unsigned N, std::mt19937_64& rng, bool phase_correction)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    if (kind == HaarKind::Orthogonal) {
        Eigen::MatrixXd g(N, N);
        for (unsigned c = 0; c < N; ++c)
            for (unsigned r = 0; r < N; ++r)
                g(r, c) = normal(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        if (phase_correction)
            for (unsigned c = 0; c < N; ++c)
                if (qr.matrixQR()(c, c) < 0)
                    q.col(c) *= -1.0;
        return q.cast<Complex>();
    }
    ComplexMatrix g(N, N);
    for (unsigned c = 0; c < N; ++c)
        for (unsigned r = 0; r < N; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    if (phase_correction)
        for (unsigned c = 0; c < N; ++c) {
            const Complex d = qr.matrixQR()(c, c);
            const double mag = std::abs(d);
            if (mag > 0)
                q.col(c) *= d / mag;
        }
    return q;
}

} // namespace

// ---------------------------------------------------------------------------
// Exhaustive S_N

Rational sn_exhaustive_moment(unsigned N, const MomentQuery& query)
{
    check_exhaustive(N);
    const std::size_t k = query.word.size();
    if (query.rows.size() != k || query.cols.size() != k)
        throw PreconditionError("rows and cols must match the word length");
    for (std::size_t r = 0; r < k; ++r)
        if (query.rows[r] < 1 || query.rows[r] > static_cast<int>(N) || query.cols[r] < 1 ||
            query.cols[r] > static_cast<int>(N))
            throw PreconditionError("index out of range");

    std::uint64_t hits = 0;
    for_each_permutation(N, [&](const std::vector<int>& perm) {
        for (std::size_t r = 0; r < k; ++r)
            if (perm[query.cols[r] - 1] != query.rows[r])
                return;
        ++hits;
    });
    Rational value(Integer(static_cast<unsigned long>(hits)), factorial(N));
    value.canonicalize();
    return value;
}

Rational sn_exhaustive_space_moment(unsigned N, const IndexSet& I, const ColoredWord& word,
                                    std::span<const int> indices)
{
    check_exhaustive(N);
    if (indices.size() != word.size())
        throw PreconditionError("need one index per leg");
    if (static_cast<unsigned>(I.max()) > N)
        throw PreconditionError("index set exceeds 1..N");
    for (int i : indices)
        if (i < 1 || i > static_cast<int>(N))
            throw PreconditionError("index out of range");

    // h_i(g) = Σ_{b∈I} g_{ib} = [g^{-1}(i) ∈ I], a 0/1 value.
    std::uint64_t hits = 0;
    std::vector<int> inverse(N);
    for_each_permutation(N, [&](const std::vector<int>& perm) {
        for (unsigned j = 0; j < N; ++j)
            inverse[perm[j] - 1] = static_cast<int>(j) + 1;
        for (int i : indices)
            if (!I.contains(inverse[i - 1]))
                return;
        ++hits;
    });
    Rational value(Integer(static_cast<unsigned long>(hits)), factorial(N));
    value.canonicalize();
    return value;
}

std::vector<Rational> sn_exhaustive_character_moments(unsigned N, std::size_t max_k)
{
    check_exhaustive(N);
    std::vector<Integer> sums(max_k, 0);
    for_each_permutation(N, [&](const std::vector<int>& perm) {
        unsigned fixed = 0;
        for (unsigned j = 0; j < N; ++j)
            if (perm[j] == static_cast<int>(j) + 1)
                ++fixed;
        Integer power = 1;
        for (std::size_t k = 0; k < max_k; ++k) {
            power *= fixed;
            sums[k] += power;
        }
    });
    std::vector<Rational> out;
    const Integer total = factorial(N);
    for (const auto& s : sums) {
        Rational q(s, total);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

std::vector<SampleReport> haar_mc_moments(HaarKind kind, unsigned N, std::span<const MomentQuery> queries,
                                          const HaarOptions& options)
{
    if (N < 1)
        throw PreconditionError("N must be at least 1");
    if (options.samples < haar_min_samples)
        throw PreconditionError("need at least " + std::to_string(haar_min_samples) + " samples");
    for (const auto& q : queries) {
        if (q.rows.size() != q.word.size() || q.cols.size() != q.word.size())
            throw PreconditionError("rows and cols must match the word length");
        for (std::size_t r = 0; r < q.word.size(); ++r)
            if (q.rows[r] < 1 || q.rows[r] > static_cast<int>(N) || q.cols[r] < 1 || q.cols[r] > static_cast<int>(N))
                throw PreconditionError("index out of range");
    }

    const std::uint64_t blocks = (options.samples + haar_block_size - 1) / haar_block_size;
    std::vector<std::vector<Moments>> per_block(blocks, std::vector<Moments>(queries.size()));

    parallel_for(blocks, [&](std::size_t b) {
        const std::uint64_t begin = b * haar_block_size;
        const std::uint64_t end = std::min(options.samples, begin + haar_block_size);
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        std::mt19937_64 rng(seq);
        auto& acc = per_block[b];
        for (std::uint64_t n = begin; n < end; ++n) {
            const ComplexMatrix u = sample_haar(kind, N, rng, options.phase_correction);
            for (std::size_t qi = 0; qi < queries.size(); ++qi) {
                const auto& q = queries[qi];
                Complex value(1.0, 0.0);
                for (std::size_t r = 0; r < q.word.size(); ++r) {
                    const Complex entry = u(q.rows[r] - 1, q.cols[r] - 1);
                    value *= q.word[r] == Color::Black ? std::conj(entry) : entry;
                }
                acc[qi].re.add(value.real());
                acc[qi].re2.add(value.real() * value.real());
                acc[qi].im.add(value.imag());
                acc[qi].im2.add(value.imag() * value.imag());
            }
        }
    });

    std::vector<SampleReport> reports(queries.size());
    const double n = static_cast<double>(options.samples);
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        Moments total;
        for (const auto& block : per_block) {
            total.re.add(block[qi].re.value());
            total.re2.add(block[qi].re2.value());
            total.im.add(block[qi].im.value());
            total.im2.add(block[qi].im2.value());
        }
        auto stats = [n](double sum, double sum_sq, double& mean, double& se) {
            mean = sum / n;
            const double var = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1));
            se = std::sqrt(var / n);
        };
        auto& rep = reports[qi];
        stats(total.re.value(), total.re2.value(), rep.estimate, rep.standard_error);
        stats(total.im.value(), total.im2.value(), rep.imag_estimate, rep.imag_standard_error);
        rep.samples = options.samples;
        rep.seed = options.seed;
    }
    return reports;
}

SampleReport haar_mc_moment(HaarKind kind, unsigned N, const MomentQuery& query, const HaarOptions& options)
{
    return haar_mc_moments(kind, N, std::span(&query, 1), options).front();
}

// ---------------------------------------------------------------------------
// Counting

Integer bell_number(unsigned n)
{
    // Row r of the triangle starts with the last entry of row r-1; B(r) is its first entry.
    std::vector<Integer> row{1};
    for (unsigned r = 0; r < n; ++r) {
        std::vector<Integer> next{row.back()};
        for (const auto& x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

Integer catalan_number(unsigned n)
{
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    return binom / (n + 1);
}

Integer double_factorial_odd(unsigned m)
{
    Integer out = 1;
    for (unsigned j = 1; j + 1 <= 2 * m; j += 2)
        out *= j;
    return out;
}

std::vector<Rational> poisson_moments(const Rational& t, unsigned max_k)
{
    std::vector<Rational> m{Rational(1)};
    for (unsigned k = 0; k < max_k; ++k) {
        Rational acc = 0;
        for (unsigned j = 0; j <= k; ++j) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            acc += Rational(binom) * m[j];
        }
        m.push_back(t * acc);
    }
    m.erase(m.begin());
    return m;
}

} // namespace easyspace
