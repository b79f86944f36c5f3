#include "easyspace/exact_linalg.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace easyspace {

namespace {

using IntRow = std::vector<Integer>;

// Row r of `m` multiplied by the lcm of its denominators.
IntRow integer_row(const RationalMatrix& m, std::size_t r)
{
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        row[c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    return row;
}

Integer row_scale(const RationalMatrix& m, std::size_t r)
{
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    return scale;
}

void remove_content(IntRow& row)
{
    Integer g = 0;
    for (const auto& x : row) {
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& x : row)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::string fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string category_file_token(CategoryId c)
{
    std::string s = to_string(c);
    if (!s.empty() && s.back() == '+') {
        s.pop_back();
        s += "plus";
    }
    return s;
}

bool weingarten_laws_hold(const RationalMatrix& g, const RationalMatrix& w)
{
    const RationalMatrix gw = g * w;
    if (gw * g != g)
        return false;
    return w * gw == w;
}

} // namespace

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const
{
    RationalMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s(r, c) = (*this)(rows[r], cols[c]);
    return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows())
        throw PreconditionError("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows(), b.cols());
    Rational term;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) == 0)
                    continue;
                term = aik * b(k, j);
                out(i, j) += term;
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

SingularMatrixError::SingularMatrixError(std::size_t dependent_row)
    : std::runtime_error("matrix is singular: row " + std::to_string(dependent_row) +
                         " is a combination of the rows before it"),
      dependent_row_(dependent_row)
{
}

std::vector<std::size_t> independent_rows(const RationalMatrix& matrix)
{
    std::vector<IntRow> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> kept;
    Integer a, b;
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        IntRow v = integer_row(matrix, r);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::size_t c = pivots[k];
            if (v[c] == 0)
                continue;
            a = basis[k][c];
            b = v[c];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = a * v[j] - b * basis[k][j];
            remove_content(v);
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        if (nz == v.end())
            continue;
        pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
        basis.push_back(std::move(v));
        kept.push_back(r);
    }
    return kept;
}

RationalMatrix solve_inverse(const RationalMatrix& matrix)
{
    const std::size_t n = matrix.rows();
    if (matrix.cols() != n)
        throw PreconditionError("solve_inverse: matrix is not square");

    // [D A | I] with D clearing row denominators; inv(A) = inv(D A) D.
    std::vector<Integer> scale(n);
    std::vector<IntRow> m(n, IntRow(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        scale[i] = row_scale(matrix, i);
        IntRow row = integer_row(matrix, i);
        std::move(row.begin(), row.end(), m[i].begin());
        m[i][n + i] = 1;
    }

    auto fail = [&]() -> RationalMatrix {
        const auto kept = independent_rows(matrix);
        std::size_t dependent = kept.size();
        for (std::size_t i = 0; i < kept.size(); ++i)
            if (kept[i] != i) {
                dependent = i;
                break;
            }
        throw SingularMatrixError(dependent);
    };

    Integer prev = 1;
    Integer t1, t2;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0)
            ++p;
        if (p == n)
            return fail();
        if (p != k)
            std::swap(m[p], m[k]);
        const Integer& pivot = m[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            const Integer factor = m[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k)
                    continue;
                t1 = pivot * m[i][j];
                if (factor != 0 && m[k][j] != 0) {
                    t2 = factor * m[k][j];
                    t1 -= t2;
                }
                mpz_divexact(m[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }

    RationalMatrix inverse(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational q(m[i][n + j] * scale[j], m[i][i]);
            q.canonicalize();
            inverse(i, j) = q;
        }
    return inverse;
}

// ---------------------------------------------------------------------------
// Gram and Weingarten matrices

GramMatrix gram_matrix(CategoryId category, const ColoredWord& word, unsigned N)
{
    if (N < 1)
        throw PreconditionError("gram_matrix: N must be at least 1");
    GramMatrix g;
    g.category = category;
    g.word = word;
    g.N = N;
    g.index = enumerate_partitions(category, word);
    const std::size_t n = g.index.size();
    std::vector<Integer> powers(word.size() + 1);
    for (std::size_t e = 0; e < powers.size(); ++e)
        powers[e] = pow(Integer(N), static_cast<unsigned>(e));
    g.entries = RationalMatrix(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) {
            const auto blocks = join(g.index[p], g.index[q]).block_count();
            g.entries(p, q) = powers[blocks];
            g.entries(q, p) = powers[blocks];
        }
    return g;
}

WeingartenMatrix weingarten_matrix(const GramMatrix& gram)
{
    WeingartenMatrix w;
    w.source = gram;
    const std::size_t n = gram.index.size();
    w.entries = RationalMatrix(n, n);
    try {
        w.entries = solve_inverse(gram.entries);
        w.basis.resize(n);
        std::iota(w.basis.begin(), w.basis.end(), std::size_t{0});
        return w;
    } catch (const SingularMatrixError&) {
    }
    w.basis = independent_rows(gram.entries);
    const RationalMatrix restricted_inverse = solve_inverse(gram.entries.submatrix(w.basis, w.basis));
    for (std::size_t a = 0; a < w.basis.size(); ++a)
        for (std::size_t b = 0; b < w.basis.size(); ++b)
            w.entries(w.basis[a], w.basis[b]) = restricted_inverse(a, b);
    return w;
}

// ---------------------------------------------------------------------------
// Cache

ColoredWord cache_word(CategoryId category, const ColoredWord& word)
{
    return uses_colors(category) ? word : ColoredWord::all_white(word.size());
}

WeingartenCache& WeingartenCache::global()
{
    static WeingartenCache cache;
    return cache;
}

std::string WeingartenCache::record_file_name(CategoryId category, const ColoredWord& word, unsigned N)
{
    const std::string w = word.empty() ? std::string("empty") : word.to_string();
    return "weingarten_" + category_file_token(category) + "_" + w + "_N" + std::to_string(N) + ".json";
}

void WeingartenCache::set_directory(std::optional<std::filesystem::path> directory)
{
    std::unique_lock lock(mutex_);
    directory_ = std::move(directory);
    if (directory_)
        std::filesystem::create_directories(*directory_);
}

std::size_t WeingartenCache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void WeingartenCache::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::size_t WeingartenCache::rejected_records() const
{
    std::shared_lock lock(mutex_);
    return rejected_;
}

WeingartenCache::Handle WeingartenCache::get(CategoryId category, const ColoredWord& word, unsigned N)
{
    const ColoredWord key_word = cache_word(category, word);
    Key key{category, key_word.to_string(), N};
    std::optional<std::filesystem::path> dir;
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end())
            return it->second;
        dir = directory_;
    }

    Handle value;
    if (dir)
        value = load_record(category, key_word, N);
    const bool computed = !value;
    if (computed)
        value = std::make_shared<const WeingartenMatrix>(weingarten_matrix(gram_matrix(category, key_word, N)));

    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.emplace(key, value);
        if (!inserted)
            return it->second;
    }
    if (computed && dir)
        store_record(*value);
    return value;
}

WeingartenCache::Handle WeingartenCache::load_record(CategoryId category, const ColoredWord& word, unsigned N)
{
    const auto path = *directory_ / record_file_name(category, word, N);
    std::ifstream in(path);
    if (!in)
        return nullptr;

    auto reject = [&]() -> Handle {
        std::unique_lock lock(mutex_);
        ++rejected_;
        return nullptr;
    };

    try {
        const auto doc = nlohmann::json::parse(in);
        if (doc.at("category").get<std::string>() != to_string(category) ||
            doc.at("word").get<std::string>() != word.to_string() || doc.at("N").get<unsigned>() != N)
            return reject();

        GramMatrix gram = gram_matrix(category, word, N);
        const std::size_t n = gram.index.size();
        const auto& index = doc.at("index");
        if (index.size() != n)
            return reject();
        for (std::size_t i = 0; i < n; ++i)
            if (index[i].get<std::string>() != gram.index[i].to_string())
                return reject();

        WeingartenMatrix w;
        w.basis = doc.at("basis").get<std::vector<std::size_t>>();
        if (!std::is_sorted(w.basis.begin(), w.basis.end()) ||
            std::adjacent_find(w.basis.begin(), w.basis.end()) != w.basis.end() ||
            (!w.basis.empty() && w.basis.back() >= n))
            return reject();

        const auto& rows = doc.at("entries");
        if (rows.size() != n)
            return reject();
        w.entries = RationalMatrix(n, n);
        std::vector<bool> in_basis(n, false);
        for (auto b : w.basis)
            in_basis[b] = true;
        for (std::size_t r = 0; r < n; ++r) {
            if (rows[r].size() != n)
                return reject();
            for (std::size_t c = 0; c < n; ++c) {
                w.entries(r, c) = parse_rational(rows[r][c].get<std::string>());
                if ((!in_basis[r] || !in_basis[c]) && w.entries(r, c) != 0)
                    return reject();
            }
        }
        if (!weingarten_laws_hold(gram.entries, w.entries))
            return reject();
        w.source = std::move(gram);
        return std::make_shared<const WeingartenMatrix>(std::move(w));
    } catch (const std::exception&) {
        return reject();
    }
}

void WeingartenCache::store_record(const WeingartenMatrix& w) const
{
    const auto& g = w.source;
    nlohmann::json doc;
    doc["category"] = to_string(g.category);
    doc["word"] = g.word.to_string();
    doc["N"] = g.N;
    auto index = nlohmann::json::array();
    for (const auto& p : g.index)
        index.push_back(p.to_string());
    doc["index"] = std::move(index);
    doc["basis"] = w.basis;
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < w.entries.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < w.entries.cols(); ++c)
            row.push_back(fraction_string(w.entries(r, c)));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);

    const auto path = *directory_ / record_file_name(g.category, g.word, g.N);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << doc.dump() << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
}

} // namespace easyspace
