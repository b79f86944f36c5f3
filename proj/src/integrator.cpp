#include "easyspace/integrator.hpp"

#include <cmath>

namespace easyspace {

namespace {

void check_indices(std::span<const int> indices, unsigned N, const char* what)
{
    for (int i : indices)
        if (i < 1 || static_cast<unsigned>(i) > N)
            throw PreconditionError(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(N));
}

std::vector<int> factor_indices(std::span<const Coordinate> coords, std::size_t r)
{
    std::vector<int> out(coords.size());
    for (std::size_t l = 0; l < coords.size(); ++l)
        out[l] = coords[l][r];
    return out;
}

std::vector<Coordinate> as_coordinates(std::span<const int> indices)
{
    std::vector<Coordinate> out;
    out.reserve(indices.size());
    for (int i : indices)
        out.push_back(Coordinate{i});
    return out;
}

Integer join_weight(const std::vector<const SetPartition*>& parts, const std::vector<Integer>& powers)
{
    SetPartition joined = *parts[0];
    for (std::size_t r = 1; r < parts.size(); ++r)
        joined = join(joined, *parts[r]);
    return powers[joined.block_count()];
}

} // namespace

Rational group_moment(const GroupSpec& group, const MomentQuery& query)
{
    const std::size_t k = query.word.size();
    if (query.rows.size() != k || query.cols.size() != k)
        throw PreconditionError("group_moment: rows and cols must match the word length");
    check_indices(query.rows, group.N, "row");
    check_indices(query.cols, group.N, "column");

    const auto w = WeingartenCache::global().get(group.category, query.word, group.N);
    const auto& index = w->source.index;
    std::vector<std::size_t> row_hits, col_hits;
    for (std::size_t b : w->basis) {
        if (delta(index[b], query.rows))
            row_hits.push_back(b);
        if (delta(index[b], query.cols))
            col_hits.push_back(b);
    }
    Rational total = 0;
    for (std::size_t p : row_hits)
        for (std::size_t q : col_hits)
            total += w->entries(p, q);
    return total;
}

Rational product_group_moment(std::span<const GroupSpec> groups, std::span<const MomentQuery> queries)
{
    if (groups.empty() || groups.size() != queries.size())
        throw PreconditionError("product_group_moment: need one query per factor");
    for (const auto& q : queries)
        if (q.word != queries[0].word)
            throw PreconditionError("product_group_moment: all factor queries must share one word");
    // The Haar state of a product is the product state; the tuple sum factorizes.
    Rational total = 1;
    for (std::size_t r = 0; r < groups.size(); ++r) {
        total *= group_moment(groups[r], queries[r]);
        if (total == 0)
            break;
    }
    return total;
}

std::map<SetPartition, Rational> k_vector(CategoryId category, const ColoredWord& word, unsigned M)
{
    if (M < 1)
        throw PreconditionError("k_vector: M must be at least 1");
    std::map<SetPartition, Rational> out;
    for (auto& sigma : enumerate_partitions(category, word)) {
        Rational value(pow(Integer(M), static_cast<unsigned>(sigma.block_count())));
        out.emplace(std::move(sigma), std::move(value));
    }
    return out;
}

Rational space_moment(const SpaceSpec& space, const ColoredWord& word, std::span<const Coordinate> indices)
{
    const std::size_t k = word.size();
    if (indices.size() != k)
        throw PreconditionError("space_moment: need one coordinate per leg of the word");
    for (const auto& c : indices)
        space.check_coordinate(c);

    const std::size_t s = space.factor_count();
    std::vector<Integer> powers(k + 1);
    for (std::size_t e = 0; e <= k; ++e)
        powers[e] = pow(Integer(space.M()), static_cast<unsigned>(e));

    // a_r(σ) = Σ_{π : δ_π(i^r) = 1} W_r(π, σ), over basis partitions of factor r.
    std::vector<WeingartenCache::Handle> ws(s);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> a(s);
    for (std::size_t r = 0; r < s; ++r) {
        const auto& g = space.factors()[r];
        ws[r] = WeingartenCache::global().get(g.category, word, g.N);
        const auto& w = *ws[r];
        const auto rows = factor_indices(indices, r);
        std::vector<std::size_t> hits;
        for (std::size_t b : w.basis)
            if (delta(w.source.index[b], rows))
                hits.push_back(b);
        for (std::size_t sigma : w.basis) {
            Rational acc = 0;
            for (std::size_t p : hits)
                acc += w.entries(p, sigma);
            if (acc != 0)
                a[r].emplace_back(sigma, std::move(acc));
        }
        if (a[r].empty())
            return Rational(0);
    }

    Rational total = 0;
    std::vector<std::size_t> pos(s, 0);
    std::vector<const SetPartition*> parts(s);
    while (true) {
        Rational term = 1;
        for (std::size_t r = 0; r < s; ++r) {
            term *= a[r][pos[r]].second;
            parts[r] = &ws[r]->source.index[a[r][pos[r]].first];
        }
        term *= join_weight(parts, powers);
        total += term;
        std::size_t r = s;
        while (true) {
            --r;
            if (++pos[r] < a[r].size())
                break;
            pos[r] = 0;
            if (r == 0)
                return total;
        }
    }
}

Rational space_moment(const SpaceSpec& space, const ColoredWord& word, std::span<const int> indices)
{
    if (space.factor_count() != 1)
        throw PreconditionError("space_moment: product spaces need tuple coordinates");
    const auto coords = as_coordinates(indices);
    return space_moment(space, word, coords);
}

double unscaled_value(const Rational& rescaled, unsigned M, std::size_t k)
{
    return to_double(rescaled) * std::pow(static_cast<double>(M), -0.5 * static_cast<double>(k));
}

// ---------------------------------------------------------------------------
// SpaceWeights

SpaceWeights::SpaceWeights(const SpaceSpec& space, const ColoredWord& word) : word_(word)
{
    const std::size_t s = space.factor_count();
    const std::size_t k = word.size();
    std::vector<WeingartenCache::Handle> ws(s);
    std::vector<std::vector<std::size_t>> basis(s);
    factors_.resize(s);
    for (std::size_t r = 0; r < s; ++r) {
        const auto& g = space.factors()[r];
        ws[r] = WeingartenCache::global().get(g.category, word, g.N);
        basis[r] = ws[r]->basis;
        for (std::size_t b : basis[r])
            factors_[r].push_back(ws[r]->source.index[b]);
    }

    strides_.assign(s, 1);
    std::size_t total = 1;
    for (std::size_t r = s; r-- > 0;) {
        strides_[r] = total;
        total *= factors_[r].size();
    }
    values_.assign(total, Rational(0));
    if (total == 0)
        return;

    std::vector<Integer> powers(k + 1);
    for (std::size_t e = 0; e <= k; ++e)
        powers[e] = pow(Integer(space.M()), static_cast<unsigned>(e));

    // C(σ) = M^{|σ_1 v ... v σ_s|}
    std::vector<const SetPartition*> parts(s);
    for (std::size_t flat = 0; flat < total; ++flat) {
        for (std::size_t r = 0; r < s; ++r)
            parts[r] = &factors_[r][(flat / strides_[r]) % factors_[r].size()];
        values_[flat] = join_weight(parts, powers);
    }

    // Contract mode r with W_r.
    std::vector<Rational> line, out;
    Rational term;
    for (std::size_t r = 0; r < s; ++r) {
        const std::size_t n = factors_[r].size();
        const auto& w = ws[r]->entries;
        const auto& b = basis[r];
        line.resize(n);
        out.resize(n);
        for (std::size_t flat = 0; flat < total; ++flat) {
            if ((flat / strides_[r]) % n != 0)
                continue;
            for (std::size_t t = 0; t < n; ++t)
                line[t] = values_[flat + t * strides_[r]];
            for (std::size_t t = 0; t < n; ++t) {
                out[t] = 0;
                for (std::size_t u = 0; u < n; ++u) {
                    const Rational& wtu = w(b[t], b[u]);
                    if (wtu == 0 || line[u] == 0)
                        continue;
                    term = wtu * line[u];
                    out[t] += term;
                }
            }
            for (std::size_t t = 0; t < n; ++t)
                values_[flat + t * strides_[r]] = out[t];
        }
    }
}

Rational SpaceWeights::moment(std::span<const Coordinate> indices) const
{
    if (indices.size() != word_.size())
        throw PreconditionError("SpaceWeights::moment: need one coordinate per leg");
    std::vector<std::vector<int>> per_factor(factors_.size());
    for (std::size_t r = 0; r < factors_.size(); ++r)
        per_factor[r] = factor_indices(indices, r);
    return contract([&](std::size_t r, const SetPartition& tau) {
        return Integer(delta(tau, per_factor[r]) ? 1 : 0);
    });
}

ColoredWord SpaceWeightsTable::key(const ColoredWord& word) const
{
    return space_.uses_colors() ? word : ColoredWord::all_white(word.size());
}

const SpaceWeights& SpaceWeightsTable::get(const ColoredWord& word)
{
    auto k = key(word);
    auto it = table_.find(k);
    if (it == table_.end())
        it = table_.emplace(k, SpaceWeights(space_, k)).first;
    return it->second;
}

const SpaceWeights& SpaceWeightsTable::at(const ColoredWord& word) const
{
    return table_.at(key(word));
}

} // namespace easyspace
