#include "easyspace/characters.hpp"

#include <algorithm>

namespace easyspace {

Rational char_moment_exact(const CharacterQuery& query)
{
    const auto& space = query.space;
    if (query.T < 1 || query.T > space.min_factor_dimension())
        throw PreconditionError("truncation T=" + std::to_string(query.T) + " outside 1.." +
                                std::to_string(space.min_factor_dimension()));

    const SpaceWeights weights(space, query.word);
    const std::size_t s = weights.factor_count();
    const std::size_t k = query.word.size();
    const auto& values = weights.values();

    std::vector<Integer> t_powers(k + 1);
    for (std::size_t e = 0; e <= k; ++e)
        t_powers[e] = pow(Integer(query.T), static_cast<unsigned>(e));

    Rational total = 0;
    Rational term;
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        if (values[flat] == 0)
            continue;
        SetPartition joined = weights.partitions(0)[(flat / weights.stride(0)) % weights.partitions(0).size()];
        for (std::size_t r = 1; r < s; ++r)
            joined = join(joined, weights.partitions(r)[(flat / weights.stride(r)) % weights.partitions(r).size()]);
        term = values[flat] * t_powers[joined.block_count()];
        total += term;
    }
    return total;
}

Rational char_moment_asymptotic(std::span<const CategoryId> categories, const ColoredWord& word, const Rational& t)
{
    if (t <= 0)
        throw PreconditionError("char_moment_asymptotic: t must be positive");
    Rational total = 0;
    for (const auto& p : enumerate_intersection(categories, word))
        total += pow(t, static_cast<unsigned>(p.block_count()));
    return total;
}

std::string to_string(LimitLawKind kind)
{
    switch (kind) {
    case LimitLawKind::Poisson: return "poisson";
    case LimitLawKind::FreePoisson: return "free-poisson";
    case LimitLawKind::Gaussian: return "gaussian";
    case LimitLawKind::Semicircle: return "semicircle";
    case LimitLawKind::ClassicalMatching: return "classical-matching";
    case LimitLawKind::FreeMatching: return "free-matching";
    }
    return "?";
}

LimitLawKind parse_limit_law(std::string_view name)
{
    for (auto kind : {LimitLawKind::Poisson, LimitLawKind::FreePoisson, LimitLawKind::Gaussian,
                      LimitLawKind::Semicircle, LimitLawKind::ClassicalMatching, LimitLawKind::FreeMatching})
        if (name == to_string(kind))
            return kind;
    throw PreconditionError("unknown limit law '" + std::string(name) + "'");
}

CategoryId law_category(LimitLawKind kind)
{
    switch (kind) {
    case LimitLawKind::Poisson: return CategoryId::S;
    case LimitLawKind::FreePoisson: return CategoryId::SPlus;
    case LimitLawKind::Gaussian: return CategoryId::O;
    case LimitLawKind::Semicircle: return CategoryId::OPlus;
    case LimitLawKind::ClassicalMatching: return CategoryId::U;
    case LimitLawKind::FreeMatching: return CategoryId::UPlus;
    }
    return CategoryId::S;
}

ColoredWord law_word(LimitLawKind kind, std::size_t k)
{
    const bool matching = kind == LimitLawKind::ClassicalMatching || kind == LimitLawKind::FreeMatching;
    return matching ? ColoredWord::alternating(k) : ColoredWord::all_white(k);
}

std::vector<Rational> limit_law_moments(const LimitLaw& law, std::size_t max_k)
{
    if (law.t <= 0)
        throw PreconditionError("limit law parameter t must be positive");
    const CategoryId category = law_category(law.kind);
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= max_k; ++k)
        out.push_back(char_moment_asymptotic(std::span(&category, 1), law_word(law.kind, k), law.t));
    return out;
}

std::vector<BpRow> bp_compare(CategoryId classical_category, const Rational& t, std::size_t max_k)
{
    if (is_free(classical_category))
        throw PreconditionError("bp_compare takes a classical category (S, O or U)");
    const CategoryId free = free_version(classical_category);
    std::vector<BpRow> rows;
    for (std::size_t k = 1; k <= max_k; ++k) {
        const ColoredWord word = uses_colors(classical_category) ? ColoredWord::alternating(k) : ColoredWord::all_white(k);
        rows.push_back({k, char_moment_asymptotic(std::span(&classical_category, 1), word, t),
                        char_moment_asymptotic(std::span(&free, 1), word, t)});
    }
    return rows;
}

unsigned TRule::truncation(const SpaceSpec& space) const
{
    return kind == Kind::Full ? space.min_factor_dimension() : fixed;
}

std::vector<ConvergenceRow> convergence_profile(const std::function<SpaceSpec(unsigned)>& family,
                                                std::span<const unsigned> sizes, const ColoredWord& word,
                                                const TRule& rule)
{
    std::vector<ConvergenceRow> rows;
    for (unsigned n : sizes) {
        const SpaceSpec space = family(n);
        ConvergenceRow row;
        row.N = n;
        row.T = rule.truncation(space);
        row.t = Rational(Integer(row.T) * space.M(), Integer(std::to_string(space.ambient_dimension())));
        row.t.canonicalize();
        std::vector<CategoryId> categories;
        for (const auto& g : space.factors())
            categories.push_back(g.category);
        row.exact = char_moment_exact({space, row.T, word});
        row.asymptotic = char_moment_asymptotic(categories, word, row.t);
        row.difference = row.exact - row.asymptotic;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool differences_shrink(std::span<const ConvergenceRow> rows)
{
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (abs(rows[i].difference) >= abs(rows[i - 1].difference))
            return false;
    return true;
}

} // namespace easyspace
