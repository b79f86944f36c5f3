#include "easyspace/spaces.hpp"

#include "easyspace/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace easyspace {

namespace {

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find(sep, pos);
        parts.emplace_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            return parts;
        pos = next + 1;
    }
}

unsigned parse_unsigned(std::string_view text, const char* what)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        text.size() > 9)
        throw PreconditionError(std::string("expected a positive integer for ") + what + ", got '" +
                                std::string(text) + "'");
    return static_cast<unsigned>(std::stoul(std::string(text)));
}

// Index tuples over [N]^k that are constant on the blocks of p.
std::vector<std::vector<int>> fitting_tuples(const SetPartition& p, unsigned N)
{
    std::vector<std::vector<int>> out;
    const std::size_t blocks = p.block_count();
    std::vector<int> values(blocks, 1);
    while (true) {
        std::vector<int> tuple(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            tuple[i] = values[p.labels()[i]];
        out.push_back(std::move(tuple));
        std::size_t b = blocks;
        while (true) {
            if (b == 0)
                return out;
            --b;
            if (++values[b] <= static_cast<int>(N))
                break;
            values[b] = 1;
        }
    }
}

// #{ i ∈ [N]^k : δ_π(i) = 1 and δ_τ(i·tail) = 1 }. τ lives on k + |tail| legs.
Integer fitting_count(const SetPartition& pi, const SetPartition& tau, std::span<const int> tail, unsigned N)
{
    const std::size_t k = pi.size();
    const std::size_t n = tau.size();
    int parent[256];
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };
    int first[256];
    std::fill(first, first + std::max(pi.block_count(), tau.block_count()), -1);
    for (std::size_t i = 0; i < k; ++i) {
        const auto l = pi.labels()[i];
        if (first[l] == -1)
            first[l] = static_cast<int>(i);
        else
            unite(first[l], static_cast<int>(i));
    }
    std::fill(first, first + tau.block_count(), -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto l = tau.labels()[i];
        if (first[l] == -1)
            first[l] = static_cast<int>(i);
        else
            unite(first[l], static_cast<int>(i));
    }
    // Fixed legs pin their component's value; every other component is free.
    int pinned[256];
    std::fill(pinned, pinned + n, 0);
    for (std::size_t t = 0; t < tail.size(); ++t) {
        const int root = find(static_cast<int>(k + t));
        if (pinned[root] == 0)
            pinned[root] = tail[t];
        else if (pinned[root] != tail[t])
            return Integer(0);
    }
    unsigned free_components = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i) && pinned[i] == 0)
            ++free_components;
    return pow(Integer(N), free_components);
}

} // namespace

// ---------------------------------------------------------------------------
// GroupSpec / IndexSet / SpaceSpec

std::string GroupSpec::to_string() const
{
    return easyspace::to_string(category) + ":" + std::to_string(N);
}

GroupSpec GroupSpec::parse(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2)
        throw PreconditionError("group must look like CATEGORY:N, got '" + std::string(text) + "'");
    GroupSpec g{parse_category(parts[0]), parse_unsigned(parts[1], "N")};
    if (g.N < 1)
        throw PreconditionError("group dimension must be at least 1");
    return g;
}

IndexSet::IndexSet(std::vector<int> members) : members_(std::move(members))
{
    if (members_.empty())
        throw PreconditionError("index set must be nonempty");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw PreconditionError("index set has duplicate members");
    if (members_.front() < 1)
        throw PreconditionError("index set members are 1-based");
}

IndexSet IndexSet::range(int size)
{
    std::vector<int> m(static_cast<std::size_t>(std::max(size, 0)));
    std::iota(m.begin(), m.end(), 1);
    return IndexSet(std::move(m));
}

IndexSet IndexSet::parse(std::string_view text)
{
    std::vector<int> m;
    for (const auto& part : split(text, ','))
        m.push_back(static_cast<int>(parse_unsigned(part, "index")));
    return IndexSet(std::move(m));
}

bool IndexSet::contains(int i) const
{
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::string IndexSet::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i)
            s.push_back(',');
        s += std::to_string(members_[i]);
    }
    return s;
}

SpaceSpec::SpaceSpec(std::vector<GroupSpec> factors, IndexMode mode, IndexSet indices)
    : factors_(std::move(factors)), mode_(mode), indices_(std::move(indices))
{
    if (factors_.empty())
        throw PreconditionError("a space needs at least one factor");
    for (const auto& g : factors_)
        if (g.N < 1)
            throw PreconditionError("group dimension must be at least 1");
    if (mode_ == IndexMode::Subset && factors_.size() != 1)
        throw PreconditionError("subset index sets need exactly one factor; use J= for products");
    const unsigned bound = mode_ == IndexMode::Subset ? factors_[0].N : min_factor_dimension();
    if (static_cast<unsigned>(indices_.max()) > bound)
        throw PreconditionError("index set exceeds 1.." + std::to_string(bound));
}

SpaceSpec SpaceSpec::subset(GroupSpec group, IndexSet indices)
{
    return SpaceSpec({group}, IndexMode::Subset, std::move(indices));
}

SpaceSpec SpaceSpec::diagonal(std::vector<GroupSpec> factors, IndexSet j)
{
    return SpaceSpec(std::move(factors), IndexMode::DiagonalJ, std::move(j));
}

SpaceSpec SpaceSpec::parse(std::string_view text)
{
    const auto head = text.substr(0, text.find(':'));
    if (is_preset_name(head)) {
        auto fields = split(text, ':');
        fields.erase(fields.begin());
        return preset(head, fields);
    }

    const auto slash = text.find('/');
    const auto group_part = text.substr(0, slash);
    std::vector<GroupSpec> factors;
    for (const auto& g : split(group_part, 'x'))
        factors.push_back(GroupSpec::parse(g));

    if (slash == std::string_view::npos) {
        if (factors.size() == 1)
            return subset(factors[0], IndexSet({1}));
        unsigned m = factors[0].N;
        for (const auto& g : factors)
            m = std::min(m, g.N);
        return diagonal(std::move(factors), IndexSet::range(static_cast<int>(m)));
    }
    const auto tail = text.substr(slash + 1);
    if (tail.size() < 3 || tail[1] != '=' || (tail[0] != 'I' && tail[0] != 'J'))
        throw PreconditionError("space index set must be written /I=... or /J=..., got '" + std::string(text) + "'");
    IndexSet set = IndexSet::parse(tail.substr(2));
    if (tail[0] == 'I')
        return factors.size() == 1 ? subset(factors[0], std::move(set))
                                   : throw PreconditionError("product spaces take a diagonal set J=..., not I=...");
    return diagonal(std::move(factors), std::move(set));
}

unsigned long long SpaceSpec::ambient_dimension() const
{
    unsigned long long n = 1;
    for (const auto& g : factors_)
        n *= g.N;
    return n;
}

unsigned SpaceSpec::min_factor_dimension() const
{
    unsigned m = factors_[0].N;
    for (const auto& g : factors_)
        m = std::min(m, g.N);
    return m;
}

bool SpaceSpec::uses_colors() const
{
    return std::any_of(factors_.begin(), factors_.end(), [](const GroupSpec& g) { return easyspace::uses_colors(g.category); });
}

void SpaceSpec::check_coordinate(const Coordinate& c) const
{
    if (c.size() != factors_.size())
        throw PreconditionError("coordinate " + easyspace::to_string(c) + " needs " + std::to_string(factors_.size()) +
                                " component(s)");
    for (std::size_t r = 0; r < c.size(); ++r)
        if (c[r] < 1 || static_cast<unsigned>(c[r]) > factors_[r].N)
            throw PreconditionError("coordinate " + easyspace::to_string(c) + " is out of range");
}

std::vector<Coordinate> SpaceSpec::coordinates() const
{
    std::vector<Coordinate> out;
    Coordinate c(factors_.size(), 1);
    while (true) {
        out.push_back(c);
        std::size_t r = c.size();
        while (true) {
            if (r == 0)
                return out;
            --r;
            if (static_cast<unsigned>(++c[r]) <= factors_[r].N)
                break;
            c[r] = 1;
        }
    }
}

std::string SpaceSpec::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < factors_.size(); ++r) {
        if (r)
            s.push_back('x');
        s += factors_[r].to_string();
    }
    s += mode_ == IndexMode::Subset ? "/I=" : "/J=";
    s += indices_.to_string();
    return s;
}

std::string to_string(const Coordinate& c)
{
    std::string s;
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (r)
            s.push_back('.');
        s += std::to_string(c[r]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Presets

SpaceSpec free_complex_sphere(unsigned N)
{
    return SpaceSpec::subset({CategoryId::UPlus, N}, IndexSet({1}));
}

SpaceSpec free_real_sphere(unsigned N)
{
    return SpaceSpec::subset({CategoryId::OPlus, N}, IndexSet({1}));
}

SpaceSpec classical_sphere(CategoryId category, unsigned N)
{
    if (category != CategoryId::O && category != CategoryId::U)
        throw PreconditionError("classical-sphere takes category O or U");
    return SpaceSpec::subset({category, N}, IndexSet({1}));
}

SpaceSpec group_as_space(CategoryId category, unsigned N)
{
    return SpaceSpec::diagonal({{category, N}, {category, N}}, IndexSet::range(static_cast<int>(N)));
}

SpaceSpec column_space(CategoryId category, unsigned N, unsigned M)
{
    if (M < 1 || M > N)
        throw PreconditionError("column-space requires 1 <= M <= N");
    return SpaceSpec::diagonal({{category, N}, {category, M}}, IndexSet::range(static_cast<int>(M)));
}

bool is_preset_name(std::string_view name)
{
    return name == "free-complex-sphere" || name == "free-real-sphere" || name == "classical-sphere" ||
           name == "group-as-space" || name == "column-space";
}

SpaceSpec preset(std::string_view name, const std::vector<std::string>& p)
{
    auto expect = [&](std::size_t n, const char* usage) {
        if (p.size() != n)
            throw PreconditionError(std::string("preset usage: ") + usage);
    };
    if (name == "free-complex-sphere") {
        expect(1, "free-complex-sphere:N");
        return free_complex_sphere(parse_unsigned(p[0], "N"));
    }
    if (name == "free-real-sphere") {
        expect(1, "free-real-sphere:N");
        return free_real_sphere(parse_unsigned(p[0], "N"));
    }
    if (name == "classical-sphere") {
        expect(2, "classical-sphere:{O|U}:N");
        return classical_sphere(parse_category(p[0]), parse_unsigned(p[1], "N"));
    }
    if (name == "group-as-space") {
        expect(2, "group-as-space:CATEGORY:N");
        return group_as_space(parse_category(p[0]), parse_unsigned(p[1], "N"));
    }
    if (name == "column-space") {
        expect(3, "column-space:CATEGORY:N:M");
        return column_space(parse_category(p[0]), parse_unsigned(p[1], "N"), parse_unsigned(p[2], "M"));
    }
    throw PreconditionError("unknown preset '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Relations

Rational Relation::rescaled_rhs(unsigned M) const
{
    return Rational(pow(Integer(M), static_cast<unsigned>(join_blocks)));
}

std::string Relation::to_string() const
{
    std::ostringstream out;
    out << '[' << word.to_string() << "] ";
    for (std::size_t r = 0; r < partitions.size(); ++r) {
        if (r)
            out << " x ";
        const auto p = partitions[r].to_string();
        out << (p.empty() ? "{}" : p);
    }
    out << " = M^(" << join_blocks << "-" << word.size() << "/2)";
    return out.str();
}

namespace {

/// Words of length k that give distinct relations: all colorings when some
/// factor looks at colors, otherwise only the all-white word (x* = x).
std::vector<ColoredWord> words_of_length(const SpaceSpec& space, std::size_t k)
{
    if (space.uses_colors())
        return ColoredWord::all_of_length(k);
    return {ColoredWord::all_white(k)};
}

} // namespace

std::vector<Relation> relation_set(const SpaceSpec& space, std::size_t max_k)
{
    std::vector<Relation> out;
    const std::size_t s = space.factor_count();
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (const auto& word : words_of_length(space, k)) {
            std::vector<std::vector<SetPartition>> d(s);
            bool empty = false;
            for (std::size_t r = 0; r < s; ++r) {
                d[r] = enumerate_partitions(space.factors()[r].category, word);
                empty = empty || d[r].empty();
            }
            if (empty)
                continue;
            std::vector<std::size_t> pos(s, 0);
            while (true) {
                Relation rel;
                rel.word = word;
                for (std::size_t r = 0; r < s; ++r)
                    rel.partitions.push_back(d[r][pos[r]]);
                SetPartition joined = rel.partitions[0];
                for (std::size_t r = 1; r < s; ++r)
                    joined = join(joined, rel.partitions[r]);
                rel.join_blocks = joined.block_count();
                out.push_back(std::move(rel));

                std::size_t r = s;
                bool done = false;
                while (true) {
                    if (r == 0) {
                        done = true;
                        break;
                    }
                    --r;
                    if (++pos[r] < d[r].size())
                        break;
                    pos[r] = 0;
                }
                if (done)
                    break;
            }
        }
    }
    return out;
}

std::string Monomial::to_string() const
{
    std::string s = "[" + word.to_string() + "]";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        s += i ? "," : " ";
        s += easyspace::to_string(indices[i]);
    }
    return s;
}

std::vector<Monomial> test_monomials(const SpaceSpec& space, std::size_t max_degree)
{
    const auto coords = space.coordinates();
    std::vector<Monomial> out;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        for (const auto& word : words_of_length(space, d)) {
            std::vector<std::size_t> pos(d, 0);
            while (true) {
                Monomial m{word, {}};
                for (std::size_t l = 0; l < d; ++l)
                    m.indices.push_back(coords[pos[l]]);
                out.push_back(std::move(m));
                std::size_t l = d;
                bool done = false;
                while (true) {
                    if (l == 0) {
                        done = true;
                        break;
                    }
                    --l;
                    if (++pos[l] < coords.size())
                        break;
                    pos[l] = 0;
                }
                if (done)
                    break;
            }
        }
    }
    return out;
}

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.pass; }));
}

VerifyReport verify_relations(const SpaceSpec& space, std::size_t max_k, std::size_t test_degree)
{
    VerifyReport report{space, max_k, test_degree, relation_set(space, max_k), test_monomials(space, test_degree), {}};
    const std::size_t s = space.factor_count();

    SpaceWeightsTable weights(space);
    for (std::size_t k = 0; k <= max_k + test_degree; ++k)
        for (const auto& w : words_of_length(space, k))
            weights.prepare(w);

    // Per monomial: ∫ m and its per-factor index tuples.
    const std::size_t monomials = report.monomials.size();
    std::vector<Rational> monomial_moment(monomials);
    std::vector<std::vector<std::vector<int>>> tails(monomials, std::vector<std::vector<int>>(s));
    for (std::size_t m = 0; m < monomials; ++m) {
        const auto& mono = report.monomials[m];
        monomial_moment[m] = weights.at(mono.word).moment(mono.indices);
        for (std::size_t r = 0; r < s; ++r)
            for (const auto& c : mono.indices)
                tails[m][r].push_back(c[r]);
    }

    report.checks.resize(report.relations.size() * monomials);
    parallel_for(report.relations.size(), [&](std::size_t ri) {
        const auto& rel = report.relations[ri];
        const Rational rhs_factor = rel.rescaled_rhs(space.M());
        for (std::size_t m = 0; m < monomials; ++m) {
            const auto& mono = report.monomials[m];
            const auto& table = weights.at(rel.word + mono.word);
            auto& check = report.checks[ri * monomials + m];
            check.relation = ri;
            check.monomial = m;
            check.lhs = table.contract([&](std::size_t r, const SetPartition& tau) {
                return fitting_count(rel.partitions[r], tau, tails[m][r], space.factors()[r].N);
            });
            check.rhs = rhs_factor * monomial_moment[m];
            check.pass = check.lhs == check.rhs;
        }
    });
    return report;
}

Rational relation_moment_by_expansion(const SpaceSpec& space, const Relation& relation, const Monomial& m)
{
    const std::size_t s = space.factor_count();
    const std::size_t k = relation.word.size();
    std::vector<std::vector<std::vector<int>>> tuples(s);
    for (std::size_t r = 0; r < s; ++r)
        tuples[r] = fitting_tuples(relation.partitions[r], space.factors()[r].N);

    const ColoredWord word = relation.word + m.word;
    Rational total = 0;
    std::vector<std::size_t> pos(s, 0);
    std::vector<Coordinate> coords(k + m.indices.size(), Coordinate(s));
    for (std::size_t t = 0; t < m.indices.size(); ++t)
        coords[k + t] = m.indices[t];
    while (true) {
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t r = 0; r < s; ++r)
                coords[l][r] = tuples[r][pos[r]][l];
        total += space_moment(space, word, coords);
        std::size_t r = s;
        while (true) {
            if (r == 0)
                return total;
            --r;
            if (++pos[r] < tuples[r].size())
                break;
            pos[r] = 0;
        }
    }
}

} // namespace easyspace
