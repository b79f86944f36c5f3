#include "easyspace/cli.hpp"

#include "easyspace/characters.hpp"
#include "easyspace/exact_linalg.hpp"
#include "easyspace/integrator.hpp"
#include "easyspace/oracles.hpp"
#include "easyspace/parallel.hpp"
#include "easyspace/spaces.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace easyspace {

namespace {

using nlohmann::json;

/// Raised by command handlers for bad flag values.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

std::vector<int> parse_index_list(const std::string& text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    for (const auto& part : split(text, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9)
            throw InputError("bad index list '" + text + "'");
        out.push_back(std::stoi(part));
    }
    return out;
}

std::string index_list_string(std::span<const int> v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s.push_back(',');
        s += std::to_string(v[i]);
    }
    return s;
}

/// "1.1,2.2" -> {{1,1},{2,2}}; "1,2" -> {{1},{2}}.
std::vector<Coordinate> parse_coordinates(const std::string& text)
{
    std::vector<Coordinate> out;
    if (text.empty())
        return out;
    for (const auto& leg : split(text, ',')) {
        Coordinate c;
        for (const auto& part : split(leg, '.')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9)
                throw InputError("bad coordinate list '" + text + "'");
            c.push_back(std::stoi(part));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string coordinates_string(std::span<const Coordinate> coords)
{
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i)
            s.push_back(',');
        s += to_string(coords[i]);
    }
    return s;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text)
{
    std::vector<unsigned> out;
    for (int v : parse_index_list(text))
        out.push_back(static_cast<unsigned>(v));
    return out;
}

std::vector<GroupSpec> parse_groups(const std::string& text)
{
    std::vector<GroupSpec> groups;
    for (const auto& g : split(text, 'x'))
        groups.push_back(GroupSpec::parse(g));
    if (groups.empty())
        throw InputError("missing group");
    return groups;
}

std::string groups_string(std::span<const GroupSpec> groups)
{
    std::string s;
    for (std::size_t r = 0; r < groups.size(); ++r) {
        if (r)
            s.push_back('x');
        s += groups[r].to_string();
    }
    return s;
}

json rational_json(const Rational& q)
{
    return to_string(q);
}

json matrix_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json partitions_json(std::span<const SetPartition> ps)
{
    json out = json::array();
    for (const auto& p : ps)
        out.push_back(p.to_string());
    return out;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    return out + "\"";
}

/// Table output: JSON array of row objects, or CSV with the given columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    json to_json() const
    {
        json out = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (std::size_t c = 0; c < columns.size(); ++c)
                obj[columns[c]] = row[c];
            out.push_back(std::move(obj));
        }
        return out;
    }

    std::string to_csv() const
    {
        std::ostringstream out;
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << columns[c];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "");
                if (!row[c].is_null())
                    out << csv_escape(row[c].is_string() ? row[c].get<std::string>() : row[c].dump());
            }
            out << '\n';
        }
        return out.str();
    }
};

struct CommandOutput {
    json document = json::object();
    std::optional<Table> table; ///< Placed under "table" in JSON, or printed alone as CSV.
    int exit_code = exit_ok;
};

/// Replaces every standalone "N" token (between separators : / x = ,) by n.
std::string family_instance(const std::string& pattern, unsigned n)
{
    static constexpr std::string_view separators = ":/x=,";
    std::string out;
    std::size_t start = 0;
    while (start <= pattern.size()) {
        std::size_t end = pattern.find_first_of(separators, start);
        if (end == std::string::npos)
            end = pattern.size();
        const std::string token = pattern.substr(start, end - start);
        out += token == "N" ? std::to_string(n) : token;
        if (end < pattern.size())
            out.push_back(pattern[end]);
        start = end + 1;
    }
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Weingarten integration over easy quantum groups and their homogeneous spaces", "easyspace"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string cache_dir;
    unsigned threads = 0;
    bool timing = false;
    app.add_option("--format", format, "Output format: json, or csv for tables")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", cache_dir, "Directory for persisted Weingarten matrices (env WG_CACHE_DIR)");
    app.add_option("--threads", threads, "Worker threads (0 = machine parallelism)");
    app.add_flag("--timing", timing, "Include wall-clock timing in the output");

    // Shared flag storage; each subcommand binds the subset it needs.
    std::string category, categories, word, group, rows, cols, space, indices, law, family, kind, t_text = "1",
                sizes, truncation = "full", index_set;
    std::size_t max_k = 4, test_degree = 0;
    unsigned T = 1, N = 0, n_param = 0;
    std::uint64_t samples = 1'000'000, seed = 0;
    bool failures_only = false;

    std::map<std::string, std::function<CommandOutput()>> handlers;

    auto* partitions = app.add_subcommand("partitions", "Enumerate D(word) for a category");
    partitions->add_option("--category", category, "S, O, U, S+, O+, U+")->required();
    partitions->add_option("--word", word, "Colored word over {o,b}");
    handlers["partitions"] = [&] {
        const auto c = parse_category(category);
        const auto w = ColoredWord::parse(word);
        const auto ps = enumerate_partitions(c, w);
        CommandOutput o;
        o.document["inputs"] = {{"category", to_string(c)}, {"word", w.to_string()}};
        o.document["count"] = ps.size();
        o.document["partitions"] = partitions_json(ps);
        return o;
    };

    auto* gram = app.add_subcommand("gram", "Gram matrix N^{|p v q|} over D(word)");
    gram->add_option("--group", group, "CATEGORY:N")->required();
    gram->add_option("--word", word, "Colored word over {o,b}");
    handlers["gram"] = [&] {
        const auto g = GroupSpec::parse(group);
        const auto w = ColoredWord::parse(word);
        const auto gm = gram_matrix(g.category, w, g.N);
        CommandOutput o;
        o.document["inputs"] = {{"group", g.to_string()}, {"word", w.to_string()}};
        o.document["index"] = partitions_json(gm.index);
        o.document["entries"] = matrix_json(gm.entries);
        return o;
    };

    auto* weingarten = app.add_subcommand("weingarten", "Weingarten matrix (generalized inverse of the Gram matrix)");
    weingarten->add_option("--group", group, "CATEGORY:N")->required();
    weingarten->add_option("--word", word, "Colored word over {o,b}");
    handlers["weingarten"] = [&] {
        const auto g = GroupSpec::parse(group);
        const auto w = ColoredWord::parse(word);
        const auto wm = WeingartenCache::global().get(g.category, w, g.N);
        const auto index = enumerate_partitions(g.category, w);
        std::vector<SetPartition> basis;
        for (auto b : wm->basis)
            basis.push_back(index[b]);
        CommandOutput o;
        o.document["inputs"] = {{"group", g.to_string()}, {"word", w.to_string()}};
        o.document["index"] = partitions_json(index);
        o.document["basis"] = partitions_json(basis);
        o.document["invertible"] = wm->invertible();
        o.document["entries"] = matrix_json(wm->entries);
        return o;
    };

    auto* gmoment = app.add_subcommand("group-moment", "Haar integral of u_{i1 j1}^{e1}...; products as O:3xO:4");
    gmoment->add_option("--group", group, "CATEGORY:N, or a product CATEGORY:NxCATEGORY:M")->required();
    gmoment->add_option("--word", word, "Colored word over {o,b}");
    gmoment->add_option("--rows", rows, "Row indices, comma separated; '/' between factors");
    gmoment->add_option("--cols", cols, "Column indices, comma separated; '/' between factors");
    handlers["group-moment"] = [&] {
        const auto groups = parse_groups(group);
        const auto w = ColoredWord::parse(word);
        const auto row_parts = split(rows, '/');
        const auto col_parts = split(cols, '/');
        const std::size_t s = groups.size();
        auto part = [&](const std::vector<std::string>& parts, std::size_t r) -> std::string {
            if (parts.empty())
                return "";
            if (parts.size() != s)
                throw InputError("need one index tuple per factor, separated by '/'");
            return parts[r];
        };
        std::vector<MomentQuery> queries;
        std::vector<std::string> row_echo, col_echo;
        for (std::size_t r = 0; r < s; ++r) {
            queries.push_back({w, parse_index_list(part(row_parts, r)), parse_index_list(part(col_parts, r))});
            row_echo.push_back(index_list_string(queries.back().rows));
            col_echo.push_back(index_list_string(queries.back().cols));
        }
        const Rational value = s == 1 ? group_moment(groups[0], queries[0]) : product_group_moment(groups, queries);
        auto join_echo = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? "/" : "") + v[i];
            return s;
        };
        CommandOutput o;
        o.document["inputs"] = {{"group", groups_string(groups)}, {"word", w.to_string()},
                                {"rows", join_echo(row_echo)}, {"cols", join_echo(col_echo)}};
        o.document["value"] = rational_json(value);
        o.document["value_float"] = to_double(value);
        return o;
    };

    auto* smoment = app.add_subcommand("space-moment", "Rescaled moment of h_i = sqrt(M) x_i on a space");
    smoment->add_option("--space", space, "O+:5/I=1,2, O:4xO:2/J=1,2, or a preset")->required();
    smoment->add_option("--word", word, "Colored word over {o,b}");
    smoment->add_option("--indices", indices, "One coordinate per leg: 1,2 or 1.1,2.2 for products");
    handlers["space-moment"] = [&] {
        const auto sp = SpaceSpec::parse(space);
        const auto w = ColoredWord::parse(word);
        const auto coords = parse_coordinates(indices);
        const Rational value = space_moment(sp, w, coords);
        CommandOutput o;
        o.document["inputs"] = {{"space", sp.to_string()}, {"word", w.to_string()},
                                {"indices", coordinates_string(coords)}};
        o.document["value"] = rational_json(value);
        o.document["unscaled"] = {{"coefficient", rational_json(value)},
                                  {"M", sp.M()},
                                  {"power_of_M", "-" + std::to_string(w.size()) + "/2"},
                                  {"float", unscaled_value(value, sp.M(), w.size())}};
        return o;
    };

    auto* relations = app.add_subcommand("relations", "Defining relations of X_{G,I} up to degree max-k");
    relations->add_option("--space", space, "Space spec or preset")->required();
    relations->add_option("--max-k", max_k, "Maximal word length");
    handlers["relations"] = [&] {
        const auto sp = SpaceSpec::parse(space);
        const auto rels = relation_set(sp, max_k);
        Table table{{"word", "partitions", "join_blocks", "k", "rhs_rescaled"}, {}};
        for (const auto& r : rels) {
            json parts = json::array();
            std::string joined;
            for (std::size_t i = 0; i < r.partitions.size(); ++i) {
                joined += (i ? " x " : "") + r.partitions[i].to_string();
            }
            table.rows.push_back({r.word.to_string(), joined, r.join_blocks, r.word.size(),
                                  rational_json(r.rescaled_rhs(sp.M()))});
        }
        CommandOutput o;
        o.document["inputs"] = {{"space", sp.to_string()}, {"max_k", max_k}};
        o.document["count"] = rels.size();
        o.table = std::move(table);
        return o;
    };

    auto* verify = app.add_subcommand("verify", "Check every relation against test monomials, exactly");
    verify->add_option("--space", space, "Space spec or preset")->required();
    verify->add_option("--max-k", max_k, "Maximal relation degree");
    verify->add_option("--test-degree", test_degree, "Maximal test monomial degree");
    verify->add_flag("--failures-only", failures_only, "List only failing checks");
    handlers["verify"] = [&] {
        const auto sp = SpaceSpec::parse(space);
        const auto report = verify_relations(sp, max_k, test_degree);
        Table table{{"relation", "monomial", "pass", "lhs", "rhs"}, {}};
        for (const auto& c : report.checks) {
            if (failures_only && c.pass)
                continue;
            json lhs = c.pass ? json(nullptr) : rational_json(c.lhs);
            json rhs = c.pass ? json(nullptr) : rational_json(c.rhs);
            table.rows.push_back({report.relations[c.relation].to_string(), report.monomials[c.monomial].to_string(),
                                  c.pass, lhs, rhs});
        }
        CommandOutput o;
        o.document["inputs"] = {{"space", sp.to_string()}, {"max_k", max_k}, {"test_degree", test_degree}};
        o.document["relations"] = report.relations.size();
        o.document["monomials"] = report.monomials.size();
        o.document["checks"] = report.checks.size();
        o.document["failures"] = report.failures();
        o.document["all_pass"] = report.all_pass();
        o.table = std::move(table);
        o.exit_code = report.all_pass() ? exit_ok : exit_verification_failed;
        return o;
    };

    auto* cexact = app.add_subcommand("char-exact", "Exact moment of sqrt(M) chi_T");
    cexact->add_option("--space", space, "Space spec or preset")->required();
    cexact->add_option("--T", T, "Truncation rank")->required();
    cexact->add_option("--word", word, "Colored word over {o,b}");
    handlers["char-exact"] = [&] {
        const auto sp = SpaceSpec::parse(space);
        const auto w = ColoredWord::parse(word);
        const Rational value = char_moment_exact({sp, T, w});
        CommandOutput o;
        o.document["inputs"] = {{"space", sp.to_string()}, {"T", T}, {"word", w.to_string()}};
        o.document["value"] = rational_json(value);
        o.document["value_float"] = to_double(value);
        return o;
    };

    auto* casym = app.add_subcommand("char-asymptotic", "Limit moment: sum of t^|p| over the intersection of categories");
    casym->add_option("--categories", categories, "Comma separated categories, e.g. O,O+")->required();
    casym->add_option("--word", word, "Colored word over {o,b}");
    casym->add_option("--t", t_text, "Parameter t = TM/N (rational)");
    handlers["char-asymptotic"] = [&] {
        std::vector<CategoryId> cats;
        std::string echo;
        for (const auto& c : split(categories, ',')) {
            cats.push_back(parse_category(c));
            echo += (echo.empty() ? "" : ",") + to_string(cats.back());
        }
        const auto w = ColoredWord::parse(word);
        const Rational t = parse_rational(t_text);
        const Rational value = char_moment_asymptotic(cats, w, t);
        CommandOutput o;
        o.document["inputs"] = {{"categories", echo}, {"word", w.to_string()}, {"t", to_string(t)}};
        o.document["value"] = rational_json(value);
        return o;
    };

    auto* limit = app.add_subcommand("limit-moments", "Moments m_1..m_max-k of a limit law");
    limit->add_option("--law", law, "poisson, free-poisson, gaussian, semicircle, classical-matching, free-matching")
        ->required();
    limit->add_option("--t", t_text, "Parameter t (rational)");
    limit->add_option("--max-k", max_k, "Number of moments");
    handlers["limit-moments"] = [&] {
        const LimitLaw l{parse_limit_law(law), parse_rational(t_text)};
        const auto moments = limit_law_moments(l, max_k);
        Table table{{"k", "value"}, {}};
        for (std::size_t k = 0; k < moments.size(); ++k)
            table.rows.push_back({k + 1, rational_json(moments[k])});
        CommandOutput o;
        o.document["inputs"] = {{"law", to_string(l.kind)}, {"t", to_string(l.t)}, {"max_k", max_k}};
        o.table = std::move(table);
        return o;
    };

    auto* bp = app.add_subcommand("bp-compare", "Classical vs free moment table");
    bp->add_option("--category", category, "S, O or U")->required();
    bp->add_option("--t", t_text, "Parameter t (rational)");
    bp->add_option("--max-k", max_k, "Largest moment order");
    handlers["bp-compare"] = [&] {
        const auto c = parse_category(category);
        const Rational t = parse_rational(t_text);
        Table table{{"k", "classical", "free"}, {}};
        for (const auto& row : bp_compare(c, t, max_k))
            table.rows.push_back({row.k, rational_json(row.classical), rational_json(row.free)});
        CommandOutput o;
        o.document["inputs"] = {{"category", to_string(c)}, {"t", to_string(t)}, {"max_k", max_k}};
        o.table = std::move(table);
        return o;
    };

    auto* conv = app.add_subcommand("convergence", "Exact vs asymptotic character moments along a family");
    conv->add_option("--family", family, "Space pattern with N as placeholder, e.g. free-real-sphere:N")->required();
    conv->add_option("--N", sizes, "Comma separated sizes")->required();
    conv->add_option("--word", word, "Colored word over {o,b}");
    conv->add_option("--T", truncation, "'full' (T = smallest factor size) or a fixed integer");
    handlers["convergence"] = [&] {
        TRule rule;
        if (truncation != "full") {
            const auto v = parse_index_list(truncation);
            if (v.size() != 1)
                throw InputError("--T takes 'full' or one integer");
            rule.kind = TRule::Kind::Fixed;
            rule.fixed = static_cast<unsigned>(v[0]);
        }
        const auto ns = parse_unsigned_list(sizes);
        const auto w = ColoredWord::parse(word);
        const auto rows_out = convergence_profile(
            [&](unsigned n) { return SpaceSpec::parse(family_instance(family, n)); }, ns, w, rule);
        Table table{{"N", "space", "T", "t", "exact", "asymptotic", "difference", "difference_float"}, {}};
        for (const auto& r : rows_out)
            table.rows.push_back({r.N, SpaceSpec::parse(family_instance(family, r.N)).to_string(), r.T,
                                  rational_json(r.t), rational_json(r.exact), rational_json(r.asymptotic),
                                  rational_json(r.difference), to_double(r.difference)});
        CommandOutput o;
        o.document["inputs"] = {{"family", family}, {"N", index_list_string(std::vector<int>(ns.begin(), ns.end()))},
                                {"word", w.to_string()}, {"T", truncation}};
        o.document["differences_shrink"] = differences_shrink(rows_out);
        o.table = std::move(table);
        return o;
    };

    auto* oracle = app.add_subcommand("oracle", "Independent ground truth: exhaustive S_N, Monte Carlo, counting");
    oracle->add_option("--kind", kind,
                       "sn-moment, sn-space-moment, sn-character, haar-mc, bell, catalan, double-factorial, "
                       "poisson-recurrence")
        ->required();
    oracle->add_option("--N", N, "Group size for sn-* kinds");
    oracle->add_option("--group", group, "O:N or U:N for haar-mc");
    oracle->add_option("--word", word, "Colored word over {o,b}");
    oracle->add_option("--rows", rows, "Row indices");
    oracle->add_option("--cols", cols, "Column indices");
    oracle->add_option("--I", index_set, "Index set for sn-space-moment");
    oracle->add_option("--indices", indices, "Coordinates for sn-space-moment");
    oracle->add_option("--samples", samples, "Monte Carlo sample count");
    oracle->add_option("--seed", seed, "Monte Carlo seed");
    oracle->add_option("--n", n_param, "Argument of the counting oracles");
    oracle->add_option("--t", t_text, "Poisson parameter");
    oracle->add_option("--max-k", max_k, "Number of moments (sn-character, poisson-recurrence)");
    handlers["oracle"] = [&] {
        CommandOutput o;
        const auto w = ColoredWord::parse(word);
        if (kind == "sn-moment") {
            const MomentQuery q{w, parse_index_list(rows), parse_index_list(cols)};
            const Rational v = sn_exhaustive_moment(N, q);
            o.document["inputs"] = {{"kind", kind}, {"N", N}, {"word", w.to_string()},
                                    {"rows", index_list_string(q.rows)}, {"cols", index_list_string(q.cols)}};
            o.document["value"] = rational_json(v);
        } else if (kind == "sn-space-moment") {
            const IndexSet I = IndexSet::parse(index_set.empty() ? "1" : index_set);
            const auto idx = parse_index_list(indices);
            const Rational v = sn_exhaustive_space_moment(N, I, w, idx);
            o.document["inputs"] = {{"kind", kind}, {"N", N}, {"I", I.to_string()}, {"word", w.to_string()},
                                    {"indices", index_list_string(idx)}};
            o.document["value"] = rational_json(v);
        } else if (kind == "sn-character") {
            const auto ms = sn_exhaustive_character_moments(N, max_k);
            Table table{{"k", "value"}, {}};
            for (std::size_t k = 0; k < ms.size(); ++k)
                table.rows.push_back({k + 1, rational_json(ms[k])});
            o.document["inputs"] = {{"kind", kind}, {"N", N}, {"max_k", max_k}};
            o.table = std::move(table);
        } else if (kind == "haar-mc") {
            const auto g = GroupSpec::parse(group);
            if (g.category != CategoryId::O && g.category != CategoryId::U)
                throw InputError("haar-mc samples O:N or U:N only");
            const MomentQuery q{w, parse_index_list(rows), parse_index_list(cols)};
            const auto rep = haar_mc_moment(g.category == CategoryId::O ? HaarKind::Orthogonal : HaarKind::Unitary,
                                            g.N, q, {samples, seed, true});
            o.document["inputs"] = {{"kind", kind}, {"group", g.to_string()}, {"word", w.to_string()},
                                    {"rows", index_list_string(q.rows)}, {"cols", index_list_string(q.cols)},
                                    {"samples", samples}, {"seed", seed}};
            o.document["estimate"] = rep.estimate;
            o.document["standard_error"] = rep.standard_error;
            o.document["imag_estimate"] = rep.imag_estimate;
            o.document["imag_standard_error"] = rep.imag_standard_error;
            o.document["samples"] = rep.samples;
            o.document["seed"] = rep.seed;
        } else if (kind == "bell" || kind == "catalan" || kind == "double-factorial") {
            const Integer v = kind == "bell" ? bell_number(n_param)
                              : kind == "catalan" ? catalan_number(n_param)
                                                  : double_factorial_odd(n_param);
            o.document["inputs"] = {{"kind", kind}, {"n", n_param}};
            o.document["value"] = v.get_str();
        } else if (kind == "poisson-recurrence") {
            const Rational t = parse_rational(t_text);
            const auto ms = poisson_moments(t, static_cast<unsigned>(max_k));
            Table table{{"k", "value"}, {}};
            for (std::size_t k = 0; k < ms.size(); ++k)
                table.rows.push_back({k + 1, rational_json(ms[k])});
            o.document["inputs"] = {{"kind", kind}, {"t", to_string(t)}, {"max_k", max_k}};
            o.table = std::move(table);
        } else {
            throw InputError("unknown oracle kind '" + kind + "'");
        }
        return o;
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_input_error;
    }

    const auto chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();

    try {
        if (threads != 0)
            set_thread_count(threads);
        if (cache_dir.empty())
            if (const char* env = std::getenv("WG_CACHE_DIR"))
                cache_dir = env;
        if (!cache_dir.empty())
            WeingartenCache::global().set_directory(std::filesystem::path(cache_dir));

        const auto start = std::chrono::steady_clock::now();
        CommandOutput result = handlers.at(name)();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        if (format == "csv") {
            if (!result.table) {
                err << "error: --format csv is only available for table commands\n";
                return exit_input_error;
            }
            out << result.table->to_csv();
            return result.exit_code;
        }
        json doc = json::object();
        doc["command"] = name;
        for (auto& [key, value] : result.document.items())
            doc[key] = value;
        if (result.table)
            doc["table"] = result.table->to_json();
        if (timing)
            doc["timing_seconds"] = seconds;
        out << doc.dump(2) << '\n';
        return result.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace easyspace
