#include "easyspace/characters.hpp"
#include "easyspace/cli.hpp"
#include "easyspace/exact_linalg.hpp"
#include "easyspace/integrator.hpp"
#include "easyspace/oracles.hpp"
#include "easyspace/spaces.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace easyspace;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

Rational rational(const py::handle& value)
{
    // int, str "p/q" or fractions.Fraction; all print as "p" or "p/q"
    return parse_rational(py::str(value).cast<std::string>());
}

py::list fraction_list(const std::vector<Rational>& values)
{
    py::list out;
    for (const auto& v : values)
        out.append(fraction(v));
    return out;
}

py::list matrix(const RationalMatrix& m)
{
    py::list out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.append(fraction(m(r, c)));
        out.append(row);
    }
    return out;
}

std::vector<std::string> partition_strings(const std::vector<SetPartition>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(p.to_string());
    return out;
}

std::vector<CategoryId> categories(const std::vector<std::string>& names)
{
    std::vector<CategoryId> out;
    for (const auto& n : names)
        out.push_back(parse_category(n));
    return out;
}

HaarKind haar_kind(const std::string& name)
{
    if (name == "O" || name == "orthogonal")
        return HaarKind::Orthogonal;
    if (name == "U" || name == "unitary")
        return HaarKind::Unitary;
    throw PreconditionError("Monte Carlo supports O and U only, got '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Weingarten integration over easy quantum groups and their homogeneous spaces";
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def(
        "partitions",
        [](const std::string& category, const std::string& word) {
            return partition_strings(enumerate_partitions(parse_category(category), ColoredWord::parse(word)));
        },
        py::arg("category"), py::arg("word"));

    m.def(
        "gram",
        [](const std::string& group, const std::string& word) {
            const auto g = GroupSpec::parse(group);
            const auto gm = gram_matrix(g.category, ColoredWord::parse(word), g.N);
            py::dict d;
            d["index"] = partition_strings(gm.index);
            d["matrix"] = matrix(gm.entries);
            return d;
        },
        py::arg("group"), py::arg("word"));

    m.def(
        "weingarten",
        [](const std::string& group, const std::string& word) {
            const auto g = GroupSpec::parse(group);
            const auto w = weingarten_matrix(gram_matrix(g.category, ColoredWord::parse(word), g.N));
            py::dict d;
            d["index"] = partition_strings(w.source.index);
            d["basis"] = w.basis;
            d["invertible"] = w.invertible();
            d["matrix"] = matrix(w.entries);
            return d;
        },
        py::arg("group"), py::arg("word"));

    m.def(
        "group_moment",
        [](const std::string& group, const std::string& word, std::vector<int> rows, std::vector<int> cols) {
            return fraction(group_moment(GroupSpec::parse(group), {ColoredWord::parse(word), rows, cols}));
        },
        py::arg("group"), py::arg("word"), py::arg("rows"), py::arg("cols"));

    m.def(
        "space_moment",
        [](const std::string& space, const std::string& word, const std::vector<Coordinate>& indices) {
            return fraction(space_moment(SpaceSpec::parse(space), ColoredWord::parse(word), indices));
        },
        py::arg("space"), py::arg("word"), py::arg("indices"));

    m.def(
        "verify",
        [](const std::string& space, std::size_t max_k, std::size_t test_degree) {
            const auto r = verify_relations(SpaceSpec::parse(space), max_k, test_degree);
            py::list failures;
            for (const auto& c : r.checks)
                if (!c.pass)
                    failures.append(py::make_tuple(r.relations[c.relation].to_string(),
                                                   r.monomials[c.monomial].to_string(), fraction(c.lhs),
                                                   fraction(c.rhs)));
            py::dict d;
            d["relations"] = r.relations.size();
            d["monomials"] = r.monomials.size();
            d["checks"] = r.checks.size();
            d["all_pass"] = r.all_pass();
            d["failures"] = failures;
            return d;
        },
        py::arg("space"), py::arg("max_k") = 4, py::arg("test_degree") = 2);

    m.def(
        "char_exact",
        [](const std::string& space, unsigned T, const std::string& word) {
            return fraction(char_moment_exact({SpaceSpec::parse(space), T, ColoredWord::parse(word)}));
        },
        py::arg("space"), py::arg("T"), py::arg("word"));

    m.def(
        "char_asymptotic",
        [](const std::vector<std::string>& cats, const std::string& word, const py::object& t) {
            const auto cs = categories(cats);
            return fraction(char_moment_asymptotic(cs, ColoredWord::parse(word), rational(t)));
        },
        py::arg("categories"), py::arg("word"), py::arg("t") = 1);

    m.def(
        "limit_moments",
        [](const std::string& law, std::size_t max_k, const py::object& t) {
            return fraction_list(limit_law_moments({parse_limit_law(law), rational(t)}, max_k));
        },
        py::arg("law"), py::arg("max_k"), py::arg("t") = 1);

    m.def(
        "bp_compare",
        [](const std::string& category, const py::object& t, std::size_t max_k) {
            py::list out;
            for (const auto& row : bp_compare(parse_category(category), rational(t), max_k))
                out.append(py::make_tuple(row.k, fraction(row.classical), fraction(row.free)));
            return out;
        },
        py::arg("category"), py::arg("t") = 1, py::arg("max_k") = 6);

    m.def(
        "sn_moment",
        [](unsigned N, const std::string& word, std::vector<int> rows, std::vector<int> cols) {
            return fraction(sn_exhaustive_moment(N, {ColoredWord::parse(word), rows, cols}));
        },
        py::arg("N"), py::arg("word"), py::arg("rows"), py::arg("cols"));

    m.def(
        "haar_mc",
        [](const std::string& kind, unsigned N, const std::string& word, std::vector<int> rows,
           std::vector<int> cols, std::uint64_t samples, std::uint64_t seed) {
            HaarOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            SampleReport r;
            {
                py::gil_scoped_release release;
                r = haar_mc_moment(haar_kind(kind), N, {ColoredWord::parse(word), rows, cols}, opt);
            }
            py::dict d;
            d["estimate"] = r.estimate;
            d["standard_error"] = r.standard_error;
            d["imag_estimate"] = r.imag_estimate;
            d["imag_standard_error"] = r.imag_standard_error;
            d["samples"] = r.samples;
            d["seed"] = r.seed;
            return d;
        },
        py::arg("kind"), py::arg("N"), py::arg("word"), py::arg("rows"), py::arg("cols"),
        py::arg("samples") = 100'000, py::arg("seed") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
