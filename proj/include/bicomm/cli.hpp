#ifndef BICOMM_CLI_HPP
#define BICOMM_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hilbert.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "symmetric.hpp"

namespace bicomm::cli {

enum class Subcommand { hilbert, invariants, nonfg, symmetric, verify };
enum class OutputFormat { plain, structured };

enum ExitCode : int {
    ok = 0,
    bad_arguments = 2,
    invalid_group_file = 3,
    cap_exceeded = 4,
    check_failed = 5,
};

struct CommandRequest {
    Subcommand subcommand = Subcommand::verify;
    std::optional<std::string> group_file;
    unsigned order = 10;  // expansion order / largest degree inspected
    unsigned cutoff = 3;  // nonfg: largest generator degree
    std::size_t rank = 2; // symmetric, verify without a group file
    std::size_t cap = kDefaultClosureCap;
    OutputFormat format = OutputFormat::plain;
};

inline std::string subcommand_name(Subcommand s)
{
    switch (s) {
    case Subcommand::hilbert: return "hilbert";
    case Subcommand::invariants: return "invariants";
    case Subcommand::nonfg: return "nonfg";
    case Subcommand::symmetric: return "symmetric";
    default: return "verify";
    }
}

// Empty string when the request is well formed.
inline std::string validate(const CommandRequest& r)
{
    const bool needs_group = r.subcommand == Subcommand::hilbert || r.subcommand == Subcommand::invariants ||
                             r.subcommand == Subcommand::nonfg;
    if (needs_group && !r.group_file) return subcommand_name(r.subcommand) + " requires --group";
    if (r.subcommand == Subcommand::symmetric && r.group_file) return "symmetric does not take --group";
    if (r.cap < 1) return "--cap must be positive";
    switch (r.subcommand) {
    case Subcommand::invariants:
        if (r.order < 1) return "--order must be at least 1";
        break;
    case Subcommand::nonfg:
        if (r.cutoff < 1 || r.order <= r.cutoff) return "nonfg needs --order > --cutoff >= 1";
        break;
    case Subcommand::symmetric:
        if (r.rank < 2 || r.order < 2) return "symmetric needs --d >= 2 and --order >= 2";
        break;
    case Subcommand::verify:
        if (r.rank < 1 || r.order < 1) return "verify needs --d >= 1 and --order >= 1";
        break;
    default: break;
    }
    return {};
}

namespace detail {

struct Report {
    json doc = json::object();
    std::vector<std::string> lines;
    json checks = json::array();
    bool all_pass = true;

    void check(const std::string& name, bool pass, const std::string& detail = {})
    {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
        lines.push_back(std::string(pass ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : "  (" + detail + ")"));
        all_pass &= pass;
    }
};

inline std::string join(const std::vector<std::string>& items)
{
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s + "]";
}

inline std::string series_text(const TruncatedSeries& s)
{
    std::vector<std::string> items;
    for (const auto& c : s.coefficients) items.push_back(to_string(c));
    return join(items);
}

template <typename Seq>
std::string number_list(const Seq& v)
{
    std::vector<std::string> items;
    for (const auto& x : v) items.push_back(std::to_string(x));
    return join(items);
}

inline json group_summary(const FiniteGroup& G)
{
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(to_json(g));
    return json{{"d", G.rank()}, {"order", G.order()}, {"generators", gens}};
}

inline void run_hilbert(const FiniteGroup& G, unsigned order, Report& rep)
{
    rep.lines.push_back("group: d=" + std::to_string(G.rank()) + ", |G|=" + std::to_string(G.order()));
    json results = json::object();
    const std::pair<const char*, RationalFunction> series[] = {
        {"molien_classic", molien_classic(G)},
        {"dicks_formanek", dicks_formanek(G)},
        {"molien_bicomm", molien_bicomm(G)},
    };
    for (const auto& [name, f] : series) {
        const auto s = expand(f, order);
        results[name] = json{{"function", to_json(f)}, {"expansion", to_json(s)}};
        rep.lines.push_back(std::string(name) + " = " + f.to_string());
        rep.lines.push_back(std::string(name) + " expansion: " + series_text(s));
    }
    rep.doc["results"] = results;
}

inline void run_invariants(const FiniteGroup& G, unsigned order, Report& rep)
{
    json degrees = json::array();
    for (unsigned n = 1; n <= order; ++n) {
        const auto basis = invariant_basis(G, n);
        json elems = json::array();
        rep.lines.push_back("degree " + std::to_string(n) + ": dimension " + std::to_string(basis.dimension));
        for (const auto& e : basis.elements) {
            elems.push_back(e.to_string());
            rep.lines.push_back("  " + e.to_string());
        }
        degrees.push_back(json{{"degree", n}, {"dimension", basis.dimension}, {"basis", elems}});
    }
    rep.doc["results"] = json{{"degrees", degrees}};
}

inline void run_nonfg(const FiniteGroup& G, unsigned cutoff, unsigned order, Report& rep)
{
    const auto report = nonfg_witness(G, cutoff, order);
    json cuts = json::array();
    for (const auto& c : report.cutoffs) {
        json entry{{"cutoff", c.cutoff},
                   {"gap_degree", c.gap_degree ? json(*c.gap_degree) : json(nullptr)},
                   {"subalgebra_dimension", c.subalgebra_dimension},
                   {"invariant_dimension", c.invariant_dimension}};
        cuts.push_back(entry);
        if (c.gap_degree)
            rep.lines.push_back("cutoff " + std::to_string(c.cutoff) + ": gap at degree " + std::to_string(*c.gap_degree) +
                                " (subalgebra " + std::to_string(c.subalgebra_dimension) + " < invariants " +
                                std::to_string(c.invariant_dimension) + ")");
        else
            rep.lines.push_back("cutoff " + std::to_string(c.cutoff) + ": no gap up to degree " + std::to_string(order));
    }
    rep.lines.push_back("note: finitely many degrees inspected; empirical evidence only");
    rep.doc["results"] = json{{"cutoffs", cuts}, {"gap_for_every_cutoff", report.gap_for_every_cutoff()}};
}

inline void run_symmetric(std::size_t d, unsigned order, Report& rep)
{
    const auto report = symmetric_module_generators(d, order);
    json gens = json::array();
    rep.lines.push_back("module generators of (R_" + std::to_string(d) + "^2)^S_" + std::to_string(d) + " over K[Y]^S K[Z]^S:");
    for (const auto& g : report.generators) {
        gens.push_back(json{{"product", g.to_string()}, {"degree", g.degree}, {"value", g.value.to_string()}});
        rep.lines.push_back("  [" + std::to_string(g.degree) + "] " + g.to_string());
    }
    json bounds = json::array();
    for (const auto& [pq, e] : report.exponent_bounds) {
        bounds.push_back(json{{"p", pq.first}, {"q", pq.second}, {"bound", e}});
        rep.lines.push_back("n_{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "} = " + std::to_string(e));
    }
    json sat = json::array();
    for (const auto& s : report.saturation) {
        sat.push_back(json{{"degree", s.degree}, {"span_dimension", s.span_dimension},
                           {"invariant_dimension", s.invariant_dimension}, {"saturated", s.saturated()}});
        rep.check("saturation degree " + std::to_string(s.degree), s.saturated(),
                  "span " + std::to_string(s.span_dimension) + ", invariants " + std::to_string(s.invariant_dimension));
    }
    rep.doc["results"] = json{{"generators", gens}, {"exponent_bounds", bounds}, {"saturation", sat}};
}

inline void verify_group(const std::string& name, const FiniteGroup& G, unsigned order, Report& rep)
{
    const auto bicomm_series = expand(molien_bicomm(G), order);
    std::vector<std::size_t> reynolds_dims;
    bool ok = is_zero(bicomm_series[0]);
    for (unsigned n = 1; n <= order; ++n) {
        reynolds_dims.push_back(invariant_dimension(G, n));
        ok &= bicomm_series[n] == Rational(static_cast<unsigned long>(reynolds_dims.back()));
    }
    rep.check(name + ": molien_bicomm matches Reynolds dimensions", ok,
              "series " + series_text(bicomm_series) + ", Reynolds " + number_list(reynolds_dims));

    const auto classic_series = expand(molien_classic(G), order);
    std::vector<std::size_t> poly_dims;
    ok = true;
    for (unsigned n = 0; n <= order; ++n) {
        poly_dims.push_back(polynomial_invariant_dimension(G, n));
        ok &= classic_series[n] == Rational(static_cast<unsigned long>(poly_dims.back()));
    }
    rep.check(name + ": molien_classic matches commutative Reynolds dimensions", ok,
              "series " + series_text(classic_series) + ", Reynolds " + number_list(poly_dims));

    Rational trace_sum = 0;
    for (const auto& g : G.elements()) trace_sum += g.trace();
    const Rational avg_trace = trace_sum / Rational(static_cast<unsigned long>(G.order()));
    const auto lin_dim = invariant_dimension(G, 1);
    rep.check(name + ": linear invariants = average trace", avg_trace == Rational(static_cast<unsigned long>(lin_dim)),
              std::to_string(lin_dim) + " vs " + to_string(avg_trace));

    bool reynolds_ok = true;
    for (unsigned n = 1; n <= 2; ++n)
        for (const auto& b : basis_component(G.rank(), n)) {
            const auto r = reynolds(G, b);
            reynolds_ok &= reynolds(G, r) == r;
            for (const auto& g : G.generators()) reynolds_ok &= act(g, r) == r;
        }
    rep.check(name + ": Reynolds idempotent and G-fixed (degrees 1-2)", reynolds_ok);
}

inline void run_verify(const std::optional<FiniteGroup>& given, std::size_t d, unsigned order, Report& rep)
{
    std::vector<CatalogEntry> scope;
    if (given) {
        scope.push_back({"group", *given});
        d = given->rank();
    } else {
        scope = group_catalog(d);
        if (scope.empty()) {
            scope.push_back({"trivial(d=" + std::to_string(d) + ")", trivial_group(d)});
            scope.push_back({"minus_identity(d=" + std::to_string(d) + ")", minus_identity_group(d)});
            scope.push_back({"S" + std::to_string(d) + "(d=" + std::to_string(d) + ")", symmetric_group(d)});
        }
    }
    for (const auto& [name, G] : scope) verify_group(name, G, order, rep);

    const auto free_series = hilbert_free_bicomm(d);
    const auto expansion = expand(free_series, order);
    bool dims_ok = is_zero(expansion[0]);
    for (unsigned n = 1; n <= order; ++n) dims_ok &= expansion[n] == Rational(static_cast<unsigned long>(dim_component(d, n)));
    rep.check("trivial(d=" + std::to_string(d) + "): molien_bicomm equals hilbert_free_bicomm",
              molien_bicomm(trivial_group(d)) == free_series, free_series.to_string());
    rep.check("hilbert_free_bicomm(d=" + std::to_string(d) + ") coefficients equal dim_component", dims_ok,
              series_text(expansion));

    const auto identity = verify_d2_identity();
    rep.check("d=2 identity for e11^2 (reading " + identity.reading + ")", identity.holds(),
              "difference " + identity.difference.to_string());
    rep.doc["results"] = json{{"groups_checked", scope.size()}};
}

} // namespace detail

/// Executes one request, writing the report to `out` and diagnostics to
/// `err`; returns an ExitCode.
inline int run(const CommandRequest& request, std::ostream& out, std::ostream& err)
{
    if (auto problem = validate(request); !problem.empty()) {
        err << "error: " << problem << "\n";
        return bad_arguments;
    }
    detail::Report rep;
    json input{{"subcommand", subcommand_name(request.subcommand)},
               {"group_file", request.group_file ? json(*request.group_file) : json(nullptr)},
               {"order", request.order},
               {"cap", request.cap}};
    if (request.subcommand == Subcommand::nonfg) input["cutoff"] = request.cutoff;
    if (request.subcommand == Subcommand::symmetric || (request.subcommand == Subcommand::verify && !request.group_file))
        input["d"] = request.rank;

    std::optional<FiniteGroup> group;
    if (request.group_file) {
        try {
            const auto spec = load_group_file(*request.group_file);
            group = group_closure(spec.rank, spec.generators, request.cap);
        } catch (const CapExceeded& e) {
            err << "error: CapExceeded: " << e.what() << "\n";
            return cap_exceeded;
        } catch (const std::exception& e) {
            err << "error: invalid group file: " << e.what() << "\n";
            return invalid_group_file;
        }
        input["group"] = detail::group_summary(*group);
    }
    rep.doc["command"] = subcommand_name(request.subcommand);
    rep.doc["input"] = input;

    try {
        switch (request.subcommand) {
        case Subcommand::hilbert: detail::run_hilbert(*group, request.order, rep); break;
        case Subcommand::invariants: detail::run_invariants(*group, request.order, rep); break;
        case Subcommand::nonfg: detail::run_nonfg(*group, request.cutoff, request.order, rep); break;
        case Subcommand::symmetric: detail::run_symmetric(request.rank, request.order, rep); break;
        case Subcommand::verify: detail::run_verify(group, request.rank, request.order, rep); break;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return bad_arguments;
    }

    rep.doc["checks"] = rep.checks;
    rep.doc["status"] = rep.all_pass ? "ok" : "failed";
    if (request.format == OutputFormat::structured) {
        out << rep.doc.dump(2) << "\n";
    } else {
        for (const auto& line : rep.lines) out << line << "\n";
        if (!rep.checks.empty()) out << (rep.all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return rep.all_pass ? ok : check_failed;
}

} // namespace bicomm::cli

#endif
