#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <bicomm/catalog.hpp>
#include <bicomm/cli.hpp>
#include <bicomm/io.hpp>

using namespace bicomm;

namespace {

std::string data(const std::string& name) { return std::string(BICOMM_DATA_DIR) + "/" + name; }

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_cli(const cli::CommandRequest& r)
{
    std::ostringstream out, err;
    const int code = cli::run(r, out, err);
    return {code, out.str(), err.str()};
}

cli::CommandRequest request(cli::Subcommand s, std::optional<std::string> group = std::nullopt)
{
    cli::CommandRequest r;
    r.subcommand = s;
    r.group_file = std::move(group);
    return r;
}

} // namespace

TEST(GroupFile, ParsesAndCanonicalizes)
{
    const auto spec = parse_group_text(R"({"d": 2, "generators": [[["0", "2/4"], [" -6/3", 1]]]})");
    EXPECT_EQ(spec.rank, 2u);
    ASSERT_EQ(spec.generators.size(), 1u);
    EXPECT_EQ(spec.generators[0](0, 1), Rational(1, 2));
    EXPECT_EQ(spec.generators[0](1, 0), -2);
    EXPECT_EQ(to_json(spec).dump(), R"({"d":2,"generators":[[["0","1/2"],["-2","1"]]]})");
    EXPECT_EQ(parse_group_text(to_json(spec).dump()).generators, spec.generators);
}

TEST(GroupFile, Errors)
{
    EXPECT_THROW(parse_group_text("{"), ParseError);
    EXPECT_THROW(parse_group_text("[]"), ParseError);
    EXPECT_THROW(parse_group_text(R"({"d": 0, "generators": []})"), ParseError);
    EXPECT_THROW(parse_group_text(R"({"d": 2})"), ParseError);
    EXPECT_THROW(parse_group_text(R"({"d": 2, "generators": [[["1","0"]]]})"), ParseError);
    EXPECT_THROW(parse_group_text(R"({"d": 1, "generators": [[["1/0"]]]})"), ParseError);
    EXPECT_THROW(parse_group_text(R"({"d": 1, "generators": [[["x"]]]})"), ParseError);
    EXPECT_THROW(parse_group_text(R"({"d": 1, "generators": [[[1.5]]]})"), ParseError);
    EXPECT_THROW(load_group_file(data("no_such_file.group")), ParseError);
}

TEST(GroupFile, ShippedFilesLoad)
{
    for (const char* name : {"s2.group", "s3.group", "minus_identity_d1.group", "c4_rotation.group",
                             "signed_permutations.group", "c3_order3.group"}) {
        const auto spec = load_group_file(data(name));
        EXPECT_NO_THROW(group_closure(spec.rank, spec.generators)) << name;
    }
    EXPECT_EQ(group_closure(2, load_group_file(data("c3_order3.group")).generators).order(), 3u);
    EXPECT_EQ(group_closure(3, load_group_file(data("s3.group")).generators).order(), 6u);
}

TEST(Json, RationalFunctionRoundTrip)
{
    for (auto& [name, G] : group_catalog()) {
        const auto f = molien_bicomm(G);
        const auto j = to_json(f);
        EXPECT_EQ(rational_function_from_json(j), f) << name;
        EXPECT_EQ(rational_function_from_json(json::parse(j.dump())), f) << name;
        const auto s = expand(f, 10);
        EXPECT_EQ(truncated_series_from_json(json::parse(to_json(s).dump())), s) << name;
    }
    EXPECT_EQ(to_json(RationalFunction(UniPolynomial{1}, UniPolynomial{2, -4})).dump(),
              R"({"numerator":["1/2"],"denominator":["1","-2"]})");
    EXPECT_THROW(truncated_series_from_json(json::parse(R"({"order": 2, "coefficients": ["1"]})")), ParseError);
    EXPECT_THROW(rational_function_from_json(json::parse(R"({"numerator": ["1"]})")), ParseError);
}

TEST(Cli, HilbertPrintsExpansion)
{
    auto r = request(cli::Subcommand::hilbert, data("s2.group"));
    r.order = 6;
    const auto o = run_cli(r);
    EXPECT_EQ(o.code, cli::ok) << o.err;
    EXPECT_NE(o.out.find("molien_bicomm expansion: [0, 1, 2, 6, 13, 22, 36]"), std::string::npos) << o.out;
}

TEST(Cli, VerifyPasses)
{
    auto r = request(cli::Subcommand::verify);
    r.order = 6;
    const auto o = run_cli(r);
    EXPECT_EQ(o.code, cli::ok) << o.out << o.err;
    EXPECT_NE(o.out.find("all checks passed"), std::string::npos);
    EXPECT_EQ(o.out.find("FAIL"), std::string::npos);

    auto g = request(cli::Subcommand::verify, data("c3_order3.group"));
    g.order = 5;
    EXPECT_EQ(run_cli(g).code, cli::ok);
}

TEST(Cli, InvariantsAndNonfg)
{
    auto r = request(cli::Subcommand::invariants, data("minus_identity_d1.group"));
    r.order = 4;
    EXPECT_EQ(run_cli(r).code, cli::ok);
    auto n = request(cli::Subcommand::nonfg, data("s2.group"));
    n.order = 6;
    n.cutoff = 2;
    const auto o = run_cli(n);
    EXPECT_EQ(o.code, cli::ok) << o.out << o.err;
}

TEST(Cli, ExitCodes)
{
    auto cap = request(cli::Subcommand::hilbert, data("unipotent.group"));
    const auto c = run_cli(cap);
    EXPECT_EQ(c.code, cli::cap_exceeded);
    EXPECT_NE(c.err.find("CapExceeded"), std::string::npos);

    auto small = request(cli::Subcommand::hilbert, data("s3.group"));
    small.cap = 5;
    EXPECT_EQ(run_cli(small).code, cli::cap_exceeded);

    EXPECT_EQ(run_cli(request(cli::Subcommand::hilbert)).code, cli::bad_arguments);
    EXPECT_EQ(run_cli(request(cli::Subcommand::hilbert, data("singular.group"))).code, cli::invalid_group_file);
    EXPECT_EQ(run_cli(request(cli::Subcommand::hilbert, data("no_such_file.group"))).code, cli::invalid_group_file);

    auto bad = request(cli::Subcommand::nonfg, data("s2.group"));
    bad.order = 3;
    bad.cutoff = 3;
    EXPECT_EQ(run_cli(bad).code, cli::bad_arguments);
    auto sym = request(cli::Subcommand::symmetric);
    sym.rank = 1;
    EXPECT_EQ(run_cli(sym).code, cli::bad_arguments);
}

TEST(Cli, StructuredOutputIsJson)
{
    auto r = request(cli::Subcommand::symmetric);
    r.order = 4;
    r.format = cli::OutputFormat::structured;
    const auto o = run_cli(r);
    ASSERT_EQ(o.code, cli::ok) << o.err;
    const auto doc = json::parse(o.out);
    EXPECT_EQ(doc["command"], "symmetric");
    EXPECT_EQ(doc["input"]["d"], 2);
    EXPECT_EQ(doc["status"], "ok");
    EXPECT_TRUE(doc.contains("results"));
    EXPECT_TRUE(doc["checks"].is_array());
}

TEST(Cli, OutputIsDeterministic)
{
    auto r = request(cli::Subcommand::hilbert, data("signed_permutations.group"));
    r.format = cli::OutputFormat::structured;
    EXPECT_EQ(run_cli(r).out, run_cli(r).out);
    auto v = request(cli::Subcommand::verify);
    v.order = 5;
    EXPECT_EQ(run_cli(v).out, run_cli(v).out);
}
