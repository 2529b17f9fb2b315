#include <sstream>

#include <gtest/gtest.h>

#include "evencycle/cli.hpp"
#include "evencycle/io.hpp"

using namespace evencycle;
using cli::Command;
using cli::RunConfig;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_on(Command c, const std::string& input, std::uint64_t seed, bool machine = false,
               std::optional<unsigned> d = std::nullopt)
{
    RunConfig config;
    config.command = c;
    config.seed = seed;
    config.machine = machine;
    config.field_degree = d;
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(config, in, out, err);
    return {code, out.str(), err.str()};
}

int parse_error_line(const std::string& text)
{
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

const char* const kTriangle = "3 3\n1 2\n2 3\n3 1\n";
const char* const kTwoCycle = "3 2\n1 2\n2 1\n";
const char* const kFourCycle = "4 4\n1 2\n2 3\n3 4\n4 1\n";

}  // namespace

TEST(ParseGraph, Examples)
{
    const Digraph two = parse_graph("2 2\n1 2\n2 1");
    EXPECT_EQ(two.vertex_count(), 2u);
    EXPECT_EQ(two.arcs(), (std::set<Digraph::Arc>{{1, 2}, {2, 1}}));

    const Digraph tri = parse_graph(kTriangle);
    EXPECT_EQ(tri.arc_count(), 3u);
    EXPECT_TRUE(tri.has_arc(3, 1));

    EXPECT_THROW(parse_graph("2 2\n1 2\n1 2"), ParseError);
}

TEST(ParseGraph, CommentsBlankLinesAndLoops)
{
    const Digraph g = parse_graph("# header comment\n\n3 3\n# arcs\n1 2\n2 2\n2 3\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.arc_count(), 2u);
    EXPECT_FALSE(g.has_arc(2, 2));
}

TEST(ParseGraph, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(parse_error_line("2 2\n1 2\n1 2"), 3);
    EXPECT_EQ(parse_error_line("# c\n2 1\n1 3\n"), 3);
    EXPECT_EQ(parse_error_line("2 2\n1 2\n"), 2);
    EXPECT_EQ(parse_error_line("2 x\n"), 1);
    EXPECT_EQ(parse_error_line("2 1\n1 2 3\n"), 2);
    EXPECT_EQ(parse_error_line(""), 1);
}

TEST(ParseMatrix, RoundTrip)
{
    const MatrixText t = parse_matrix("2 3\n001 2\n3 130\n");
    EXPECT_EQ(t.n, 2u);
    EXPECT_EQ(t.d, 3u);
    const Ring ring(Field(GF2Poly::from_string("1011")));
    const MatrixE m = to_matrix(ring, t);
    EXPECT_EQ(ring.to_string(m(1, 1)), "130");
    EXPECT_THROW(parse_matrix("2 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_matrix("1 1\n4\n"), ParseError);
    EXPECT_THROW(parse_matrix("1 0\n0\n"), ParseError);
}

TEST(Run, ShortestOutputs)
{
    Outcome r = run_on(Command::shortest, kTriangle, 5);
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "NO_EVEN_CYCLE");
    EXPECT_NE(r.out.find("seed=5"), std::string::npos);

    r = run_on(Command::shortest, kTwoCycle, 1);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "SHORTEST_EVEN_CYCLE 2");
}

TEST(Run, DetectOutputs)
{
    EXPECT_EQ(run_on(Command::detect, kFourCycle, 3).out.substr(0, 14), "EVEN_CYCLE yes");
    EXPECT_EQ(run_on(Command::detect, kTriangle, 3).out.substr(0, 13), "EVEN_CYCLE no");
}

TEST(Run, MachineModeFacts)
{
    const Outcome r = run_on(Command::shortest, kFourCycle, 11, true, 16u);
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("seed=11\n"), std::string::npos);
    EXPECT_NE(r.out.find("d=16\n"), std::string::npos);
    EXPECT_NE(r.out.find("result=SHORTEST_EVEN_CYCLE\n"), std::string::npos);
    EXPECT_NE(r.out.find("length=4\n"), std::string::npos);
    EXPECT_NE(r.out.find("g2="), std::string::npos);
}

TEST(Run, MachineOutputIsByteIdentical)
{
    for (Command c : {Command::shortest, Command::detect, Command::pcc}) {
        const Outcome a = run_on(c, kFourCycle, 77, true), b = run_on(c, kFourCycle, 77, true);
        EXPECT_EQ(a.out, b.out);
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Run, PerAndDet)
{
    Outcome r = run_on(Command::per, "2 1\n1 1\n2 2\n", 1);
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "PER 0");
    r = run_on(Command::det, "2 1\n0 1\n1 0\n", 1);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "DET 3");
    r = run_on(Command::per, "2 1\n1 1\n1 1\n", 1, true);
    EXPECT_NE(r.out.find("value=2\n"), std::string::npos);
    EXPECT_EQ(run_on(Command::per, "1 2\n1\n", 1, false, 3u).code, cli::exit_usage);
}

TEST(Run, PccOnOddCycleIsZero)
{
    const Outcome r = run_on(Command::pcc, kTriangle, 4, true);
    EXPECT_NE(r.out.find("value=0000000000\n"), std::string::npos) << r.out;
}

TEST(Run, OracleShortest)
{
    EXPECT_EQ(run_on(Command::oracle_shortest, kFourCycle, 0).out.substr(0, 21), "SHORTEST_EVEN_CYCLE 4");
    EXPECT_EQ(run_on(Command::oracle_shortest, "13 0\n", 0).code, cli::exit_usage);
}

TEST(Run, ExitCodes)
{
    Outcome r = run_on(Command::shortest, "2 2\n1 2\n1 2", 0);
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

    RunConfig missing;
    missing.input = "/nonexistent/graph.txt";
    missing.seed = 0;
    std::istringstream in;
    std::ostringstream out, err;
    EXPECT_EQ(cli::run(missing, in, out, err), cli::exit_usage);

    EXPECT_EQ(run_on(Command::shortest, "3 0\n", 0, false, 64u).code, cli::exit_ok);
}

TEST(Run, Selftest)
{
    const Outcome r = run_on(Command::selftest, "", 7, true);
    EXPECT_EQ(r.code, cli::exit_ok) << r.out;
    EXPECT_NE(r.out.find("result=PASS\n"), std::string::npos);
    EXPECT_NE(r.out.find("failed=0\n"), std::string::npos);
}

TEST(CommandNames, RoundTrip)
{
    EXPECT_EQ(cli::command_from_name("oracle-shortest"), Command::oracle_shortest);
    EXPECT_FALSE(cli::command_from_name("bogus"));
}
