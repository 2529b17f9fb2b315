#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evencycle/digraph.hpp"
#include "evencycle/enumerators.hpp"
#include "evencycle/errors.hpp"
#include "evencycle/io.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/perdet.hpp"
#include "evencycle/random_instances.hpp"
#include "evencycle/selftest.hpp"
#include "evencycle/shortest_even_cycle.hpp"

namespace evencycle::cli {

enum class Command { shortest, detect, per, det, pcc, oracle_shortest, selftest };

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_usage = 2 };

struct RunConfig {
    Command command = Command::shortest;
    std::string input = "-";  // "-" reads stdin
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> field_degree;
    std::optional<unsigned> repeats;
    bool machine = false;
};

inline std::optional<Command> command_from_name(const std::string& name)
{
    if (name == "shortest")
        return Command::shortest;
    if (name == "detect")
        return Command::detect;
    if (name == "per")
        return Command::per;
    if (name == "det")
        return Command::det;
    if (name == "pcc")
        return Command::pcc;
    if (name == "oracle-shortest")
        return Command::oracle_shortest;
    if (name == "selftest")
        return Command::selftest;
    return std::nullopt;
}

inline std::uint64_t entropy_seed()
{
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// Collects facts and prints them either as key=value lines or as a headline
// plus a trailing context line.
class Report {
public:
    Report(bool machine, std::ostream& out) : machine_(machine), out_(out) {}

    void headline(const std::string& text) { headline_ = text; }
    void fact(const std::string& key, const std::string& value) { facts_.emplace_back(key, value); }

    void flush()
    {
        if (machine_) {
            for (const auto& [k, v] : facts_)
                out_ << k << '=' << v << '\n';
            return;
        }
        out_ << headline_ << '\n';
        std::string context;
        for (const auto& [k, v] : facts_) {
            if (k == "result" || k == "length" || k == "value")
                continue;
            context += (context.empty() ? "# " : " ") + k + '=' + v;
        }
        if (!context.empty())
            out_ << context << '\n';
    }

private:
    bool machine_;
    std::ostream& out_;
    std::string headline_;
    std::vector<std::pair<std::string, std::string>> facts_;
};

inline void field_facts(Report& r, const std::optional<Field>& f, unsigned degree)
{
    r.fact("d", std::to_string(degree));
    r.fact("g2", f ? f->modulus().to_string() : "none");
}

}  // namespace detail

/// Executes one command. Returns the process exit status; diagnostics go to err.
inline int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
    const std::uint64_t seed = config.seed.value_or(entropy_seed());
    detail::Report report(config.machine, out);
    auto command_fact = [&](const char* name) {
        report.fact("command", name);
        report.fact("seed", std::to_string(seed));
    };

    try {
        switch (config.command) {
        case Command::shortest: {
            const Digraph g = parse_graph(detail::read_input(config.input, in));
            const ShortestEvenCycleRun r = shortest_even_cycle(g, seed, config.field_degree);
            command_fact("shortest");
            report.fact("n", std::to_string(g.vertex_count()));
            detail::field_facts(report, r.field, r.field_degree);
            if (r.length) {
                report.headline("SHORTEST_EVEN_CYCLE " + std::to_string(*r.length));
                report.fact("result", "SHORTEST_EVEN_CYCLE");
                report.fact("length", std::to_string(*r.length));
            } else {
                report.headline("NO_EVEN_CYCLE");
                report.fact("result", "NO_EVEN_CYCLE");
            }
            break;
        }
        case Command::detect: {
            const Digraph g = parse_graph(detail::read_input(config.input, in));
            const unsigned repeats = config.repeats.value_or(1);
            const EvenCycleDetection r = has_even_cycle(g, seed, repeats, config.field_degree);
            command_fact("detect");
            report.fact("n", std::to_string(g.vertex_count()));
            report.fact("repeats", std::to_string(repeats));
            detail::field_facts(report, r.field, r.field_degree);
            report.headline(std::string("EVEN_CYCLE ") + (r.found ? "yes" : "no"));
            report.fact("result", r.found ? "yes" : "no");
            break;
        }
        case Command::per:
        case Command::det: {
            const MatrixText text = parse_matrix(detail::read_input(config.input, in));
            if (config.field_degree && *config.field_degree != text.d)
                throw UsageError("--field-degree conflicts with the degree in the matrix header");
            Rng rng(seed);
            const Ring ring(make_field(text.d, rng));
            const MatrixE m = to_matrix(ring, text);
            const bool is_per = config.command == Command::per;
            const RingElem value = is_per ? per_e(ring, m) : det_e(ring, m);
            command_fact(is_per ? "per" : "det");
            report.fact("n", std::to_string(m.size()));
            detail::field_facts(report, ring.field(), ring.degree());
            report.fact("value", ring.to_string(value));
            report.headline(std::string(is_per ? "PER " : "DET ") + ring.to_string(value));
            break;
        }
        case Command::pcc: {
            const Digraph g = parse_graph(detail::read_input(config.input, in));
            const unsigned d = algorithm_field_degree(g.vertex_count(), config.field_degree);
            Rng rng(seed);
            const Ring ring(make_field(d, rng));
            const MatrixF a = instances::random_weighted_adjacency(ring.field(), g, rng);
            const FieldElem value = pcc_f(ring, a);
            command_fact("pcc");
            report.fact("n", std::to_string(g.vertex_count()));
            detail::field_facts(report, ring.field(), d);
            report.fact("value", ring.field().to_string(value));
            report.headline("PCC " + ring.field().to_string(value));
            break;
        }
        case Command::oracle_shortest: {
            const Digraph g = parse_graph(detail::read_input(config.input, in));
            const auto k = oracle::brute_shortest_even_cycle(g);
            command_fact("oracle-shortest");
            report.fact("n", std::to_string(g.vertex_count()));
            if (k) {
                report.headline("SHORTEST_EVEN_CYCLE " + std::to_string(*k));
                report.fact("result", "SHORTEST_EVEN_CYCLE");
                report.fact("length", std::to_string(*k));
            } else {
                report.headline("NO_EVEN_CYCLE");
                report.fact("result", "NO_EVEN_CYCLE");
            }
            break;
        }
        case Command::selftest: {
            command_fact("selftest");
            const auto suites = run_selftest(seed);
            bool ok = true;
            std::size_t passed = 0, total = 0;
            for (const SuiteResult& s : suites) {
                ok = ok && s.ok();
                passed += s.passed;
                total += s.total;
                report.fact("suite." + s.name, std::to_string(s.passed) + "/" + std::to_string(s.total));
                if (!config.machine)
                    out << (s.ok() ? "PASS " : "FAIL ") << s.name << ' ' << s.passed << '/' << s.total << '\n';
            }
            report.fact("passed", std::to_string(passed));
            report.fact("failed", std::to_string(total - passed));
            report.fact("result", ok ? "PASS" : "FAIL");
            report.headline(std::string("SELFTEST ") + (ok ? "PASS" : "FAIL"));
            report.flush();
            return ok ? exit_ok : exit_internal;
        }
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvariantError& e) {
        err << "internal invariant failure (seed " << seed << "): " << e.what() << '\n';
        return exit_internal;
    } catch (const DivisionByZero& e) {
        err << "internal invariant failure (seed " << seed << "): " << e.what() << '\n';
        return exit_internal;
    }
    report.flush();
    return exit_ok;
}

}  // namespace evencycle::cli
