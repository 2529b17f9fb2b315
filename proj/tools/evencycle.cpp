// Command-line front end: shortest even cycle, even-cycle detection, and the
// algebraic primitives behind them.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "evencycle/cli.hpp"

namespace {

constexpr const char* kFooter = R"(Input formats:
  graph   first line "n m", then m lines "u v" (arc u -> v, vertices 1..n).
          Lines starting with '#' are comments; self-loops are dropped.
  matrix  first line "n d", then n rows of n entries over Z_4[x]/<g4>, each
          entry a string of at most d digits 0-3, highest degree first.
  Use "-" as the path to read stdin.

Exit status: 0 success, 1 internal invariant failure, 2 parse or usage error.

Recovering an actual cycle: if `shortest` reports k, try deleting each arc in
turn and keep the deletion whenever `shortest` still reports k. What remains is
a single cycle of length k. A rerun can only err by missing k, which at worst
keeps a superfluous arc; retesting the kept arcs with fresh seeds removes it.)";

}  // namespace

int main(int argc, char** argv)
{
    using evencycle::cli::Command;

    CLI::App app{"Shortest even directed cycle via parity cycle cover enumeration"};
    app.footer(kFooter);
    app.require_subcommand(1);

    evencycle::cli::RunConfig config;
    std::uint64_t seed = 0;
    unsigned field_degree = 0;
    unsigned repeats = 0;

    struct Subcommand {
        const char* name;
        const char* help;
        bool takes_input;
    };
    const Subcommand subcommands[] = {
        {"shortest", "length of a shortest even cycle (randomized, one-sided)", true},
        {"detect", "whether an even cycle exists (randomized, no false positives)", true},
        {"per", "permanent of a matrix over E_{4^d}", true},
        {"det", "determinant of a matrix over E_{4^d}", true},
        {"pcc", "parity cycle cover enumerator pcc_{n-1} at random weights", true},
        {"oracle-shortest", "brute-force shortest even cycle (n <= 12)", true},
        {"selftest", "run oracle-equivalence checks", false},
    };

    for (const Subcommand& s : subcommands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.takes_input)
            sub->add_option("input", config.input, "input file, or - for stdin")->required();
        sub->add_option("--seed", seed, "64-bit seed (default: from entropy, always echoed)");
        sub->add_option("--field-degree", field_degree, "minimum extension degree d of F_{2^d}")
            ->check(CLI::Range(1u, 64u));
        sub->add_option("--repeats", repeats, "independent evaluations for detect")->check(CLI::PositiveNumber);
        sub->add_flag("--machine", config.machine, "key=value output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : evencycle::cli::exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    config.command = *evencycle::cli::command_from_name(chosen->get_name());
    if (chosen->count("--seed") > 0)
        config.seed = seed;
    if (chosen->count("--field-degree") > 0)
        config.field_degree = field_degree;
    if (chosen->count("--repeats") > 0)
        config.repeats = repeats;

    return evencycle::cli::run(config, std::cin, std::cout, std::cerr);
}
