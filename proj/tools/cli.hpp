#pragma once

// Command-line front end: term, matrix, sum, gf, verify, bench.
//
// Exit codes: 0 success, 2 usage / parse / constraint error, 3 precision
// exhausted, 4 strategies disagree.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tribkit/binet.hpp"
#include "tribkit/core_numbers.hpp"
#include "tribkit/mat3.hpp"

namespace tribkit::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kPrecision = 3,
    kMismatch = 4,
};

enum class OutputFormat { Plain, Json, Csv };

/// An nth-term evaluator under benchmark. `precision` is only meaningful for
/// strategies that set uses_precision.
struct BenchStrategy {
    std::string name;
    bool uses_precision = false;
    std::function<BigInt(Index n, hp::Bits precision, OpCounter& ops)> evaluate;
};

/// iterate, matpow, binet
std::vector<BenchStrategy> default_strategies();

struct BenchResult {
    std::string strategy;
    Index n = 0;
    double wall_ms = 0;
    OpCounter ops;
    hp::Bits precision = 0;  // 0 when the strategy is exact
    std::size_t digits = 0;
};

struct BenchMismatch {
    Index n;
    std::string strategy;
    std::string reference_strategy;
};

struct BenchRun {
    std::vector<BenchResult> rows;
    std::vector<BenchMismatch> mismatches;
    bool agree() const { return mismatches.empty(); }
};

/// Evaluates every (n, strategy) once as warm-up and to check agreement, then
/// times `repeat` further evaluations. Timing rows are produced only when all
/// strategies agree.
BenchRun run_bench(std::span<const Index> ns, std::span<const BenchStrategy> strategies, hp::Bits precision,
                   int repeat = 1);

/// Precision from TRIBKIT_PRECISION, or the library default.
hp::Bits default_precision();

/// Entry point shared by the binary and the tests. `strategies` is the pool the
/// bench subcommand picks from by name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::vector<BenchStrategy>& strategies = default_strategies());

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<BenchStrategy>& strategies = default_strategies());

}  // namespace tribkit::cli
