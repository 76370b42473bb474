#include <chrono>

#include "cli.hpp"
#include "tribkit/matrix_seq.hpp"

namespace tribkit::cli {

std::vector<BenchStrategy> default_strategies() {
    return {
        {"iterate", false,
         [](Index n, hp::Bits, OpCounter& ops) { return term(SequenceKind::Tribonacci, n, &ops); }},
        {"matpow", false, [](Index n, hp::Bits, OpCounter& ops) { return trib_fast(n, &ops); }},
        {"binet", true,
         [](Index n, hp::Bits bits, OpCounter& ops) {
             return binet_trib(n, compute_roots(bits), &ops.multiplications);
         }},
    };
}

namespace {

hp::Bits precision_for(const BenchStrategy& s, Index n, hp::Bits requested) {
    if (!s.uses_precision) return 0;
    return std::max(requested, suggested_precision(n + 1));
}

}  // namespace

BenchRun run_bench(std::span<const Index> ns, std::span<const BenchStrategy> strategies, hp::Bits precision,
                   int repeat) {
    using clock = std::chrono::steady_clock;
    BenchRun run;
    if (repeat < 1) repeat = 1;

    // Warm-up pass doubles as the agreement check.
    for (Index n : ns) {
        BigInt reference;
        const BenchStrategy* ref = nullptr;
        for (const auto& s : strategies) {
            OpCounter scratch;
            BigInt v = s.evaluate(n, precision_for(s, n, precision), scratch);
            if (!ref) {
                reference = std::move(v);
                ref = &s;
            } else if (v != reference) {
                run.mismatches.push_back({n, s.name, ref->name});
            }
        }
    }
    if (!run.agree()) return run;

    for (Index n : ns) {
        for (const auto& s : strategies) {
            BenchResult row;
            row.strategy = s.name;
            row.n = n;
            row.precision = precision_for(s, n, precision);
            BigInt v;
            const auto start = clock::now();
            for (int r = 0; r < repeat; ++r) {
                OpCounter ops;
                v = s.evaluate(n, row.precision, ops);
                row.ops = ops;
            }
            row.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count() / repeat;
            row.digits = mpz_sizeinbase(v.get_mpz_t(), 10);
            run.rows.push_back(std::move(row));
        }
    }
    return run;
}

}  // namespace tribkit::cli
