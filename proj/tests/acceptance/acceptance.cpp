// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "tribkit/binet.hpp"
#include "tribkit/core_numbers.hpp"
#include "tribkit/errors.hpp"
#include "tribkit/identities.hpp"
#include "tribkit/matrix_seq.hpp"
#include "tribkit/series.hpp"

using namespace tribkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// A criterion body returns "" on success or a description of the first problem.
using Body = std::function<std::string(std::ostringstream& detail)>;

bool criterion(int number, const std::string& title, const Body& body) {
    std::ostringstream detail;
    std::string problem;
    const auto t0 = Clock::now();
    try {
        problem = body(detail);
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(t0);
    const bool ok = problem.empty();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " [" << secs << " s";
    if (!detail.str().empty()) std::cout << "; " << detail.str();
    std::cout << "]";
    if (!ok) std::cout << " -- " << problem;
    std::cout << std::endl;
    return ok;
}

template <class A, class B>
std::string differs(const std::string& what, const A& got, const B& want) {
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    return s.str();
}

const std::array<long, 13> kTrib{0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504};
const std::array<long, 13> kTribNeg{0, 0, 1, -1, 0, 2, -3, 1, 4, -8, 5, 7, -20};
const std::array<long, 13> kLucas{3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499};
const std::array<long, 13> kLucasNeg{3, -1, -1, 5, -5, -1, 11, -15, 3, 23, -41, 21, 43};

}  // namespace

int main() {
    std::cout.precision(3);
    std::cout << std::fixed;
    int failed = 0;
    auto tally = [&](bool ok) { failed += ok ? 0 : 1; };

    tally(criterion(1, "golden tables of T and K for n in 0..12 and -12..0", [](std::ostringstream& d) {
        const auto t0 = Clock::now();
        int checked = 0;
        for (Index i = 0; i <= 12; ++i) {
            if (trib(i) != kTrib[i]) return differs("T(" + std::to_string(i) + ")", trib(i), kTrib[i]);
            if (trib(-i) != kTribNeg[i]) return differs("T(" + std::to_string(-i) + ")", trib(-i), kTribNeg[i]);
            if (lucas_trib(i) != kLucas[i]) return differs("K(" + std::to_string(i) + ")", lucas_trib(i), kLucas[i]);
            if (lucas_trib(-i) != kLucasNeg[i])
                return differs("K(" + std::to_string(-i) + ")", lucas_trib(-i), kLucasNeg[i]);
            checked += 4;
        }
        d << checked << " values";
        if (seconds_since(t0) >= 1.0) return std::string("took longer than 1 s");
        return std::string();
    }));

    tally(criterion(2, "initial matrices TM(0..2), KM(0..2)", [](std::ostringstream& d) {
        const std::array<Mat3, 3> tm{Mat3::identity(), Mat3{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}},
                                     Mat3{{2, 2, 1}, {1, 1, 1}, {1, 0, 0}}};
        const std::array<Mat3, 3> km{Mat3{{1, 2, 3}, {3, -2, -1}, {-1, 4, -1}},
                                     Mat3{{3, 4, 1}, {1, 2, 3}, {3, -2, -1}},
                                     Mat3{{7, 4, 3}, {3, 4, 1}, {1, 2, 3}}};
        for (Index n = 0; n < 3; ++n) {
            if (t_matrix(n) != tm[n]) return differs("TM(" + std::to_string(n) + ")", t_matrix(n).to_string(), tm[n].to_string());
            if (k_matrix(n) != km[n]) return differs("KM(" + std::to_string(n) + ")", k_matrix(n).to_string(), km[n].to_string());
        }
        d << "6 matrices";
        return std::string();
    }));

    tally(criterion(3, "matrix strategies agree on [-200,200]; trib_fast = trib on [0,5000]", [](std::ostringstream& d) {
        const auto t0 = Clock::now();
        for (Index n = -200; n <= 200; ++n) {
            const Mat3 t = t_matrix(n, TStrategy::ClosedForm);
            if (t_matrix(n, TStrategy::Iterate) != t) return "TM iterate vs closed form at n=" + std::to_string(n);
            if (n >= 0 && t_matrix(n, TStrategy::MatPow) != t) return "TM matpow vs closed form at n=" + std::to_string(n);
            const Mat3 k = k_matrix(n, KStrategy::ClosedForm);
            if (k_matrix(n, KStrategy::Iterate) != k) return "KM iterate vs closed form at n=" + std::to_string(n);
            if (n >= 0 && k_matrix(n, KStrategy::FromT) != k) return "KM matpow vs closed form at n=" + std::to_string(n);
        }
        for (Index n = 0; n <= 5000; ++n)
            if (trib_fast(n) != trib(n)) return "trib_fast differs at n=" + std::to_string(n);
        const double secs = seconds_since(t0);
        d << "802 matrices, 5001 terms";
        if (secs >= 30.0) return std::string("took longer than 30 s");
        return std::string();
    }));

    tally(criterion(4, "identity suite, standard profile", [](std::ostringstream& d) {
        const auto t0 = Clock::now();
        const auto reports = verify_all(Profile::Standard, {4, 50});
        std::uint64_t cases = 0;
        for (const auto& r : reports) {
            cases += r.cases;
            if (!r.pass()) {
                const auto& f = r.failures.front();
                return r.id + " failed" + (f.error.empty() ? ": " + f.left + " != " + f.right : ": " + f.error);
            }
        }
        d << reports.size() << " identities, " << cases << " cases";
        if (reports.size() < 28) return std::string("fewer than 28 identities registered");
        if (seconds_since(t0) >= 60.0) return std::string("took longer than 60 s");
        return std::string();
    }));

    tally(criterion(5, "Binet recovery at 256 bits and constant algebra at 1e-50", [](std::ostringstream& d) {
        const auto roots = compute_roots(256);
        for (Index n = -60; n <= 60; ++n) {
            if (binet_trib(n, roots) != trib(n)) return "binet_trib at n=" + std::to_string(n);
            if (binet_lucas(n, roots) != lucas_trib(n)) return "binet_lucas at n=" + std::to_string(n);
        }
        const auto constants = binet_constants(256);
        for (Index n = -30; n <= 30; ++n) {
            if (binet_matrix(MatrixKind::TribMatrix, n, constants) != t_matrix(n))
                return "binet_matrix(TM) at n=" + std::to_string(n);
            if (binet_matrix(MatrixKind::LucasMatrix, n, constants) != k_matrix(n))
                return "binet_matrix(KM) at n=" + std::to_string(n);
        }
        const auto rep = check_constant_algebra(256, 1e-50);
        double worst = 0;
        for (const auto& c : rep.checks) worst = std::max(worst, c.deviation);
        d << rep.checks.size() << " algebra relations, worst deviation " << std::scientific << worst << std::fixed;
        if (!rep.pass) {
            for (const auto& c : rep.checks)
                if (!c.pass) return "constant algebra relation " + c.relation + " failed";
        }
        return std::string();
    }));

    tally(criterion(6, "progression sums match direct sums; prefix specialisations", [](std::ostringstream& d) {
        std::uint64_t specs = 0;
        for (auto kind : kSeriesKinds)
            for (Index m = 1; m <= 10; ++m)
                for (Index j = 0; j < m; ++j)
                    for (Index n = 1; n <= 40; ++n) {
                        const SumSpec s{kind, m, j, n};
                        Value closed;
                        try {
                            closed = partial_sum(s);
                        } catch (const DivisibilityViolation& e) {
                            return std::string("divisibility violation: ") + e.what();
                        }
                        if (closed != partial_sum_bruteforce(s))
                            return std::string(to_string(kind)) + " m=" + std::to_string(m) + " j=" + std::to_string(j) +
                                   " n=" + std::to_string(n);
                        ++specs;
                    }
        for (Index n = 1; n <= 100; ++n) {
            if (prefix_sum(SequenceKind::Tribonacci, n) != (trib(n + 2) - trib(n) - 1) / 2)
                return "T prefix sum at n=" + std::to_string(n);
            if (prefix_sum(SequenceKind::TribonacciLucas, n) != (lucas_trib(n + 2) - lucas_trib(n)) / 2)
                return "K prefix sum at n=" + std::to_string(n);
            const SumSpec t{SeriesKind::Tribonacci, 1, 0, n};
            if (std::get<BigInt>(partial_sum(t)) != prefix_sum(SequenceKind::Tribonacci, n))
                return "T partial_sum vs prefix at n=" + std::to_string(n);
        }
        d << specs << " sums, 0 divisibility violations";
        return std::string();
    }));

    tally(criterion(7, "generating functions: 64 coefficients, KM numerator entries", [](std::ostringstream& d) {
        for (auto kind : kSequenceKinds) {
            const auto c = gf_coeffs(kind, 64);
            for (Index i = 0; i < 64; ++i)
                if (c[i] != term(kind, i)) return std::string(to_string(kind)) + " coefficient " + std::to_string(i);
        }
        for (auto kind : kMatrixKinds) {
            const auto c = gf_matrix_coeffs(kind, 64);
            for (Index i = 0; i < 64; ++i)
                if (c[i] != iterate_matrix(kind, i))
                    return std::string(to_string(kind)) + " coefficient " + std::to_string(i);
        }
        const auto km = matrix_numerator_from_initial(MatrixKind::LucasMatrix);
        auto cell = [&](std::size_t r, std::size_t c) {
            return std::array<BigInt, 3>{km[0](r, c), km[1](r, c), km[2](r, c)};
        };
        using Poly = std::array<BigInt, 3>;
        if (cell(0, 0) != Poly{1, 2, 3}) return std::string("cell (1,1) is not 1+2x+3x^2");
        if (cell(2, 1) != Poly{4, -6, 0}) return std::string("cell (3,2) is not 4-6x");
        if (cell(2, 2) != Poly{-1, 0, 5}) return std::string("cell (3,3) is not -1+5x^2");
        if (km != matrix_numerator(MatrixKind::LucasMatrix)) return std::string("KM numerator differs from printed form");
        d << "4 x 64 coefficients, 3 numerator entries";
        return std::string();
    }));

    tally(criterion(8, "trib_fast(1e6) < 5 s with O(log n) multiplications; matpow beats iterate", [](std::ostringstream& d) {
        const Index n = 1'000'000;
        OpCounter ops;
        const auto t0 = Clock::now();
        const BigInt v = trib_fast(n, &ops);
        const double secs = seconds_since(t0);
        const auto bound = 2 * static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n)))) + 2;
        d << "trib_fast " << secs << " s, " << ops.matrix_multiplications << " matrix mults (bound " << bound << ")";
        if (secs >= 5.0) return std::string("trib_fast(1e6) took longer than 5 s");
        if (ops.matrix_multiplications > bound) return std::string("too many matrix multiplications");

        const std::array<Index, 1> ns{n};
        auto pool = cli::default_strategies();
        pool.resize(2);  // iterate, matpow
        const auto run = cli::run_bench(ns, pool, hp::kDefaultPrecision, 1);
        if (!run.agree()) return std::string("bench strategies disagree at 1e6");
        const auto& it = run.rows[0];
        const auto& mp = run.rows[1];
        d << "; bench iterate " << it.wall_ms << " ms, matpow " << mp.wall_ms << " ms";
        if (it.strategy != "iterate" || mp.strategy != "matpow") return std::string("unexpected bench rows");
        if (!(mp.wall_ms < it.wall_ms)) return std::string("matpow did not beat iterate");
        if (mpz_sizeinbase(v.get_mpz_t(), 10) != mp.digits) return std::string("digit count disagrees");
        return std::string();
    }));

    tally(criterion(9, "negative controls: mutated identity fails, bench mismatch exits 4", [](std::ostringstream& d) {
        IdentityRecord bad = *find_identity("THM18a");
        bad.id = "THM18a-mutated";
        bad.evaluate = [](EvalContext& c, std::span<const Index> i) {
            Mat3 rhs = c.tm(i[0] + i[1]);
            if (i[0] == 3 && i[1] == 2) rhs += Mat3::identity();
            return std::vector<Equality>{{c.tm(i[0]) * c.tm(i[1]), rhs}};
        };
        EvalContext ctx;
        const auto rep = verify(bad, bounds_for(Profile::Quick), ctx);
        if (rep.pass()) return std::string("mutated evaluator was not detected");
        if (rep.failures.size() != 1 || rep.failures[0].indices != IndexTuple{3, 2})
            return std::string("mutated evaluator reported the wrong cases");

        auto pool = cli::default_strategies();
        pool.push_back({"off-by-one", false, [](Index k, hp::Bits, OpCounter&) -> BigInt { return trib(k) + 1; }});
        std::ostringstream out, err;
        const int code = cli::run({"bench", "--n", "10,100", "--strategies", "iterate,off-by-one"}, out, err, pool);
        d << "verify reported " << rep.failures.size() << " failure, bench exit " << code;
        if (code != cli::kMismatch) return "bench exit code " + std::to_string(code) + ", expected 4";
        if (err.str().find("n=100") == std::string::npos) return std::string("bench mismatch report missing");
        return std::string();
    }));

    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
