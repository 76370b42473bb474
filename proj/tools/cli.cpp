#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tribkit/errors.hpp"
#include "tribkit/identities.hpp"
#include "tribkit/matrix_seq.hpp"
#include "tribkit/series.hpp"

namespace tribkit::cli {

using nlohmann::json;

hp::Bits default_precision() {
    if (const char* env = std::getenv("TRIBKIT_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 64) return static_cast<hp::Bits>(v);
    }
    return hp::kDefaultPrecision;
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<SeriesKind> parse_kind(const std::string& s) {
    if (s == "T") return SeriesKind::Tribonacci;
    if (s == "K") return SeriesKind::TribonacciLucas;
    if (s == "TM") return SeriesKind::TribMatrix;
    if (s == "KM") return SeriesKind::LucasMatrix;
    return std::nullopt;
}

SeriesKind require_kind(const std::string& s) {
    if (auto k = parse_kind(s)) return *k;
    throw UsageError("unknown sequence kind '" + s + "' (expected T, K, TM or KM)");
}

SequenceKind scalar_of(SeriesKind k) {
    return (k == SeriesKind::Tribonacci || k == SeriesKind::TribMatrix) ? SequenceKind::Tribonacci
                                                                        : SequenceKind::TribonacciLucas;
}

MatrixKind matrix_of(SeriesKind k) {
    return scalar_of(k) == SequenceKind::Tribonacci ? MatrixKind::TribMatrix : MatrixKind::LucasMatrix;
}

void print_matrix_plain(std::ostream& out, const Mat3& m) { out << m.to_string() << '\n'; }

void print_matrix_csv_rows(std::ostream& out, const std::string& prefix, const Mat3& m) {
    for (std::size_t i = 0; i < 3; ++i) {
        out << prefix << (i + 1) << ',' << m(i, 0).get_str() << ',' << m(i, 1).get_str() << ','
            << m(i, 2).get_str() << '\n';
    }
}

struct Globals {
    std::string format = "plain";
    std::optional<long> precision;
    unsigned jobs = 1;

    OutputFormat output() const {
        if (format == "json") return OutputFormat::Json;
        if (format == "csv") return OutputFormat::Csv;
        return OutputFormat::Plain;
    }
    hp::Bits bits() const {
        if (precision) {
            if (*precision < 64) throw UsageError("--precision must be at least 64 bits");
            return static_cast<hp::Bits>(*precision);
        }
        return default_precision();
    }
};

// --- term ------------------------------------------------------------------

int cmd_term(const Globals& g, const std::string& kind_s, Index n, const std::string& strategy,
             std::ostream& out) {
    const SeriesKind kind = require_kind(kind_s);
    if (is_matrix(kind)) throw UsageError("term takes a scalar kind (T or K); use 'matrix' for TM/KM");
    const SequenceKind sk = scalar_of(kind);

    BigInt v;
    hp::Bits used = 0;
    if (strategy == "iterate") {
        v = term(sk, n);
    } else if (strategy == "matpow") {
        v = sk == SequenceKind::Tribonacci ? trib_fast(n) : k_matrix(n, KStrategy::FromT).scalar();
    } else if (strategy == "binet") {
        used = g.bits();
        v = sk == SequenceKind::Tribonacci ? binet_trib(n, used) : binet_lucas(n, used);
    } else {
        throw UsageError("unknown strategy '" + strategy + "' (expected iterate, matpow or binet)");
    }

    switch (g.output()) {
        case OutputFormat::Plain: out << v.get_str() << '\n'; break;
        case OutputFormat::Json: {
            json j{{"kind", kind_s}, {"n", n}, {"strategy", strategy}, {"value", v.get_str()}};
            if (used) j["precision"] = used;
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "kind,n,strategy,value\n" << kind_s << ',' << n << ',' << strategy << ',' << v.get_str() << '\n';
            break;
    }
    return kOk;
}

// --- matrix ----------------------------------------------------------------

int cmd_matrix(const Globals& g, const std::string& kind_s, Index n, std::ostream& out) {
    const SeriesKind kind = require_kind(kind_s);
    const Mat3 m = seq_matrix(matrix_of(kind), n);
    switch (g.output()) {
        case OutputFormat::Plain: print_matrix_plain(out, m); break;
        case OutputFormat::Json:
            out << json{{"kind", kind_s}, {"n", n}, {"matrix", to_json(m)}}.dump() << '\n';
            break;
        case OutputFormat::Csv:
            out << "row,col1,col2,col3\n";
            print_matrix_csv_rows(out, "", m);
            break;
    }
    return kOk;
}

// --- sum -------------------------------------------------------------------

int cmd_sum(const Globals& g, const std::string& kind_s, Index m, Index j, Index n, bool check,
            std::ostream& out, std::ostream& err) {
    const SumSpec spec{require_kind(kind_s), m, j, n};
    try {
        validate(spec);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const Value v = partial_sum(spec);
    std::optional<bool> agrees;
    if (check) agrees = (partial_sum_bruteforce(spec) == v);

    switch (g.output()) {
        case OutputFormat::Plain:
            if (const auto* b = std::get_if<BigInt>(&v))
                out << b->get_str() << '\n';
            else
                print_matrix_plain(out, std::get<Mat3>(v));
            if (agrees) out << "check: " << (*agrees ? "closed form agrees with direct sum" : "MISMATCH") << '\n';
            break;
        case OutputFormat::Json: {
            json jv{{"kind", kind_s}, {"m", m}, {"j", j}, {"n", n}, {"value", to_json(v)}};
            if (agrees) jv["check"] = *agrees;
            out << jv.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "kind,m,j,n,value" << (agrees ? ",check" : "") << '\n';
            out << kind_s << ',' << m << ',' << j << ',' << n << ",\"" << to_string(v) << '"';
            if (agrees) out << ',' << (*agrees ? "true" : "false");
            out << '\n';
            break;
    }
    if (agrees && !*agrees) {
        err << "sum: closed form and direct sum disagree\n";
        return kMismatch;
    }
    return kOk;
}

// --- gf --------------------------------------------------------------------

int cmd_gf(const Globals& g, const std::string& kind_s, Index count, std::ostream& out) {
    const SeriesKind kind = require_kind(kind_s);
    if (count < 1) throw UsageError("count must be at least 1");

    if (!is_matrix(kind)) {
        const auto c = gf_coeffs(scalar_of(kind), count);
        switch (g.output()) {
            case OutputFormat::Plain:
                for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i].get_str();
                out << '\n';
                break;
            case OutputFormat::Json: {
                json arr = json::array();
                for (const auto& v : c) arr.push_back(v.get_str());
                out << json{{"kind", kind_s}, {"count", count}, {"coefficients", arr}}.dump() << '\n';
                break;
            }
            case OutputFormat::Csv:
                out << "index,value\n";
                for (std::size_t i = 0; i < c.size(); ++i) out << i << ',' << c[i].get_str() << '\n';
                break;
        }
        return kOk;
    }

    const auto c = gf_matrix_coeffs(matrix_of(kind), count);
    switch (g.output()) {
        case OutputFormat::Plain:
            for (const auto& m : c) print_matrix_plain(out, m);
            break;
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& m : c) arr.push_back(to_json(m));
            out << json{{"kind", kind_s}, {"count", count}, {"coefficients", arr}}.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "index,row,col1,col2,col3\n";
            for (std::size_t i = 0; i < c.size(); ++i) print_matrix_csv_rows(out, std::to_string(i) + ",", c[i]);
            break;
    }
    return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const Globals& g, const std::vector<std::string>& ids, const std::string& profile_s,
               bool timing, std::ostream& out) {
    const auto profile = parse_profile(profile_s);
    if (!profile) throw UsageError("unknown profile '" + profile_s + "' (expected quick, standard or deep)");

    VerifyOptions opts;
    opts.jobs = g.jobs;
    std::vector<VerifyReport> reports;
    if (ids.empty()) {
        reports = verify_all(*profile, opts);
    } else {
        for (const auto& id : ids) {
            if (!find_identity(id)) throw UnknownIdentity("unknown identity: " + id);
        }
        EvalContext ctx;
        for (const auto& id : ids) reports.push_back(verify(*find_identity(id), bounds_for(*profile), ctx, opts));
    }

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();

    switch (g.output()) {
        case OutputFormat::Plain:
            out << format_table(reports, timing);
            out << (pass ? "ALL PASS" : "FAILURES") << " (" << reports.size() << " identities, profile "
                << to_string(*profile) << ")\n";
            break;
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(to_json(r, timing));
            out << json{{"profile", to_string(*profile)}, {"pass", pass}, {"reports", arr}}.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "id,status,cases,failures" << (timing ? ",elapsed_ms" : "") << '\n';
            for (const auto& r : reports) {
                out << r.id << ',' << (r.pass() ? "pass" : "fail") << ',' << r.cases << ',' << r.failures.size();
                if (timing) out << ',' << r.elapsed.count();
                out << '\n';
            }
            break;
    }
    return pass ? kOk : 1;
}

// --- bench -----------------------------------------------------------------

int cmd_bench(const Globals& g, const std::vector<Index>& ns, const std::vector<std::string>& names, int repeat,
              const std::vector<BenchStrategy>& pool, std::ostream& out, std::ostream& err) {
    if (ns.empty()) throw UsageError("bench needs at least one --n value");
    std::vector<BenchStrategy> chosen;
    for (const auto& name : names) {
        auto it = std::find_if(pool.begin(), pool.end(), [&](const BenchStrategy& s) { return s.name == name; });
        if (it == pool.end()) throw UsageError("unknown strategy '" + name + "'");
        chosen.push_back(*it);
    }
    if (chosen.empty()) throw UsageError("bench needs at least one strategy");

    const BenchRun run = run_bench(ns, chosen, g.bits(), repeat);
    if (!run.agree()) {
        err << "bench: strategies disagree\n";
        json arr = json::array();
        for (const auto& mm : run.mismatches) {
            err << "  n=" << mm.n << ": " << mm.strategy << " differs from " << mm.reference_strategy << '\n';
            arr.push_back({{"n", mm.n}, {"strategy", mm.strategy}, {"reference", mm.reference_strategy}});
        }
        if (g.output() == OutputFormat::Json) out << json{{"agreement", false}, {"mismatches", arr}}.dump() << '\n';
        return kMismatch;
    }

    switch (g.output()) {
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& r : run.rows) {
                json row{{"strategy", r.strategy},
                         {"n", r.n},
                         {"wall_ms", r.wall_ms},
                         {"matrix_multiplications", r.ops.matrix_multiplications},
                         {"additions", r.ops.additions},
                         {"multiplications", r.ops.multiplications},
                         {"digits", r.digits}};
                if (r.precision) row["precision"] = r.precision;
                arr.push_back(std::move(row));
            }
            out << json{{"agreement", true}, {"results", arr}}.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
        case OutputFormat::Plain:
            out << "strategy,n,wall_ms,matrix_multiplications,additions,multiplications,precision,digits\n";
            for (const auto& r : run.rows) {
                out << r.strategy << ',' << r.n << ',' << r.wall_ms << ',' << r.ops.matrix_multiplications << ','
                    << r.ops.additions << ',' << r.ops.multiplications << ',' << r.precision << ',' << r.digits
                    << '\n';
            }
            break;
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::vector<BenchStrategy>& strategies) {
    CLI::App app{"Exact Tribonacci / Tribonacci-Lucas numbers and matrix sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--precision", g.precision, "Binary precision for Binet evaluation (default 256, or $TRIBKIT_PRECISION)");
    app.add_option("--jobs", g.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

    std::string kind;
    Index n = 0, m = 0, j = 0, count = 0;

    auto* term = app.add_subcommand("term", "Print T(n) or K(n)");
    std::string strategy = "iterate";
    term->add_option("kind", kind, "T or K")->required();
    term->add_option("n", n, "Index (may be negative)")->required();
    term->add_option("--strategy", strategy, "iterate, matpow or binet");

    auto* matrix = app.add_subcommand("matrix", "Print TM(n) or KM(n)");
    matrix->add_option("kind", kind, "T or K (TM / KM accepted)")->required();
    matrix->add_option("n", n, "Index (may be negative)")->required();

    auto* sum = app.add_subcommand("sum", "Closed-form sum of X(mi+j) for i < n");
    bool check = false;
    sum->add_option("kind", kind, "T, K, TM or KM")->required();
    sum->add_option("m", m)->required();
    sum->add_option("j", j)->required();
    sum->add_option("n", n)->required();
    sum->add_flag("--check", check, "Also sum directly and compare");

    auto* gf = app.add_subcommand("gf", "Generating-function coefficients");
    gf->add_option("kind", kind, "T, K, TM or KM")->required();
    gf->add_option("count", count)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Verify registered identities");
    std::vector<std::string> ids;
    std::string profile = "standard";
    bool no_timing = false;
    verify_cmd->add_option("ids", ids, "Identity ids (default: all)");
    verify_cmd->add_option("--profile", profile, "quick, standard or deep");
    verify_cmd->add_flag("--no-timing", no_timing, "Omit elapsed times so output is reproducible");

    auto* bench = app.add_subcommand("bench", "Time nth-term strategies for T(n)");
    std::vector<Index> bench_n;
    std::vector<std::string> bench_strategies{"iterate", "matpow"};
    int repeat = 1;
    bench->add_option("--n", bench_n, "Indices, comma separated")->delimiter(',')->required();
    bench->add_option("--strategies", bench_strategies, "Strategies, comma separated")->delimiter(',');
    bench->add_option("--repeat", repeat, "Timed repetitions per cell")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*term) return cmd_term(g, kind, n, strategy, out);
        if (*matrix) return cmd_matrix(g, kind, n, out);
        if (*sum) return cmd_sum(g, kind, m, j, n, check, out, err);
        if (*gf) return cmd_gf(g, kind, count, out);
        if (*verify_cmd) return cmd_verify(g, ids, profile, !no_timing, out);
        if (*bench) return cmd_bench(g, bench_n, bench_strategies, repeat, strategies, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PrecisionExhausted& e) {
        err << "error: " << e.what() << " (raise --precision)\n";
        return kPrecision;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<BenchStrategy>& strategies) {
    std::vector<const char*> argv{"tribkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err, strategies);
}

}  // namespace tribkit::cli
