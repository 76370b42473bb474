#include "tribkit/identities.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "tribkit/errors.hpp"
#include "tribkit/series.hpp"

namespace tribkit {

std::string_view to_string(Arity a) {
    switch (a) {
        case Arity::N: return "N";
        case Arity::MN: return "MN";
        case Arity::NR: return "NR";
        case Arity::MNR: return "MNR";
    }
    return "?";
}

std::optional<Profile> parse_profile(std::string_view s) {
    if (s == "quick") return Profile::Quick;
    if (s == "standard") return Profile::Standard;
    if (s == "deep") return Profile::Deep;
    return std::nullopt;
}

std::string_view to_string(Profile p) {
    switch (p) {
        case Profile::Quick: return "quick";
        case Profile::Standard: return "standard";
        case Profile::Deep: return "deep";
    }
    return "?";
}

Bounds bounds_for(Profile p) {
    switch (p) {
        case Profile::Quick: return {10, 10, 10};
        case Profile::Standard: return {40, 30, 10};
        case Profile::Deep: return {100, 60, 20};
    }
    return {40, 30, 10};
}

// ---------------------------------------------------------------------------

EvalContext::EvalContext(hp::Bits precision)
    : t_(SequenceKind::Tribonacci), k_(SequenceKind::TribonacciLucas), precision_(precision) {}

Mat3 EvalContext::closed(TermCache& cache, Index n) {
    auto v = cache.range(n - 3, n + 1);
    std::array<BigInt, 5> w;
    std::move(v.begin(), v.end(), w.begin());
    return closed_form(w);
}

Mat3 EvalContext::tm(Index n) { return closed(t_, n); }
Mat3 EvalContext::km(Index n) { return closed(k_, n); }

Value EvalContext::term(SeriesKind kind, Index n) {
    switch (kind) {
        case SeriesKind::Tribonacci: return t(n);
        case SeriesKind::TribonacciLucas: return k(n);
        case SeriesKind::TribMatrix: return tm(n);
        case SeriesKind::LucasMatrix: return km(n);
    }
    throw DomainError("EvalContext::term: unknown kind");
}

const BinetConstants& EvalContext::binet() {
    std::call_once(binet_once_, [&] { binet_ = std::make_unique<BinetConstants>(binet_constants(precision_)); });
    return *binet_;
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const IdentityRecord& r, const Bounds& b) {
    std::ostringstream os;
    os << r.domain << " (symmetric=" << b.symmetric << ", nonneg=" << b.nonneg << ", sum_m=" << b.sum_m
       << ")";
    return os.str();
}

std::vector<Failure> check_cases(const IdentityRecord& record, EvalContext& ctx,
                                 std::span<const IndexTuple> cases, std::size_t max_failures) {
    std::vector<Failure> failures;
    for (const auto& idx : cases) {
        if (failures.size() >= max_failures) break;
        try {
            for (const auto& eq : record.evaluate(ctx, idx)) {
                if (eq.left.index() != eq.right.index() || eq.left != eq.right) {
                    failures.push_back({idx, to_string(eq.left), to_string(eq.right), {}});
                    break;
                }
            }
        } catch (const std::exception& e) {
            failures.push_back({idx, {}, {}, e.what()});
        }
    }
    return failures;
}

}  // namespace

VerifyReport verify(const IdentityRecord& record, const Bounds& bounds, EvalContext& ctx,
                    const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.id = record.id;
    report.anchor = record.anchor();
    report.note = record.note;
    report.bounds = bounds;
    report.grid = describe(record, bounds);

    const std::vector<IndexTuple> cases = record.grid(bounds);
    report.cases = cases.size();

    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(cases.size(), 1));
    if (jobs <= 1) {
        report.failures = check_cases(record, ctx, cases, options.max_failures);
    } else {
        // Contiguous chunks, merged in chunk order, keep failures in index order.
        std::vector<std::vector<Failure>> parts(jobs);
        {
            std::vector<std::jthread> workers;
            const std::size_t chunk = (cases.size() + jobs - 1) / jobs;
            for (std::size_t w = 0; w < jobs; ++w) {
                const std::size_t lo = std::min(cases.size(), w * chunk);
                const std::size_t hi = std::min(cases.size(), lo + chunk);
                workers.emplace_back([&, w, lo, hi] {
                    parts[w] = check_cases(record, ctx, std::span(cases).subspan(lo, hi - lo),
                                           options.max_failures);
                });
            }
        }
        for (auto& p : parts) {
            for (auto& f : p) {
                if (report.failures.size() >= options.max_failures) break;
                report.failures.push_back(std::move(f));
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerifyReport verify(std::string_view id, std::optional<Bounds> overrides, const VerifyOptions& options) {
    const IdentityRecord* record = find_identity(id);
    if (!record) throw UnknownIdentity("unknown identity: " + std::string(id));
    EvalContext ctx;
    return verify(*record, overrides.value_or(bounds_for(Profile::Standard)), ctx, options);
}

std::vector<VerifyReport> verify_all(Profile profile, const VerifyOptions& options) {
    EvalContext ctx;
    const Bounds b = bounds_for(profile);
    std::vector<VerifyReport> out;
    for (const auto& r : registry()) out.push_back(verify(r, b, ctx, options));
    return out;
}

nlohmann::json to_json(const VerifyReport& r, bool include_timing) {
    nlohmann::json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    if (!r.note.empty()) j["note"] = r.note;
    j["bounds"] = {{"symmetric", r.bounds.symmetric}, {"nonneg", r.bounds.nonneg}, {"sum_m", r.bounds.sum_m}};
    j["grid"] = r.grid;
    j["cases"] = r.cases;
    j["status"] = r.pass() ? "pass" : "fail";
    auto failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        nlohmann::json fj;
        fj["indices"] = f.indices;
        if (f.error.empty()) {
            fj["left"] = f.left;
            fj["right"] = f.right;
        } else {
            fj["error"] = f.error;
        }
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    if (include_timing) j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::string format_table(const std::vector<VerifyReport>& reports, bool include_timing) {
    std::ostringstream os;
    os << std::left << std::setw(11) << "ID" << std::setw(7) << "STATUS" << std::right << std::setw(8) << "CASES"
       << std::setw(10) << "FAILURES";
    if (include_timing) os << std::setw(12) << "ELAPSED_MS";
    os << "  ANCHOR\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(11) << r.id << std::setw(7) << (r.pass() ? "PASS" : "FAIL") << std::right
           << std::setw(8) << r.cases << std::setw(10) << r.failures.size();
        if (include_timing) os << std::setw(12) << std::fixed << std::setprecision(1) << r.elapsed.count();
        os << "  " << r.anchor << '\n';
        for (const auto& f : r.failures) {
            os << "    at (";
            for (std::size_t i = 0; i < f.indices.size(); ++i) os << (i ? ", " : "") << f.indices[i];
            os << "): ";
            if (f.error.empty())
                os << f.left << " != " << f.right << '\n';
            else
                os << "error: " << f.error << '\n';
        }
    }
    return os.str();
}

}  // namespace tribkit
