#pragma once

// Registry of the identities relating T, K, TM and KM, and a verifier that
// evaluates both sides of each identity exactly over an index grid.

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tribkit/binet.hpp"
#include "tribkit/core_numbers.hpp"
#include "tribkit/mat3.hpp"
#include "tribkit/series.hpp"
#include "tribkit/value.hpp"

namespace tribkit {

enum class Arity {
    N,    ///< one index n
    MN,   ///< two independent indices m, n
    NR,   ///< n and an offset r with 0 <= r <= n
    MNR,  ///< three indices (m, j, n) of a progression sum
};

std::string_view to_string(Arity a);

enum class Profile { Quick, Standard, Deep };

std::optional<Profile> parse_profile(std::string_view s);
std::string_view to_string(Profile p);

/// Grid extents. Identities valid for every integer index use [-symmetric,
/// symmetric]; identities stated for non-negative indices use [0, nonneg];
/// progression sums additionally take m in [1, sum_m].
struct Bounds {
    Index symmetric;
    Index nonneg;
    Index sum_m;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

Bounds bounds_for(Profile p);

using IndexTuple = std::vector<Index>;

/// Shared memoized terms used while evaluating identities. Safe to share
/// across threads.
class EvalContext {
public:
    explicit EvalContext(hp::Bits precision = hp::kDefaultPrecision);

    BigInt t(Index n) { return t_.get(n); }
    BigInt k(Index n) { return k_.get(n); }
    Mat3 tm(Index n);
    Mat3 km(Index n);
    Value term(SeriesKind kind, Index n);

    const BinetConstants& binet();

private:
    Mat3 closed(TermCache& cache, Index n);

    TermCache t_;
    TermCache k_;
    hp::Bits precision_;
    std::once_flag binet_once_;
    std::unique_ptr<BinetConstants> binet_;
};

/// One equality to check; chained statements a = b = c contribute several.
struct Equality {
    Value left;
    Value right;
};

struct IdentityRecord {
    std::string id;
    std::string location;   ///< where the statement comes from, in words
    std::string statement;  ///< the identity as a formula
    Arity arity;
    std::string domain;     ///< human-readable index domain
    std::string note;       ///< registry metadata, e.g. duplicated statements
    std::function<std::vector<IndexTuple>(const Bounds&)> grid;
    std::function<std::vector<Equality>(EvalContext&, std::span<const Index>)> evaluate;

    std::string anchor() const { return location + ": " + statement; }
};

const std::vector<IdentityRecord>& registry();

/// nullptr when no record has that id.
const IdentityRecord* find_identity(std::string_view id);

struct Failure {
    IndexTuple indices;
    std::string left;
    std::string right;
    std::string error;  ///< set when evaluation threw instead of returning
};

struct VerifyReport {
    std::string id;
    std::string anchor;
    std::string note;
    Bounds bounds;
    std::string grid;  ///< description of the swept grid
    std::uint64_t cases = 0;
    std::vector<Failure> failures;
    std::chrono::duration<double, std::milli> elapsed{};

    bool pass() const { return failures.empty(); }
};

struct VerifyOptions {
    unsigned jobs = 1;
    /// Stop recording failures past this many (they are still counted in cases).
    std::size_t max_failures = 50;
};

VerifyReport verify(const IdentityRecord& record, const Bounds& bounds, EvalContext& ctx,
                    const VerifyOptions& options = {});

/// Throws UnknownIdentity. Bounds default to the Standard profile.
VerifyReport verify(std::string_view id, std::optional<Bounds> overrides = std::nullopt,
                    const VerifyOptions& options = {});

/// One report per registry record, in registry order.
std::vector<VerifyReport> verify_all(Profile profile, const VerifyOptions& options = {});

/// {id, anchor, bounds, cases, failures[], elapsed_ms}; elapsed_ms is omitted
/// when include_timing is false so output is reproducible.
nlohmann::json to_json(const VerifyReport& r, bool include_timing = true);

std::string format_table(const std::vector<VerifyReport>& reports, bool include_timing = true);

}  // namespace tribkit
