#include <gtest/gtest.h>

#include <set>

#include "tribkit/errors.hpp"
#include "tribkit/identities.hpp"

using namespace tribkit;

TEST(Registry, SizeAndUniqueIds) {
    const auto& reg = registry();
    EXPECT_GE(reg.size(), 28u);
    std::set<std::string> ids;
    for (const auto& r : reg) {
        EXPECT_TRUE(ids.insert(r.id).second) << r.id;
        EXPECT_FALSE(r.statement.empty()) << r.id;
        EXPECT_FALSE(r.domain.empty()) << r.id;
        EXPECT_TRUE(r.grid && r.evaluate) << r.id;
    }
}

TEST(Registry, CoversRequiredFamilies) {
    for (const char* id : {"EQ3", "EQ4", "EQ5", "EQ6", "THM14a", "THM14b", "THM14c", "THM14e", "LEM15a", "LEM15b",
                           "COR16a", "COR16b", "THM18a", "THM18b", "THM18c", "THM18d", "THM18e", "COR19a", "COR19b",
                           "COR19c", "COR19d", "COR19e", "THM20a", "THM20b", "THM20c", "THMFINALa", "THMFINALb"})
        EXPECT_NE(find_identity(id), nullptr) << id;
    EXPECT_EQ(find_identity("NOPE"), nullptr);
    EXPECT_NE(find_identity("THM14c")->note.find("same identity"), std::string::npos);
}

TEST(Registry, ProfilesAndBounds) {
    EXPECT_EQ(parse_profile("quick"), Profile::Quick);
    EXPECT_EQ(parse_profile("deep"), Profile::Deep);
    EXPECT_FALSE(parse_profile("nope").has_value());
    EXPECT_EQ(bounds_for(Profile::Standard), (Bounds{40, 30, 10}));
}

TEST(Verify, QuickProfilePasses) {
    for (const auto& r : verify_all(Profile::Quick)) {
        EXPECT_TRUE(r.pass()) << r.id << ": " << (r.failures.empty() ? "" : r.failures[0].error);
        EXPECT_GT(r.cases, 0u) << r.id;
    }
}

TEST(Verify, StandardProfilePassesInParallel) {
    VerifyOptions opts;
    opts.jobs = 4;
    const auto reports = verify_all(Profile::Standard, opts);
    EXPECT_EQ(reports.size(), registry().size());
    for (const auto& r : reports) EXPECT_TRUE(r.pass()) << r.id;
}

TEST(Verify, JobsDoNotChangeResults) {
    EvalContext a, b;
    const auto* rec = find_identity("THM18c");
    const auto r1 = verify(*rec, bounds_for(Profile::Quick), a, {1, 50});
    const auto r4 = verify(*rec, bounds_for(Profile::Quick), b, {4, 50});
    EXPECT_EQ(r1.cases, r4.cases);
    EXPECT_EQ(to_json(r1, false), to_json(r4, false));
}

TEST(Verify, SingleIdAndUnknown) {
    const auto r = verify("EQ4");
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.bounds, bounds_for(Profile::Standard));
    EXPECT_THROW(verify("NOPE"), UnknownIdentity);
}

TEST(Verify, MutatedEvaluatorIsCaught) {
    IdentityRecord bad = *find_identity("EQ4");
    bad.id = "EQ4-mutated";
    bad.evaluate = [](EvalContext& ctx, std::span<const Index> ix) {
        const Index n = ix[0];
        BigInt rhs = 3 * ctx.t(n + 1) - 2 * ctx.t(n) - ctx.t(n - 1);
        if (n == 5) rhs += 1;
        return std::vector<Equality>{{ctx.k(n), rhs}};
    };
    EvalContext ctx;
    const auto r = verify(bad, bounds_for(Profile::Quick), ctx);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].indices, IndexTuple{5});
    EXPECT_EQ(r.failures[0].left, "21");
    EXPECT_EQ(r.failures[0].right, "22");
}

TEST(Verify, ThrowingEvaluatorIsRecorded) {
    IdentityRecord bad = *find_identity("EQ1");
    bad.evaluate = [](EvalContext&, std::span<const Index> ix) -> std::vector<Equality> {
        if (ix[0] == 0) throw DivisibilityViolation("forced");
        return {};
    };
    EvalContext ctx;
    const auto r = verify(bad, bounds_for(Profile::Quick), ctx);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_NE(r.failures[0].error.find("forced"), std::string::npos);
}

TEST(Verify, FailureCap) {
    IdentityRecord bad = *find_identity("EQ1");
    bad.evaluate = [](EvalContext&, std::span<const Index>) {
        return std::vector<Equality>{{BigInt(0), BigInt(1)}};
    };
    EvalContext ctx;
    const auto r = verify(bad, bounds_for(Profile::Standard), ctx, {1, 5});
    EXPECT_EQ(r.failures.size(), 5u);
    EXPECT_FALSE(r.pass());
}

TEST(Report, JsonSchema) {
    const auto r = verify("EQ5");
    const auto j = to_json(r);
    for (const char* key : {"id", "anchor", "bounds", "cases", "failures", "elapsed_ms"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_FALSE(to_json(r, false).contains("elapsed_ms"));
    EXPECT_EQ(j["id"], "EQ5");
    EXPECT_TRUE(j["failures"].is_array());
    EXPECT_NE(format_table({r}, false).find("EQ5"), std::string::npos);
}
