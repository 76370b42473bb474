#include <gtest/gtest.h>

#include "tribkit/core_numbers.hpp"
#include "tribkit/errors.hpp"
#include "tribkit/matrix_seq.hpp"
#include "tribkit/series.hpp"

using namespace tribkit;

namespace {

// Direct summation written independently of partial_sum_bruteforce.
Value oracle_sum(SeriesKind kind, Index m, Index j, Index n) {
    if (is_matrix(kind)) {
        Mat3 acc;
        for (Index i = 0; i < n; ++i)
            acc += kind == SeriesKind::TribMatrix ? t_matrix(m * i + j, TStrategy::Iterate)
                                                  : k_matrix(m * i + j, KStrategy::Iterate);
        return acc;
    }
    BigInt acc = 0;
    for (Index i = 0; i < n; ++i) acc += kind == SeriesKind::Tribonacci ? trib(m * i + j) : lucas_trib(m * i + j);
    return acc;
}

}  // namespace

TEST(GeneratingFunctions, ScalarCoefficients) {
    EXPECT_EQ(gf_coeffs(SequenceKind::Tribonacci, 5), (std::vector<BigInt>{0, 1, 1, 2, 4}));
    EXPECT_EQ(gf_coeffs(SequenceKind::TribonacciLucas, 3), (std::vector<BigInt>{3, 1, 3}));
    for (auto kind : kSequenceKinds) {
        const auto c = gf_coeffs(kind, 64);
        ASSERT_EQ(c.size(), 64u);
        for (Index i = 0; i < 64; ++i) EXPECT_EQ(c[i], term(kind, i));
    }
}

TEST(GeneratingFunctions, ScalarNumerators) {
    EXPECT_EQ(scalar_generating_function(SequenceKind::Tribonacci).numerator, (std::vector<BigInt>{0, 1}));
    EXPECT_EQ(scalar_generating_function(SequenceKind::TribonacciLucas).numerator, (std::vector<BigInt>{3, -2, -1}));
}

TEST(GeneratingFunctions, MatrixCoefficients) {
    EXPECT_EQ(gf_matrix_coeffs(MatrixKind::TribMatrix, 1), std::vector<Mat3>{Mat3::identity()});
    for (auto kind : kMatrixKinds) {
        const auto c = gf_matrix_coeffs(kind, 64);
        ASSERT_EQ(c.size(), 64u);
        for (Index i = 0; i < 64; ++i) EXPECT_EQ(c[i], iterate_matrix(kind, i)) << i;
    }
}

TEST(GeneratingFunctions, PrintedNumeratorsFromInitialMatrices) {
    for (auto kind : kMatrixKinds) EXPECT_EQ(matrix_numerator(kind), matrix_numerator_from_initial(kind));
    // Quoted entries of the KM numerator: cell (1,1) = 1 + 2x + 3x^2,
    // cell (3,2) = 4 - 6x, cell (3,3) = -1 + 5x^2.
    const auto km = matrix_numerator_from_initial(MatrixKind::LucasMatrix);
    auto cell = [&](std::size_t r, std::size_t c) {
        return std::vector<BigInt>{km[0](r, c), km[1](r, c), km[2](r, c)};
    };
    EXPECT_EQ(cell(0, 0), (std::vector<BigInt>{1, 2, 3}));
    EXPECT_EQ(cell(2, 1), (std::vector<BigInt>{4, -6, 0}));
    EXPECT_EQ(cell(2, 2), (std::vector<BigInt>{-1, 0, 5}));
}

TEST(GeneratingFunctions, Errors) {
    EXPECT_THROW(gf_coeffs(SequenceKind::Tribonacci, 0), DomainError);
    PolyRational<BigInt> bad{{1}, {2, -1}};
    EXPECT_THROW(bad.coefficients(3), DomainError);
}

TEST(PartialSums, SpecExamples) {
    EXPECT_EQ(std::get<BigInt>(partial_sum({SeriesKind::Tribonacci, 1, 0, 5})), 8);
    EXPECT_EQ(std::get<BigInt>(partial_sum({SeriesKind::TribonacciLucas, 1, 0, 5})), 25);
}

TEST(PartialSums, ClosedFormMatchesDirectSum) {
    for (auto kind : kSeriesKinds)
        for (Index m = 1; m <= 10; ++m)
            for (Index j = 0; j < m; ++j)
                for (Index n = 1; n <= 40; ++n) {
                    const SumSpec s{kind, m, j, n};
                    const Value closed = partial_sum(s);
                    ASSERT_EQ(closed, partial_sum_bruteforce(s)) << to_string(kind) << ' ' << m << ' ' << j << ' ' << n;
                    if (n % 13 == 0) ASSERT_EQ(closed, oracle_sum(kind, m, j, n));
                }
}

TEST(PartialSums, PrefixSpecialisation) {
    for (Index n = 1; n <= 100; ++n) {
        EXPECT_EQ(prefix_sum(SequenceKind::Tribonacci, n), (trib(n + 2) - trib(n) - 1) / 2);
        EXPECT_EQ(prefix_sum(SequenceKind::TribonacciLucas, n), (lucas_trib(n + 2) - lucas_trib(n)) / 2);
        EXPECT_EQ(prefix_sum(SequenceKind::Tribonacci, n),
                  std::get<BigInt>(oracle_sum(SeriesKind::Tribonacci, 1, 0, n)));
    }
}

TEST(PartialSums, DenominatorValues) {
    const std::array<long, 10> expected{2, 4, 2, 16, 22, 28, 86, 128, 218, 484};
    for (Index m = 1; m <= 10; ++m) EXPECT_EQ(lucas_trib(m) - lucas_trib(-m), expected[m - 1]);
}

TEST(PartialSums, ConstraintViolations) {
    EXPECT_THROW(validate({SeriesKind::Tribonacci, 0, 0, 5}), DomainError);
    EXPECT_THROW(validate({SeriesKind::Tribonacci, 3, 3, 5}), DomainError);
    EXPECT_THROW(validate({SeriesKind::Tribonacci, 3, -1, 5}), DomainError);
    EXPECT_THROW(validate({SeriesKind::Tribonacci, 3, 1, 0}), DomainError);
    EXPECT_THROW(partial_sum({SeriesKind::Tribonacci, 0, 0, 5}), DomainError);
}

TEST(PartialSums, CorruptedTermsAreCaught) {
    // A term source that is off by one at a single index no longer yields an
    // exactly divisible numerator for every spec, or disagrees with the direct sum.
    TermSource bad = [](SeriesKind k, Index n) -> Value {
        Value v = series_term(k, n);
        if (n == 7)
            if (auto* b = std::get_if<BigInt>(&v)) *b += 1;
        return v;
    };
    int caught = 0;
    for (Index m = 2; m <= 6; ++m)
        for (Index n = 3; n <= 12; ++n) {
            const SumSpec s{SeriesKind::Tribonacci, m, 1, n};
            try {
                if (partial_sum(s, bad) != partial_sum_bruteforce(s)) ++caught;
            } catch (const DivisibilityViolation&) {
                ++caught;
            }
        }
    EXPECT_GT(caught, 0);
}

TEST(Value, Json) {
    EXPECT_EQ(to_json(Value{BigInt(-20)}).dump(), "\"-20\"");
    EXPECT_EQ(to_json(Value{t_matrix(2)}).dump(), R"([["2","2","1"],["1","1","1"],["1","0","0"]])");
}
