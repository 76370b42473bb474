#include <gtest/gtest.h>

#include <bit>

#include "tribkit/core_numbers.hpp"
#include "tribkit/errors.hpp"
#include "tribkit/mat3.hpp"
#include "tribkit/matrix_seq.hpp"

using namespace tribkit;

TEST(Mat3, BasicsAndLayout) {
    const Mat3 a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    EXPECT_EQ(a(0, 2), 3);
    EXPECT_EQ(a(2, 0), 7);
    EXPECT_EQ(a.scalar(), 4);  // second row, first column
    EXPECT_EQ(a * Mat3::identity(), a);
    EXPECT_EQ(Mat3::identity() * a, a);
    const Mat3 sq{{30, 36, 42}, {66, 81, 96}, {102, 126, 150}};
    EXPECT_EQ(a * a, sq);
    EXPECT_EQ(a + a, 2 * a);
    EXPECT_EQ(a - a, Mat3{});
    EXPECT_EQ(a.to_string(), "[[1,2,3],[4,5,6],[7,8,9]]");
}

TEST(Mat3, PowerAndCounting) {
    const Mat3 q{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}};
    EXPECT_EQ(mat_pow(q, 0), Mat3::identity());
    EXPECT_EQ(mat_pow(q, 1), q);
    Mat3 slow = Mat3::identity();
    for (int e = 1; e <= 40; ++e) {
        slow = slow * q;
        OpCounter ops;
        EXPECT_EQ(mat_pow(q, e, &ops), slow) << e;
        const auto bound = 2 * std::bit_width(static_cast<unsigned>(e - 1)) + 2;
        EXPECT_LE(ops.matrix_multiplications, static_cast<std::uint64_t>(bound)) << e;
    }
    EXPECT_THROW(mat_pow(q, -1), NegativeExponent);
}

TEST(MatrixSeq, InitialMatrices) {
    EXPECT_EQ(t_matrix(0), Mat3::identity());
    EXPECT_EQ(t_matrix(1), (Mat3{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}));
    EXPECT_EQ(t_matrix(2), (Mat3{{2, 2, 1}, {1, 1, 1}, {1, 0, 0}}));
    EXPECT_EQ(k_matrix(0), (Mat3{{1, 2, 3}, {3, -2, -1}, {-1, 4, -1}}));
    EXPECT_EQ(k_matrix(1), (Mat3{{3, 4, 1}, {1, 2, 3}, {3, -2, -1}}));
    EXPECT_EQ(k_matrix(2), (Mat3{{7, 4, 3}, {3, 4, 1}, {1, 2, 3}}));
    for (auto kind : kMatrixKinds) {
        const auto init = initial_matrices(kind);
        for (Index n = 0; n < 3; ++n) EXPECT_EQ(seq_matrix(kind, n), init[n]);
    }
}

TEST(MatrixSeq, KnownValues) {
    EXPECT_EQ(t_matrix(10), (Mat3{{274, 230, 149}, {149, 125, 81}, {81, 68, 44}}));
    EXPECT_EQ(t_matrix(-3), (Mat3{{1, -1, -1}, {-1, 2, 0}, {0, -1, 2}}));
}

TEST(MatrixSeq, StrategiesAgree) {
    for (Index n = -200; n <= 200; ++n) {
        const Mat3 c = t_matrix(n, TStrategy::ClosedForm);
        EXPECT_EQ(t_matrix(n, TStrategy::Iterate), c) << n;
        if (n >= 0) EXPECT_EQ(t_matrix(n, TStrategy::MatPow), c) << n;
        const Mat3 k = k_matrix(n, KStrategy::ClosedForm);
        EXPECT_EQ(k_matrix(n, KStrategy::Iterate), k) << n;
        EXPECT_EQ(k_matrix(n, KStrategy::FromT), k) << n;
    }
}

TEST(MatrixSeq, ScalarCell) {
    for (Index n = -100; n <= 100; ++n) {
        EXPECT_EQ(t_matrix(n).scalar(), trib(n));
        EXPECT_EQ(k_matrix(n).scalar(), lucas_trib(n));
    }
}

TEST(MatrixSeq, MatrixRecurrence) {
    for (auto kind : kMatrixKinds)
        for (Index n = -60; n <= 60; ++n)
            EXPECT_EQ(seq_matrix(kind, n + 3), seq_matrix(kind, n + 2) + seq_matrix(kind, n + 1) + seq_matrix(kind, n));
}

TEST(MatrixSeq, NegativeIndicesInvert) {
    for (Index n = 0; n <= 50; ++n) EXPECT_EQ(t_matrix(n) * t_matrix(-n), Mat3::identity()) << n;
}

TEST(MatrixSeq, FastTermAgreesWithIteration) {
    for (Index n = -50; n <= 3000; ++n) ASSERT_EQ(trib_fast(n), trib(n)) << n;
    OpCounter ops;
    const BigInt big = trib_fast(100000, &ops);
    EXPECT_EQ(big, trib(100000));
    EXPECT_LE(ops.matrix_multiplications, 2u * 17u + 2u);
}
