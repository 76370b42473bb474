#pragma once

// The Tribonacci matrix sequence TM(n) and the Tribonacci-Lucas matrix
// sequence KM(n). Both obey X(n) = X(n-1) + X(n-2) + X(n-3) for all integers n,
// with
//
//   TM(0) = I          TM(1) = [1 1 1]    TM(2) = [2 2 1]
//                              [1 0 0]            [1 1 1]
//                              [0 1 0]            [1 0 0]
//
//   KM(0) = [ 1  2  3]  KM(1) = [3  4  1]  KM(2) = [7 4 3]
//           [ 3 -2 -1]          [1  2  3]          [3 4 1]
//           [-1  4 -1]          [3 -2 -1]          [1 2 3]
//
// and closed form (X = T for TM, X = K for KM)
//
//   [X(n+1)  X(n)+X(n-1)    X(n)  ]
//   [X(n)    X(n-1)+X(n-2)  X(n-1)]
//   [X(n-1)  X(n-2)+X(n-3)  X(n-2)]

#include <array>
#include <string_view>

#include "tribkit/core_numbers.hpp"
#include "tribkit/mat3.hpp"

namespace tribkit {

enum class MatrixKind { TribMatrix, LucasMatrix };

inline constexpr std::array<MatrixKind, 2> kMatrixKinds{MatrixKind::TribMatrix,
                                                        MatrixKind::LucasMatrix};

std::string_view to_string(MatrixKind kind);

/// The scalar sequence whose terms fill the closed form.
constexpr SequenceKind scalar_kind(MatrixKind kind) {
    return kind == MatrixKind::TribMatrix ? SequenceKind::Tribonacci
                                          : SequenceKind::TribonacciLucas;
}

/// X(0), X(1), X(2) as listed above.
std::array<Mat3, 3> initial_matrices(MatrixKind kind);

/// Fills the closed form from the five consecutive terms X(n-3), ..., X(n+1).
Mat3 closed_form(const std::array<BigInt, 5>& window);

enum class TStrategy {
    Iterate,     ///< matrix recurrence from the initial matrices
    ClosedForm,  ///< entries from scalar terms
    MatPow,      ///< TM(1)^n; n < 0 falls back to Iterate
};

enum class KStrategy {
    Iterate,
    ClosedForm,
    FromT,  ///< KM(0) * TM(n)
};

Mat3 t_matrix(Index n, TStrategy strategy = TStrategy::ClosedForm, OpCounter* ops = nullptr);
Mat3 k_matrix(Index n, KStrategy strategy = KStrategy::ClosedForm);

Mat3 seq_matrix(MatrixKind kind, Index n);

/// Matrix recurrence walked from the initial matrices (backwards for n < 0).
Mat3 iterate_matrix(MatrixKind kind, Index n);

/// T(n) read from cell (2,1) of TM(1)^n; O(log n) matrix products for n >= 0,
/// backward scalar iteration for n < 0.
BigInt trib_fast(Index n, OpCounter* ops = nullptr);

}  // namespace tribkit
