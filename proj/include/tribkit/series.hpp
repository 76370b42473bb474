#pragma once

// Generating functions and partial sums.
//
// All four generating functions share the denominator 1 - x - x^2 - x^3:
//
//   sum T(n) x^n  = x / (1 - x - x^2 - x^3)
//   sum K(n) x^n  = (3 - 2x - x^2) / (1 - x - x^2 - x^3)
//   sum TM(n) x^n = N_T(x) / (1 - x - x^2 - x^3)
//   sum KM(n) x^n = N_K(x) / (1 - x - x^2 - x^3)
//
// with matrix numerators N_T, N_K of degree two (see matrix_numerator()).
//
// Partial sums over an arithmetic progression of indices, for m > j >= 0:
//
//   sum_{i=0}^{n-1} X(mi+j) =
//       [X(mn+m+j) + X(mn-m+j) + (1-K(m)) X(mn+j)
//        - X(m+j) - X(j-m) - (1-K(m)) X(j)] / (K(m) - K(-m))

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "tribkit/core_numbers.hpp"
#include "tribkit/mat3.hpp"
#include "tribkit/matrix_seq.hpp"
#include "tribkit/value.hpp"

namespace tribkit {

enum class SeriesKind { Tribonacci, TribonacciLucas, TribMatrix, LucasMatrix };

inline constexpr std::array<SeriesKind, 4> kSeriesKinds{
    SeriesKind::Tribonacci, SeriesKind::TribonacciLucas, SeriesKind::TribMatrix,
    SeriesKind::LucasMatrix};

std::string_view to_string(SeriesKind kind);
constexpr bool is_matrix(SeriesKind k) {
    return k == SeriesKind::TribMatrix || k == SeriesKind::LucasMatrix;
}
SeriesKind series_kind(SequenceKind k);
SeriesKind series_kind(MatrixKind k);

/// X(n) for any of the four sequences.
Value series_term(SeriesKind kind, Index n);

/// Source of sequence terms for the summation routines; lets callers plug in a
/// memoized evaluator.
using TermSource = std::function<Value(SeriesKind, Index)>;

/// numerator(x) / denominator(x) with denominator[0] == 1, expanded by forward
/// substitution:  c_i = (n_i - sum_{k>=1} d_k c_{i-k}) / d_0.
template <typename Coeff>
struct PolyRational {
    std::vector<Coeff> numerator;
    std::vector<BigInt> denominator{BigInt(1), BigInt(-1), BigInt(-1), BigInt(-1)};

    std::vector<Coeff> coefficients(Index count) const;
};

extern template struct PolyRational<BigInt>;
extern template struct PolyRational<Mat3>;

PolyRational<BigInt> scalar_generating_function(SequenceKind kind);
PolyRational<Mat3> matrix_generating_function(MatrixKind kind);

/// The matrix numerator as printed entrywise, e.g. KM cell (3,2) = 4 - 6x;
/// coefficient k of every entry is stored in element k.
std::array<Mat3, 3> matrix_numerator(MatrixKind kind);

/// X(0) + (X(1) - X(0)) x + (X(2) - X(1) - X(0)) x^2 from the initial matrices.
std::array<Mat3, 3> matrix_numerator_from_initial(MatrixKind kind);

/// First `count` Maclaurin coefficients; count >= 1.
std::vector<BigInt> gf_coeffs(SequenceKind kind, Index count);
std::vector<Mat3> gf_matrix_coeffs(MatrixKind kind, Index count);

/// Sum of n terms X(j), X(m+j), ..., X(m(n-1)+j). Requires m > j >= 0, n >= 1.
struct SumSpec {
    SeriesKind kind;
    Index m;
    Index j;
    Index n;
};

/// Throws DomainError unless m > j >= 0 and n >= 1.
void validate(const SumSpec& spec);

/// Closed form. Throws DegenerateDenominator if K(m) == K(-m) and
/// DivisibilityViolation if the numerator is not an exact multiple.
Value partial_sum(const SumSpec& spec, const TermSource& terms = series_term);

/// Direct summation of the n terms.
Value partial_sum_bruteforce(const SumSpec& spec, const TermSource& terms = series_term);

/// The m = 1, j = 0 special cases: sum_{i<n} T(i) = (T(n+2) - T(n) - 1) / 2 and
/// sum_{i<n} K(i) = (K(n+2) - K(n)) / 2.
BigInt prefix_sum(SequenceKind kind, Index n);

}  // namespace tribkit
