#pragma once

// Binet-form evaluation of T(n), K(n), TM(n) and KM(n) from the roots of
// x^3 - x^2 - x - 1, in high-precision floating point, with rounding back to
// exact integers.

#include <array>
#include <string>
#include <vector>

#include "tribkit/hp.hpp"
#include "tribkit/mat3.hpp"
#include "tribkit/matrix_seq.hpp"

namespace tribkit {

using hp::Bits;
using HPComplex = hp::Complex;
using HPReal = hp::Real;

/// alpha is the real root (~1.8393); beta and gamma are the complex pair with
/// Im(beta) > 0 and gamma = conj(beta).
struct RootTriple {
    HPComplex alpha;
    HPComplex beta;
    HPComplex gamma;

    Bits precision() const { return alpha.precision(); }
};

/// Newton iteration for the real root from 2.0, then the quadratic left after
/// deflating x - alpha for the complex pair. Requires bits >= 64.
RootTriple compute_roots(Bits bits = hp::kDefaultPrecision);

/// The Cardano radical expressions
///   alpha = (1 + c+ + c-) / 3,  beta = (1 + w c+ + w^2 c-) / 3,
///   gamma = (1 + w^2 c+ + w c-) / 3
/// with c+- = cbrt(19 +- 3 sqrt(33)) and w = exp(2 pi i / 3).
RootTriple radical_roots(Bits bits = hp::kDefaultPrecision);

/// |x^3 - x^2 - x - 1|
HPReal cubic_residual(const HPComplex& x);

using CMat3 = std::array<HPComplex, 9>;

CMat3 to_complex(const Mat3& m, Bits bits);
CMat3 operator+(const CMat3& a, const CMat3& b);
CMat3 operator-(const CMat3& a, const CMat3& b);
CMat3 operator*(const CMat3& a, const CMat3& b);
CMat3 operator*(const HPComplex& k, const CMat3& a);
/// max over entries of |a_ij|
HPReal max_abs(const CMat3& a);

/// The matrices A1, B1, C1 (for TM) and A2, B2, C2 (for KM) with
///   TM(n) = A1 alpha^n + B1 beta^n + C1 gamma^n
///   KM(n) = A2 alpha^n + B2 beta^n + C2 gamma^n
/// where, for a root r with companions s and t,
///   coeff(r) = (r X(2) + r(r-1) X(1) + X(0)) / (r (r-s)(r-t)).
struct BinetConstants {
    RootTriple roots;
    CMat3 a1, b1, c1;
    CMat3 a2, b2, c2;
};

BinetConstants binet_constants(Bits bits = hp::kDefaultPrecision);

/// Rounding tolerance: a Binet value is accepted only if it lies within this
/// distance of an integer and its imaginary part is smaller than this.
inline constexpr double kRoundingTolerance = 0.25;

BigInt binet_trib(Index n, Bits bits = hp::kDefaultPrecision);
BigInt binet_trib(Index n, const RootTriple& roots, std::uint64_t* multiplications = nullptr);
BigInt binet_lucas(Index n, Bits bits = hp::kDefaultPrecision);
BigInt binet_lucas(Index n, const RootTriple& roots, std::uint64_t* multiplications = nullptr);

Mat3 binet_matrix(MatrixKind kind, Index n, Bits bits = hp::kDefaultPrecision);
Mat3 binet_matrix(MatrixKind kind, Index n, const BinetConstants& constants);

struct AlgebraCheck {
    std::string relation;  // e.g. "A1^2 - A1", "A1*B1"
    double deviation;      // max entrywise |.|
    bool pass;
};

struct ConstantAlgebraReport {
    Bits precision;
    double epsilon;
    std::vector<AlgebraCheck> checks;
    bool pass;
};

/// Idempotence of A1, B1, C1 and vanishing of the cross products among
/// {A1, B1, C1} and among {A2, B2, C2}, to within epsilon.
ConstantAlgebraReport check_constant_algebra(Bits bits, double epsilon);

/// Smallest precision at which |n| is expected to round safely; used by callers
/// that pick a precision automatically.
Bits suggested_precision(Index n);

}  // namespace tribkit
