#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "tribkit/core_numbers.hpp"

namespace tribkit {

/// Tallies of the arithmetic a computation performed. Optional everywhere it
/// is accepted; pass nullptr to skip counting.
struct OpCounter {
    std::uint64_t matrix_multiplications = 0;
    std::uint64_t additions = 0;        // big-integer (or high-precision) additions
    std::uint64_t multiplications = 0;  // big-integer (or high-precision) multiplications

    OpCounter& operator+=(const OpCounter& o) {
        matrix_multiplications += o.matrix_multiplications;
        additions += o.additions;
        multiplications += o.multiplications;
        return *this;
    }
};

/// 3x3 matrix of exact integers, row-major.
///
/// operator() takes zero-based (row, col). Mathematical texts number cells from
/// one, so the cell the scalar sequences are read from, row 2 / column 1, is
/// (1, 0) here; scalar() returns it.
class Mat3 {
public:
    Mat3() = default;
    Mat3(std::initializer_list<std::initializer_list<long>> rows);

    static Mat3 identity();

    BigInt& operator()(std::size_t row, std::size_t col) { return e_[row * 3 + col]; }
    const BigInt& operator()(std::size_t row, std::size_t col) const { return e_[row * 3 + col]; }

    const BigInt& scalar() const { return (*this)(1, 0); }

    const std::array<BigInt, 9>& entries() const { return e_; }

    Mat3& operator+=(const Mat3& o);
    Mat3& operator-=(const Mat3& o);
    Mat3& operator*=(const BigInt& k);

    friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
    friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
    friend Mat3 operator-(Mat3 a) { return a *= BigInt(-1); }
    friend Mat3 operator*(const BigInt& k, Mat3 a) { return a *= k; }
    friend Mat3 operator*(long k, Mat3 a) { return a *= BigInt(k); }
    friend Mat3 operator*(const Mat3& a, const Mat3& b);

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e_ == b.e_; }

    std::string to_string() const;

private:
    std::array<BigInt, 9> e_{};
};

Mat3 mat_mul(const Mat3& a, const Mat3& b, OpCounter* ops = nullptr);

/// a^e by left-to-right binary exponentiation. Throws NegativeExponent if e < 0.
Mat3 mat_pow(const Mat3& a, Index e, OpCounter* ops = nullptr);

}  // namespace tribkit
