#pragma once

// High-precision real and complex arithmetic on top of MPFR.
//
// Every Real carries its own binary precision. Binary operations round to the
// larger precision of the two operands (round-to-nearest), so the relative
// error of a single operation is bounded by 2^-precision.

#include <cstdint>
#include <string>

#include <mpfr.h>

#include "tribkit/core_numbers.hpp"

namespace tribkit::hp {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultPrecision = 256;

class Real {
public:
    explicit Real(Bits bits = kDefaultPrecision);
    Real(long value, Bits bits);
    Real(const BigInt& value, Bits bits);
    Real(const char* decimal, Bits bits);
    ~Real();

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;

    Bits precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log2(|x|), or a large negative number for zero.
    double log2_abs() const;

    /// Nearest integer (ties away from zero).
    BigInt round() const;

    std::string to_string(int digits = 30) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator-(Real a);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }

private:
    mpfr_t v_;
};

Real abs(Real x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real pi(Bits bits);
/// 2^e at the given precision.
Real exp2i(long e, Bits bits);

class Complex {
public:
    explicit Complex(Bits bits = kDefaultPrecision) : re_(bits), im_(bits) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(long re, Bits bits) : re_(re, bits), im_(0L, bits) {}
    explicit Complex(const Real& re) : re_(re), im_(0L, re.precision()) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Bits precision() const { return re_.precision(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }

private:
    Real re_;
    Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
/// |re| + |im|; cheaper than abs() and within a factor sqrt(2) of it.
Real abs1(const Complex& z);
/// z^e by binary exponentiation; negative e inverts first.
Complex pow(const Complex& z, Index e, std::uint64_t* multiplications = nullptr);

}  // namespace tribkit::hp
