#include "tribkit/hp.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <utility>

namespace tribkit::hp {

Real::Real(Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const char* decimal, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, decimal, 10, MPFR_RNDN);
}

Real::~Real() {
    mpfr_clear(v_);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    // Steal the limbs and leave o in a valid minimal state.
    *v_ = *o.v_;
    mpfr_init2(o.v_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

namespace {

// Result of a binary op takes the wider precision.
void widen(Real& a, const Real& b) {
    if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
}

double Real::log2_abs() const {
    if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    const double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
    return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

BigInt Real::round() const {
    BigInt out;
    Real r(precision());
    mpfr_round(r.v_, v_);
    mpfr_get_z(out.get_mpz_t(), r.v_, MPFR_RNDN);
    return out;
}

std::string Real::to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real abs(Real x) {
    mpfr_abs(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real sqrt(const Real& x) {
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real cbrt(const Real& x) {
    Real r(x.precision());
    mpfr_cbrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pi(Bits bits) {
    Real r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real exp2i(long e, Bits bits) {
    Real r(1L, bits);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------------------

Complex& Complex::operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real re = re_ * o.re_ - im_ * o.im_;
    Real im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    const Real den = o.re_ * o.re_ + o.im_ * o.im_;
    Real re = (re_ * o.re_ + im_ * o.im_) / den;
    Real im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
    return r;
}

Real abs1(const Complex& z) { return abs(z.re()) + abs(z.im()); }

Complex pow(const Complex& z, Index e, std::uint64_t* multiplications) {
    Complex base = z;
    if (e < 0) {
        base = Complex(1L, z.precision()) / z;
        e = -e;
    }
    Complex result(1L, z.precision());
    std::uint64_t count = 0;
    auto u = static_cast<std::uint64_t>(e);
    while (u) {
        if (u & 1U) {
            result *= base;
            ++count;
        }
        u >>= 1U;
        if (u) {
            base *= base;
            ++count;
        }
    }
    if (multiplications) *multiplications += count;
    return result;
}

}  // namespace tribkit::hp
