#include "tribkit/mat3.hpp"

#include <bit>
#include <sstream>

#include "tribkit/errors.hpp"

namespace tribkit {

Mat3::Mat3(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row) (*this)(r, c++) = v;
        ++r;
    }
}

Mat3 Mat3::identity() { return Mat3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

Mat3& Mat3::operator+=(const Mat3& o) {
    for (std::size_t i = 0; i < 9; ++i) e_[i] += o.e_[i];
    return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
    for (std::size_t i = 0; i < 9; ++i) e_[i] -= o.e_[i];
    return *this;
}

Mat3& Mat3::operator*=(const BigInt& k) {
    for (auto& v : e_) v *= k;
    return *this;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b, OpCounter* ops) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            BigInt& acc = r(i, j);
            mpz_mul(acc.get_mpz_t(), a(i, 0).get_mpz_t(), b(0, j).get_mpz_t());
            mpz_addmul(acc.get_mpz_t(), a(i, 1).get_mpz_t(), b(1, j).get_mpz_t());
            mpz_addmul(acc.get_mpz_t(), a(i, 2).get_mpz_t(), b(2, j).get_mpz_t());
        }
    }
    if (ops) {
        ops->matrix_multiplications += 1;
        ops->multiplications += 27;
        ops->additions += 18;
    }
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) { return mat_mul(a, b); }

Mat3 mat_pow(const Mat3& a, Index e, OpCounter* ops) {
    if (e < 0) throw NegativeExponent("mat_pow: exponent " + std::to_string(e) + " < 0");
    if (e == 0) return Mat3::identity();

    const auto u = static_cast<std::uint64_t>(e);
    int bit = std::bit_width(u) - 1;
    Mat3 r = a;
    while (--bit >= 0) {
        r = mat_mul(r, r, ops);
        if ((u >> bit) & 1U) r = mat_mul(r, a, ops);
    }
    return r;
}

std::string Mat3::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < 3; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < 3; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace tribkit
