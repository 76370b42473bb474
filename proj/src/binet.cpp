#include "tribkit/binet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "tribkit/errors.hpp"

namespace tribkit {

namespace {

HPComplex cubic(const HPComplex& x) {
    const Bits bits = x.precision();
    const HPComplex one(1L, bits);
    // ((x - 1) x - 1) x - 1
    return ((x - one) * x - one) * x - one;
}

HPComplex cubic_derivative(const HPComplex& x) {
    const Bits bits = x.precision();
    // (3x - 2) x - 1
    return (HPComplex(3L, bits) * x - HPComplex(2L, bits)) * x - HPComplex(1L, bits);
}

}  // namespace

HPReal cubic_residual(const HPComplex& x) { return hp::abs(cubic(x)); }

RootTriple compute_roots(Bits bits) {
    if (bits < 64) throw DomainError("compute_roots: precision must be at least 64 bits");

    const HPReal one(1L, bits), two(2L, bits), three(3L, bits);
    const HPReal tol = hp::exp2i(-(static_cast<long>(bits) - 4), bits);

    HPReal x(2L, bits);
    for (int iter = 0; iter < 64 + static_cast<int>(std::bit_width(static_cast<unsigned long>(bits))); ++iter) {
        const HPReal f = ((x - one) * x - one) * x - one;
        const HPReal df = (three * x - two) * x - one;
        const HPReal step = f / df;
        x -= step;
        if (hp::abs(step) < tol) break;
    }

    // x^3 - x^2 - x - 1 = (x - alpha)(x^2 + p x + q), p = alpha - 1, q = 1 / alpha.
    const HPReal p = x - one;
    const HPReal q = one / x;
    const HPReal re = -(p / two);
    const HPReal im = hp::sqrt(q - re * re);

    HPComplex beta(re, im);
    // One Newton polish on the deflated root against the original cubic.
    beta -= cubic(beta) / cubic_derivative(beta);

    RootTriple r{HPComplex(x), beta, hp::conj(beta)};
    return r;
}

RootTriple radical_roots(Bits bits) {
    const HPReal one(1L, bits), two(2L, bits), three(3L, bits);
    const HPReal s33 = hp::sqrt(HPReal(33L, bits));
    const HPReal c_plus = hp::cbrt(HPReal(19L, bits) + three * s33);
    const HPReal c_minus = hp::cbrt(HPReal(19L, bits) - three * s33);

    // w = (-1 + i sqrt 3) / 2
    const HPComplex w(-(one / two), hp::sqrt(three) / two);
    const HPComplex w2 = w * w;
    const HPComplex cp(c_plus), cm(c_minus), c1(1L, bits), c3(3L, bits);

    RootTriple r{(c1 + cp + cm) / c3, (c1 + w * cp + w2 * cm) / c3, (c1 + w2 * cp + w * cm) / c3};
    return r;
}

// ---------------------------------------------------------------------------
// Complex matrices

CMat3 to_complex(const Mat3& m, Bits bits) {
    CMat3 out;
    for (std::size_t i = 0; i < 9; ++i) out[i] = HPComplex(HPReal(m.entries()[i], bits));
    return out;
}

CMat3 operator+(const CMat3& a, const CMat3& b) {
    CMat3 out = a;
    for (std::size_t i = 0; i < 9; ++i) out[i] += b[i];
    return out;
}

CMat3 operator-(const CMat3& a, const CMat3& b) {
    CMat3 out = a;
    for (std::size_t i = 0; i < 9; ++i) out[i] -= b[i];
    return out;
}

CMat3 operator*(const CMat3& a, const CMat3& b) {
    const Bits bits = a[0].precision();
    CMat3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            HPComplex acc(0L, bits);
            for (std::size_t k = 0; k < 3; ++k) acc += a[i * 3 + k] * b[k * 3 + j];
            out[i * 3 + j] = std::move(acc);
        }
    }
    return out;
}

CMat3 operator*(const HPComplex& k, const CMat3& a) {
    CMat3 out = a;
    for (auto& v : out) v *= k;
    return out;
}

HPReal max_abs(const CMat3& a) {
    HPReal best(0L, a[0].precision());
    for (const auto& v : a) {
        HPReal m = hp::abs(v);
        if (best < m) best = std::move(m);
    }
    return best;
}

// ---------------------------------------------------------------------------

namespace {

CMat3 constant_for(const HPComplex& r, const HPComplex& s, const HPComplex& t,
                   const std::array<Mat3, 3>& init) {
    const Bits bits = r.precision();
    const HPComplex one(1L, bits);
    const CMat3 x0 = to_complex(init[0], bits);
    const CMat3 x1 = to_complex(init[1], bits);
    const CMat3 x2 = to_complex(init[2], bits);
    const CMat3 num = r * x2 + (r * (r - one)) * x1 + x0;
    const HPComplex inv = one / (r * (r - s) * (r - t));
    return inv * num;
}

// Rejects values whose accumulated rounding error might reach the tolerance.
// magnitude is the sum of the absolute values of the Binet terms; each term
// goes through O(log |n|) products, so the error is a small multiple of
// magnitude * 2^-bits.
void check_error_budget(const HPReal& magnitude, Index n, Bits bits, const char* what) {
    const auto steps = static_cast<double>(std::bit_width(static_cast<std::uint64_t>(n < 0 ? -n : n) + 1));
    const double log2_err = magnitude.log2_abs() - static_cast<double>(bits) + std::log2(16.0 + 4.0 * steps);
    if (log2_err > -4.0) {
        throw PrecisionExhausted(std::string(what) + ": " + std::to_string(bits) +
                                 " bits cannot resolve index " + std::to_string(n));
    }
}

BigInt round_to_integer(const HPComplex& z, const char* what, Index n) {
    const HPReal tol("0.25", z.precision());
    if (!(hp::abs(z.im()) < tol)) {
        throw PrecisionExhausted(std::string(what) + ": imaginary residue at index " + std::to_string(n));
    }
    BigInt k = z.re().round();
    if (!(hp::abs(z.re() - HPReal(k, z.precision())) < tol)) {
        throw PrecisionExhausted(std::string(what) + ": value not near an integer at index " +
                                 std::to_string(n));
    }
    return k;
}

}  // namespace

BinetConstants binet_constants(Bits bits) {
    if (bits < 64) throw DomainError("binet_constants: precision must be at least 64 bits");
    RootTriple roots = compute_roots(bits);
    const auto& [a, b, c] = roots;
    const auto t = initial_matrices(MatrixKind::TribMatrix);
    const auto k = initial_matrices(MatrixKind::LucasMatrix);
    BinetConstants out{roots,
                       constant_for(a, c, b, t), constant_for(b, c, a, t), constant_for(c, b, a, t),
                       constant_for(a, c, b, k), constant_for(b, c, a, k), constant_for(c, b, a, k)};
    return out;
}

BigInt binet_trib(Index n, const RootTriple& roots, std::uint64_t* multiplications) {
    const auto& [a, b, c] = roots;
    const HPComplex ta = hp::pow(a, n + 1, multiplications) / ((a - b) * (a - c));
    const HPComplex tb = hp::pow(b, n + 1, multiplications) / ((b - a) * (b - c));
    const HPComplex tc = hp::pow(c, n + 1, multiplications) / ((c - a) * (c - b));
    check_error_budget(hp::abs1(ta) + hp::abs1(tb) + hp::abs1(tc), n, roots.precision(), "binet_trib");
    return round_to_integer(ta + tb + tc, "binet_trib", n);
}

BigInt binet_trib(Index n, Bits bits) { return binet_trib(n, compute_roots(bits)); }

BigInt binet_lucas(Index n, const RootTriple& roots, std::uint64_t* multiplications) {
    const HPComplex ta = hp::pow(roots.alpha, n, multiplications);
    const HPComplex tb = hp::pow(roots.beta, n, multiplications);
    const HPComplex tc = hp::pow(roots.gamma, n, multiplications);
    check_error_budget(hp::abs1(ta) + hp::abs1(tb) + hp::abs1(tc), n, roots.precision(), "binet_lucas");
    return round_to_integer(ta + tb + tc, "binet_lucas", n);
}

BigInt binet_lucas(Index n, Bits bits) { return binet_lucas(n, compute_roots(bits)); }

Mat3 binet_matrix(MatrixKind kind, Index n, const BinetConstants& k) {
    const bool trib = kind == MatrixKind::TribMatrix;
    const CMat3& ca = trib ? k.a1 : k.a2;
    const CMat3& cb = trib ? k.b1 : k.b2;
    const CMat3& cc = trib ? k.c1 : k.c2;
    const HPComplex pa = hp::pow(k.roots.alpha, n);
    const HPComplex pb = hp::pow(k.roots.beta, n);
    const HPComplex pc = hp::pow(k.roots.gamma, n);

    const HPReal magnitude = max_abs(ca) * hp::abs(pa) + max_abs(cb) * hp::abs(pb) + max_abs(cc) * hp::abs(pc);
    check_error_budget(magnitude, n, k.roots.precision(), "binet_matrix");

    const CMat3 sum = pa * ca + pb * cb + pc * cc;
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = round_to_integer(sum[i * 3 + j], "binet_matrix", n);
    return out;
}

Mat3 binet_matrix(MatrixKind kind, Index n, Bits bits) {
    return binet_matrix(kind, n, binet_constants(bits));
}

ConstantAlgebraReport check_constant_algebra(Bits bits, double epsilon) {
    const BinetConstants k = binet_constants(bits);
    ConstantAlgebraReport report{bits, epsilon, {}, true};
    auto add = [&](std::string relation, const CMat3& m) {
        const double dev = max_abs(m).to_double();
        const bool ok = dev < epsilon;
        report.pass = report.pass && ok;
        report.checks.push_back({std::move(relation), dev, ok});
    };

    const std::array<std::pair<const char*, const CMat3*>, 3> first{
        {{"A1", &k.a1}, {"B1", &k.b1}, {"C1", &k.c1}}};
    const std::array<std::pair<const char*, const CMat3*>, 3> second{
        {{"A2", &k.a2}, {"B2", &k.b2}, {"C2", &k.c2}}};

    for (const auto& [name, m] : first) add(std::string(name) + "^2 - " + name, (*m) * (*m) - *m);
    for (const auto* group : {&first, &second}) {
        for (const auto& [ln, lm] : *group) {
            for (const auto& [rn, rm] : *group) {
                if (lm == rm) continue;
                add(std::string(ln) + "*" + rn, (*lm) * (*rm));
            }
        }
    }
    return report;
}

Bits suggested_precision(Index n) {
    const double mag = static_cast<double>(n < 0 ? -n : n) * 0.88;
    const auto bits = static_cast<Bits>(std::ceil((mag + 96.0) / 64.0) * 64.0);
    return std::max<Bits>(bits, hp::kDefaultPrecision);
}

}  // namespace tribkit
