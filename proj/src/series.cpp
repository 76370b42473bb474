#include "tribkit/series.hpp"

#include <string>

#include "tribkit/errors.hpp"

namespace tribkit {

std::string_view to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Tribonacci: return "T";
        case SeriesKind::TribonacciLucas: return "K";
        case SeriesKind::TribMatrix: return "TM";
        case SeriesKind::LucasMatrix: return "KM";
    }
    return "?";
}

SeriesKind series_kind(SequenceKind k) {
    return k == SequenceKind::Tribonacci ? SeriesKind::Tribonacci : SeriesKind::TribonacciLucas;
}

SeriesKind series_kind(MatrixKind k) {
    return k == MatrixKind::TribMatrix ? SeriesKind::TribMatrix : SeriesKind::LucasMatrix;
}

Value series_term(SeriesKind kind, Index n) {
    switch (kind) {
        case SeriesKind::Tribonacci: return trib(n);
        case SeriesKind::TribonacciLucas: return lucas_trib(n);
        case SeriesKind::TribMatrix: return t_matrix(n);
        case SeriesKind::LucasMatrix: return k_matrix(n);
    }
    throw DomainError("series_term: unknown kind");
}

// ---------------------------------------------------------------------------
// Generating functions

template <typename Coeff>
std::vector<Coeff> PolyRational<Coeff>::coefficients(Index count) const {
    if (count < 1) throw DomainError("coefficient count must be at least 1");
    if (denominator.empty() || denominator[0] != 1)
        throw DomainError("denominator must have constant term 1");

    std::vector<Coeff> c;
    c.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
        Coeff ci = i < numerator.size() ? numerator[i] : Coeff{};
        for (std::size_t k = 1; k < denominator.size() && k <= i; ++k) {
            if (denominator[k] == 0) continue;
            ci -= denominator[k] * c[i - k];
        }
        c.push_back(std::move(ci));
    }
    return c;
}

template struct PolyRational<BigInt>;
template struct PolyRational<Mat3>;

PolyRational<BigInt> scalar_generating_function(SequenceKind kind) {
    PolyRational<BigInt> g;
    if (kind == SequenceKind::Tribonacci)
        g.numerator = {BigInt(0), BigInt(1)};
    else
        g.numerator = {BigInt(3), BigInt(-2), BigInt(-1)};
    return g;
}

std::array<Mat3, 3> matrix_numerator(MatrixKind kind) {
    if (kind == MatrixKind::TribMatrix) {
        // [1      x + x^2  x          ]
        // [x      1 - x    x^2        ]
        // [x^2    x - x^2  1 - x - x^2]
        return {Mat3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                Mat3{{0, 1, 1}, {1, -1, 0}, {0, 1, -1}},
                Mat3{{0, 1, 0}, {0, 0, 1}, {1, -1, -1}}};
    }
    // [1 + 2x + 3x^2   2 + 2x - 2x^2   3 - 2x - x^2 ]
    // [3 - 2x - x^2   -2 + 4x + 4x^2  -1 + 4x - x^2 ]
    // [-1 + 4x - x^2   4 - 6x         -1 + 5x^2     ]
    return {Mat3{{1, 2, 3}, {3, -2, -1}, {-1, 4, -1}},
            Mat3{{2, 2, -2}, {-2, 4, 4}, {4, -6, 0}},
            Mat3{{3, -2, -1}, {-1, 4, -1}, {-1, 0, 5}}};
}

std::array<Mat3, 3> matrix_numerator_from_initial(MatrixKind kind) {
    const auto [x0, x1, x2] = initial_matrices(kind);
    return {x0, x1 - x0, x2 - x1 - x0};
}

PolyRational<Mat3> matrix_generating_function(MatrixKind kind) {
    PolyRational<Mat3> g;
    const auto num = matrix_numerator(kind);
    g.numerator.assign(num.begin(), num.end());
    return g;
}

std::vector<BigInt> gf_coeffs(SequenceKind kind, Index count) {
    return scalar_generating_function(kind).coefficients(count);
}

std::vector<Mat3> gf_matrix_coeffs(MatrixKind kind, Index count) {
    return matrix_generating_function(kind).coefficients(count);
}

// ---------------------------------------------------------------------------
// Partial sums

void validate(const SumSpec& s) {
    if (!(s.m > s.j && s.j >= 0)) {
        throw DomainError("sum requires m > j >= 0 (got m=" + std::to_string(s.m) +
                          ", j=" + std::to_string(s.j) + ")");
    }
    if (s.n < 1) throw DomainError("sum requires n >= 1 (got n=" + std::to_string(s.n) + ")");
}

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw DivisibilityViolation("partial_sum: " + den.get_str() + " does not divide " + num.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Mat3 exact_div(const Mat3& num, const BigInt& den) {
    Mat3 q;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) q(i, j) = exact_div(num(i, j), den);
    return q;
}

template <typename T>
Value closed_sum(const SumSpec& s, const TermSource& terms, const BigInt& km, const BigInt& den) {
    auto x = [&](Index i) { return std::get<T>(terms(s.kind, i)); };
    const Index m = s.m, j = s.j, n = s.n;
    const BigInt c = 1 - km;
    T num = x(m * n + m + j) + x(m * n - m + j) + c * x(m * n + j);
    num -= x(m + j) + x(j - m) + c * x(j);
    return exact_div(num, den);
}

}  // namespace

Value partial_sum(const SumSpec& s, const TermSource& terms) {
    validate(s);
    const BigInt km = lucas_trib(s.m);
    const BigInt den = km - lucas_trib(-s.m);
    if (den == 0) throw DegenerateDenominator("partial_sum: K(m) == K(-m) for m=" + std::to_string(s.m));
    if (is_matrix(s.kind)) return closed_sum<Mat3>(s, terms, km, den);
    return closed_sum<BigInt>(s, terms, km, den);
}

Value partial_sum_bruteforce(const SumSpec& s, const TermSource& terms) {
    validate(s);
    Value acc = is_matrix(s.kind) ? Value(Mat3{}) : Value(BigInt(0));
    for (Index i = 0; i < s.n; ++i) {
        Value t = terms(s.kind, s.m * i + s.j);
        std::visit(
            [&](auto& a) {
                using T = std::decay_t<decltype(a)>;
                a += std::get<T>(t);
            },
            acc);
    }
    return acc;
}

BigInt prefix_sum(SequenceKind kind, Index n) {
    if (n < 1) throw DomainError("prefix_sum requires n >= 1");
    const auto v = term_range(kind, n, n + 2);
    BigInt num = v[2] - v[0];
    if (kind == SequenceKind::Tribonacci) num -= 1;
    return exact_div(num, BigInt(2));
}

}  // namespace tribkit
