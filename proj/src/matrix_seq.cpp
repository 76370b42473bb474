#include "tribkit/matrix_seq.hpp"

#include <utility>

namespace tribkit {

std::string_view to_string(MatrixKind kind) {
    return kind == MatrixKind::TribMatrix ? "TM" : "KM";
}

std::array<Mat3, 3> initial_matrices(MatrixKind kind) {
    if (kind == MatrixKind::TribMatrix) {
        return {Mat3::identity(),
                Mat3{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}},
                Mat3{{2, 2, 1}, {1, 1, 1}, {1, 0, 0}}};
    }
    return {Mat3{{1, 2, 3}, {3, -2, -1}, {-1, 4, -1}},
            Mat3{{3, 4, 1}, {1, 2, 3}, {3, -2, -1}},
            Mat3{{7, 4, 3}, {3, 4, 1}, {1, 2, 3}}};
}

Mat3 closed_form(const std::array<BigInt, 5>& w) {
    // w[k] = X(n - 3 + k)
    const BigInt& xm3 = w[0];
    const BigInt& xm2 = w[1];
    const BigInt& xm1 = w[2];
    const BigInt& x0 = w[3];
    const BigInt& xp1 = w[4];
    Mat3 m;
    m(0, 0) = xp1;
    m(0, 1) = x0 + xm1;
    m(0, 2) = x0;
    m(1, 0) = x0;
    m(1, 1) = xm1 + xm2;
    m(1, 2) = xm1;
    m(2, 0) = xm1;
    m(2, 1) = xm2 + xm3;
    m(2, 2) = xm2;
    return m;
}

namespace {

Mat3 closed_form_at(SequenceKind kind, Index n) {
    auto v = term_range(kind, n - 3, n + 1);
    std::array<BigInt, 5> w;
    for (std::size_t i = 0; i < 5; ++i) w[i] = std::move(v[i]);
    return closed_form(w);
}

}  // namespace

Mat3 iterate_matrix(MatrixKind kind, Index n) {
    auto [a, b, c] = initial_matrices(kind);
    if (n >= 0) {
        for (Index i = 0; i < n; ++i) {
            a += b;
            a += c;
            std::swap(a, b);
            std::swap(b, c);
        }
        return a;
    }
    // (a, b, c) = (X(k), X(k+1), X(k+2)); X(k-1) = X(k+2) - X(k+1) - X(k).
    for (Index i = 0; i > n; --i) {
        c -= b;
        c -= a;
        std::swap(b, c);
        std::swap(a, b);
    }
    return a;
}

Mat3 t_matrix(Index n, TStrategy strategy, OpCounter* ops) {
    switch (strategy) {
        case TStrategy::Iterate: return iterate_matrix(MatrixKind::TribMatrix, n);
        case TStrategy::ClosedForm: return closed_form_at(SequenceKind::Tribonacci, n);
        case TStrategy::MatPow:
            if (n < 0) return iterate_matrix(MatrixKind::TribMatrix, n);
            return mat_pow(initial_matrices(MatrixKind::TribMatrix)[1], n, ops);
    }
    return {};
}

Mat3 k_matrix(Index n, KStrategy strategy) {
    switch (strategy) {
        case KStrategy::Iterate: return iterate_matrix(MatrixKind::LucasMatrix, n);
        case KStrategy::ClosedForm: return closed_form_at(SequenceKind::TribonacciLucas, n);
        case KStrategy::FromT:
            return mat_mul(initial_matrices(MatrixKind::LucasMatrix)[0],
                           t_matrix(n, TStrategy::MatPow));
    }
    return {};
}

Mat3 seq_matrix(MatrixKind kind, Index n) {
    return kind == MatrixKind::TribMatrix ? t_matrix(n) : k_matrix(n);
}

BigInt trib_fast(Index n, OpCounter* ops) {
    if (n < 0) return trib(n);
    return t_matrix(n, TStrategy::MatPow, ops).scalar();
}

}  // namespace tribkit
